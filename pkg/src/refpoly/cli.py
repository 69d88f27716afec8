"""Command line entry point.

Every subcommand reads PALP records (file argument or stdin) and writes one
JSON line per record to stdout. Exit status: 0 all checks passed, 1 a
mathematical check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .lemmas import verify_lemma_suite
from .linalg import lattice_index, quotient_invariants
from .palp import PalpError, parse_palp, record_from_points, write_palp
from .polygons import enumerate_reflexive_polygons
from .polytope import PolytopeError, build_polytope, dual, is_reflexive
from .report import dumps, emit_report, invariants_dict, lambda_dict
from .skeleton import lambda_k, mirror_torsion_check, roots
from .verify import LambdaInfo, standard_corpus, verify_theorem

log = logging.getLogger("refpoly")

OK, FAILED, BAD_INPUT = 0, 1, 2


class _Status:
    def __init__(self):
        self.code = OK

    def fail(self):
        self.code = FAILED

    def bad_input(self):
        if self.code == OK:
            self.code = BAD_INPUT


def _records(args, status: _Status):
    errors: list[PalpError] = []
    stream = sys.stdin if args.input == "-" else open(args.input)
    try:
        recs = parse_palp(stream, strict=args.strict, errors=errors)
    finally:
        if stream is not sys.stdin:
            stream.close()
    if errors:
        status.bad_input()
    return recs


def _polytopes(args, status: _Status):
    """Yield (id, polytope-or-None) per record; bad geometry reports and yields None."""
    for i, rec in enumerate(_records(args, status)):
        rid = rec.comment or f"record-{i}"
        try:
            yield rid, build_polytope(rec.points(args.transpose))
        except PolytopeError as exc:
            print(f"{rid}: {exc}", file=sys.stderr)
            status.bad_input()
            yield rid, None


def _need_reflexive(rid, P, status) -> bool:
    if P is None:
        return False
    if not is_reflexive(P):
        print(f"{rid}: not reflexive", file=sys.stderr)
        status.bad_input()
        return False
    return True


def cmd_check(args, status):
    for rid, P in _polytopes(args, status):
        if P is None:
            continue
        out = {"id": rid, "n": P.dim, "reflexive": is_reflexive(P), "vertices": [list(v) for v in P.vertices]}
        if out["reflexive"]:
            out["dual"] = [list(v) for v in dual(P).vertices]
        print(dumps(out))


def cmd_lambda(args, status):
    for rid, P in _polytopes(args, status):
        if not _need_reflexive(rid, P, status):
            continue
        ks = range(P.dim + 1) if args.k is None else [args.k]
        if args.k is not None and not 0 <= args.k <= P.dim:
            print(f"{rid}: k={args.k} outside 0..{P.dim}", file=sys.stderr)
            status.bad_input()
            continue
        infos = []
        for k in ks:
            lat = lambda_k(P, k).lattice
            infos.append(lambda_dict(LambdaInfo(k, lattice_index(lat), quotient_invariants(lat))))
        print(dumps({"id": rid, "n": P.dim, "lambda": infos}))


def cmd_roots(args, status):
    for rid, P in _polytopes(args, status):
        if not _need_reflexive(rid, P, status):
            continue
        rs = [{"point": list(r.point), "facet": r.facet_index, "normal": list(r.normal)} for r in roots(P)]
        print(dumps({"id": rid, "n": P.dim, "roots": rs}))


def cmd_lemmas(args, status):
    for rid, P in _polytopes(args, status):
        if not _need_reflexive(rid, P, status):
            continue
        rep = verify_lemma_suite(P)
        for v in rep.violations:
            print(f"{rid}: VIOLATION {v}", file=sys.stderr)
        if not rep.ok:
            status.fail()
        print(dumps({"id": rid, "n": P.dim, **rep.summary()}))


def _verify_one(item):
    rid, P, with_lemmas = item
    return verify_theorem(P, rid, lemmas=with_lemmas, strict=False)


def _run_verify(args, status, items):
    work = [(rid, P, None) for rid, P in items if P is not None]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, work))
    else:
        reports = [_verify_one(w) for w in work]
    by_id = iter(reports)
    done = []
    for rid, P in items:
        if P is None:
            print(dumps({"id": rid, "error": "invalid polytope"}))
            continue
        rep = next(by_id)
        done.append(rep)
        if not rep.passed:
            print(f"{rid}: FATAL {rep.fatal or 'check failed'}", file=sys.stderr)
            status.fail()
        print(emit_report(rep, certificates=args.certificates))
    if args.figure:
        from .plotting import plot_lambda_indices

        print(f"figure: {plot_lambda_indices(done, args.figure)}", file=sys.stderr)


def cmd_verify(args, status):
    _run_verify(args, status, list(_polytopes(args, status)))


def cmd_batch(args, status):
    _run_verify(args, status, list(_polytopes(args, status)))


def cmd_enumerate(args, status):
    classes = enumerate_reflexive_polygons(args.box)
    for i, c in enumerate(classes):
        print(dumps({
            "class": i,
            "vertices": [list(v) for v in c.representative.vertices],
            "vertex_count": c.vertex_count,
            "lambda0_index": c.lambda0_index,
        }))
    exc = sorted((c.lambda0_index for c in classes if c.lambda0_index > 1))
    print(f"classes={len(classes)} exceptional={len(exc)} indices={','.join(map(str, exc))}")
    if args.figure:
        from .plotting import plot_polygon_gallery

        print(f"figure: {plot_polygon_gallery(classes, args.figure)}", file=sys.stderr)


def cmd_mirror(args, status):
    for rid, P in _polytopes(args, status):
        if not _need_reflexive(rid, P, status):
            continue
        if P.dim != 4:
            print(f"{rid}: mirror check needs dimension 4, got {P.dim}", file=sys.stderr)
            status.bad_input()
            continue
        rep = mirror_torsion_check(P)
        if not rep.agree:
            status.fail()
        print(dumps({
            "id": rid,
            "M_mod_lambda2": invariants_dict(rep.m_side),
            "wedge2N_mod_N_wedge_dual_lambda1": invariants_dict(rep.n_side),
            "agree": rep.agree,
        }))


def cmd_corpus(args, status):
    entries = standard_corpus(args.max_dim)
    sys.stdout.write(write_palp(record_from_points(e.polytope.vertices, e.id) for e in entries))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="refpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def reader(name, func, help, strict=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", nargs="?", default="-", help="PALP file (default: stdin)")
        p.add_argument("--transpose", action="store_true", help="flip the rows/columns orientation")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--strict", dest="strict", action="store_true")
        mode.add_argument("--lenient", dest="strict", action="store_false")
        p.set_defaults(func=func, strict=strict)
        return p

    reader("check", cmd_check, "reflexivity and dual vertices")
    reader("lambda", cmd_lambda, "skeleton lattice invariants").add_argument("--k", type=int)
    reader("roots", cmd_roots, "lattice points interior to facets")
    reader("lemmas", cmd_lemmas, "classify all pairs of boundary points")
    for name, func, strict in (("verify", cmd_verify, False), ("batch", cmd_batch, True)):
        p = reader(name, func, "codimension-two skeleton check with certificates", strict)
        p.add_argument("--certificates", action="store_true", help="include certificates in output")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--figure", help="write a plot of skeleton lattice indices here")
    reader("mirror-check", cmd_mirror, "compare the two torsion groups of a 4-polytope")

    p = sub.add_parser("enumerate-2d", help="reflexive polygons up to equivalence")
    p.add_argument("--box", type=int, default=3)
    p.add_argument("--figure", help="write a gallery of the polygons here")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("corpus", help="write the standard corpus as PALP")
    p.add_argument("--max-dim", type=int, default=4, choices=(2, 3, 4))
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    status = _Status()
    try:
        args.func(args, status)
    except PalpError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return BAD_INPUT
    return status.code


if __name__ == "__main__":
    sys.exit(main())
