"""Codimension-two skeleton check with explicit lattice certificates."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .linalg import (
    AbelianInvariants,
    IntVector,
    Sublattice,
    full_lattice,
    hnf,
    lattice_from_generators,
    lattice_index,
    lattice_membership,
    quotient_invariants,
    vecmat,
)
from .lemmas import verify_lemma_suite
from .polygons import enumerate_reflexive_polygons
from .polytope import LatticePolytope, NotReflexive, build_polytope, dual, is_reflexive, product
from .skeleton import k_skeleton_points, lambda_k, roots

log = logging.getLogger(__name__)


class CertificateError(AssertionError):
    """A root is not in the codimension-two skeleton lattice."""


@dataclass(frozen=True)
class RootCertificate:
    root: IntVector
    generators: tuple[IntVector, ...]
    coefficients: tuple[int, ...]

    def evaluate(self) -> IntVector:
        return vecmat(self.coefficients, self.generators) if self.generators else ()

    def is_valid(self) -> bool:
        return self.evaluate() == self.root


@dataclass(frozen=True)
class LambdaInfo:
    k: int
    index: int | None
    quotient: AbelianInvariants


@dataclass
class VerificationReport:
    id: str
    n: int
    reflexive: bool
    vertices: tuple[IntVector, ...] = ()
    lambdas: list[LambdaInfo] = field(default_factory=list)
    flags: dict[str, bool] = field(default_factory=dict)
    certificates: list[RootCertificate] = field(default_factory=list)
    lemmas: dict | None = None
    fatal: str | None = None

    @property
    def passed(self) -> bool:
        """False only when a mathematical check failed."""
        if self.fatal:
            return False
        if self.lemmas and self.lemmas["violations"]:
            return False
        return all(c.is_valid() for c in self.certificates)


class _Certifier:
    """Expresses lattice members over a spanning subset of the skeleton points."""

    def __init__(self, points: Sequence[IntVector], n: int):
        span: list[IntVector] = []
        lat = lattice_from_generators([], n)
        for p in points:
            if p not in lat:
                span.append(p)
                lat = lattice_from_generators(span, n)
        self.generators = tuple(span)
        self.lattice = lat
        if span:
            h = hnf(span)
            self._U = h.U[: h.rank]
            assert h.H[: h.rank] == lat.basis

    def certify(self, x: IntVector) -> RootCertificate | None:
        c = lattice_membership(self.lattice, x)
        if c is None:
            return None
        if not self.generators:
            return RootCertificate(x, (), ())
        coeffs = vecmat(c, self._U)
        used = [(g, a) for g, a in zip(self.generators, coeffs) if a]
        return RootCertificate(x, tuple(g for g, _ in used), tuple(a for _, a in used))


def root_certificate(P: LatticePolytope, x: Sequence[int], _certifier: _Certifier | None = None) -> RootCertificate:
    """Write the root ``x`` as an integer combination of (n-2)-skeleton points."""
    if P.dim < 3:
        raise ValueError("certificates need dimension >= 3")
    x = tuple(x)
    if x not in roots(P):
        raise ValueError(f"{x} is not a root of {P}")
    cert = (_certifier or _Certifier(k_skeleton_points(P, P.dim - 2), P.dim)).certify(x)
    if cert is None or not cert.is_valid():
        raise CertificateError(f"root {x} of {P} is not certified by the (n-2)-skeleton")
    return cert


def verify_theorem(
    P: LatticePolytope, id: str = "", lemmas: bool | None = None, strict: bool = True
) -> VerificationReport:
    """Skeleton lattice invariants, equality flags and root certificates.

    ``lemmas=None`` runs the pair-classification suite for n <= 3 only. With
    ``strict`` a non-reflexive input raises; otherwise the report just says so.
    """
    n = P.dim
    if not is_reflexive(P):
        if strict:
            raise NotReflexive(f"{P} is not reflexive")
        return VerificationReport(id, n, False, P.vertices)
    rep = VerificationReport(id, n, True, P.vertices)
    lats: list[Sublattice] = []
    for k in range(n + 1):
        lat = lambda_k(P, k).lattice
        lats.append(lat)
        rep.lambdas.append(LambdaInfo(k, lattice_index(lat), quotient_invariants(lat)))
    M = full_lattice(n)
    if n >= 2:
        rep.flags["lambda_n-2=lambda_n-1"] = lats[n - 2] == lats[n - 1]
    rep.flags["lambda_n-1=lambda_n"] = lats[n - 1] == lats[n]
    rep.flags["lambda_n-1=M"] = lats[n - 1] == M

    if n >= 3:
        certifier = _Certifier(k_skeleton_points(P, n - 2), n)
        assert certifier.lattice == lats[n - 2]
        for r in roots(P):
            cert = certifier.certify(r.point)
            if cert is None or not cert.is_valid():
                rep.fatal = (
                    f"codimension-two skeleton misses root {r.point}; polytope {list(P.vertices)}"
                )
                log.critical(rep.fatal)
                break
            rep.certificates.append(cert)
        if not rep.flags["lambda_n-2=lambda_n-1"] and rep.fatal is None:
            rep.fatal = f"Lambda_(n-2) != Lambda_(n-1) for polytope {list(P.vertices)}"
            log.critical(rep.fatal)

    if lemmas is None:
        lemmas = n <= 3
    if lemmas:
        rep.lemmas = verify_lemma_suite(P).summary()
    return rep


# ---------------------------------------------------------------------------
# corpus


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    polytope: LatticePolytope


def cube(n: int) -> LatticePolytope:
    from itertools import product as cartesian

    return build_polytope(cartesian((-1, 1), repeat=n))


def cross_polytope(n: int) -> LatticePolytope:
    pts = []
    for i in range(n):
        for s in (1, -1):
            pts.append(tuple(s * (j == i) for j in range(n)))
    return build_polytope(pts)


def simplex(n: int) -> LatticePolytope:
    """conv{e_1, ..., e_n, -(e_1 + ... + e_n)}."""
    pts = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    pts.append((-1,) * n)
    return build_polytope(pts)


def segment() -> LatticePolytope:
    return build_polytope([(-1,), (1,)])


def standard_corpus(max_dim: int = 4) -> list[CorpusEntry]:
    if not 2 <= max_dim <= 4:
        raise ValueError("max_dim must be 2, 3 or 4")
    polys = [c.representative for c in enumerate_reflexive_polygons()]
    out = [CorpusEntry(f"polygon-{i:02d}", P) for i, P in enumerate(polys)]
    if max_dim >= 3:
        out += [
            CorpusEntry("cube-3", cube(3)),
            CorpusEntry("cross-3", cross_polytope(3)),
            CorpusEntry("simplex-3", simplex(3)),
            CorpusEntry("simplex-3-dual", dual(simplex(3))),
        ]
        out += [CorpusEntry(f"polygon-{i:02d}-times-segment", product(P, segment())) for i, P in enumerate(polys)]
    if max_dim >= 4:
        out += [
            CorpusEntry("cube-4", cube(4)),
            CorpusEntry("cross-4", cross_polytope(4)),
            CorpusEntry("simplex-4", simplex(4)),
            CorpusEntry("simplex-4-dual", dual(simplex(4))),
        ]
        for i, P in enumerate(polys):
            for j in range(i, len(polys)):
                out.append(CorpusEntry(f"polygon-{i:02d}-times-polygon-{j:02d}", product(P, polys[j])))
    return out


def _verify_entry(args) -> VerificationReport:
    entry, lemmas = args
    return verify_theorem(entry.polytope, entry.id, lemmas=lemmas, strict=False)


def verify_corpus(
    entries: Iterable[CorpusEntry], jobs: int = 1, lemmas: bool | None = None
) -> list[VerificationReport]:
    """Verify entries independently; results keep the input order."""
    work = [(e, lemmas) for e in entries]
    if jobs <= 1:
        return [_verify_entry(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_entry, work))
