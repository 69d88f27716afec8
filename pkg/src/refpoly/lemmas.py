"""Pair classification of boundary lattice points of a reflexive polytope.

For boundary lattice points x, y exactly one holds: they share a facet,
x + y = 0, or x + y is again on the boundary. In the last case there is a
unique positive combination z = a*x + b*y on the boundary sharing a facet
with x and a facet with y; a = 1 or b = 1, and a = <eta_x, y> + 1 when x
lies in the relative interior of a facet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence, Union

from .linalg import IntVector, dot
from .polytope import LatticePolytope, NotReflexive, is_reflexive, lattice_points
from .skeleton import NotARoot, is_orthogonal_pair, k_skeleton_points, lambda_k, root_of


class LemmaViolation(AssertionError):
    """A pair of boundary points contradicts the classification."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class CommonFacet:
    facet_index: int


@dataclass(frozen=True)
class Antipodal:
    pass


@dataclass(frozen=True)
class ZWitness:
    a: int
    b: int
    z: IntVector


PairClass = Union[CommonFacet, Antipodal, ZWitness]


@dataclass(frozen=True)
class PairScan:
    """Raw evidence behind :func:`classify_pair`."""

    common_facets: tuple[int, ...]
    antipodal: bool
    sum_on_boundary: bool
    hits: tuple[tuple[int, int], ...]  # all (a, b) with a*x + b*y on the boundary
    witnesses: tuple[tuple[int, int], ...]  # hits also sharing facets with x and y
    bound: int


def _require_boundary(P: LatticePolytope, x: Sequence[int]) -> IntVector:
    x = tuple(x)
    if len(x) != P.dim or not P.on_boundary(x):
        raise PreconditionError(f"{x} is not a boundary lattice point of {P}")
    return x


def coefficient_bound(P: LatticePolytope, x: Sequence[int], y: Sequence[int]) -> int:
    """Upper bound on a for any a*x + b*y in P (x, y linearly independent).

    Cramer's rule on the coordinate pair with the largest 2x2 minor.
    """
    r = max(abs(c) for v in P.vertices for c in v)
    best = None
    for i, j in combinations(range(P.dim), 2):
        d = abs(x[i] * y[j] - x[j] * y[i])
        if d and (best is None or d > best[0]):
            best = (d, i, j)
    if best is None:
        raise LemmaViolation(f"{x} and {y} are parallel")
    d, i, j = best
    return r * (abs(y[i]) + abs(y[j])) // d


def scan_pair(P: LatticePolytope, x: Sequence[int], y: Sequence[int]) -> PairScan:
    x, y = _require_boundary(P, x), _require_boundary(P, y)
    tx, ty = set(P.tight_facets(x)), set(P.tight_facets(y))
    common = tuple(sorted(tx & ty))
    s = tuple(a + b for a, b in zip(x, y))
    antipodal = not any(s)
    on_bdry = not antipodal and P.on_boundary(s)
    if common or antipodal:
        return PairScan(common, antipodal, on_bdry, (), (), 0)
    bound = coefficient_bound(P, x, y)
    hits, witnesses = [], []
    cx = [f.value(x) for f in P.facets]
    cy = [f.value(y) for f in P.facets]
    for a in range(1, bound + 1):
        lo, hi, feasible = 1, None, True
        for u, v in zip(cx, cy):
            # a*u + b*v >= -1
            rest = -1 - a * u
            if v > 0:
                lo = max(lo, -(-rest // v))
            elif v < 0:
                q = rest // v  # b <= rest / v, v negative
                hi = q if hi is None else min(hi, q)
            elif rest > 0:
                feasible = False
        if not feasible or hi is None:
            continue
        for b in range(lo, hi + 1):
            z = tuple(a * p + b * q for p, q in zip(x, y))
            tz = set(P.tight_facets(z))
            if tz:
                hits.append((a, b))
                if tz & tx and tz & ty:
                    witnesses.append((a, b))
    return PairScan(common, antipodal, on_bdry, tuple(hits), tuple(witnesses), bound)


def classify_pair(P: LatticePolytope, x: Sequence[int], y: Sequence[int]) -> PairClass:
    sc = scan_pair(P, x, y)
    found = [bool(sc.common_facets), sc.antipodal, sc.sum_on_boundary]
    if sum(found) != 1:
        raise LemmaViolation(f"pair {tuple(x)}, {tuple(y)} satisfies {sum(found)} cases")
    if sc.common_facets:
        return CommonFacet(sc.common_facets[0])
    if sc.antipodal:
        return Antipodal()
    if len(sc.witnesses) != 1:
        raise LemmaViolation(
            f"pair {tuple(x)}, {tuple(y)}: {len(sc.witnesses)} witnesses within a <= {sc.bound}"
        )
    a, b = sc.witnesses[0]
    return ZWitness(a, b, tuple(a * p + b * q for p, q in zip(x, y)))


def p_of(P: LatticePolytope, x: Sequence[int], y: Sequence[int]) -> IntVector:
    """``<eta_x, y> * x + y`` for a root x and a boundary point y off its facet."""
    rx = root_of(P, x)
    y = _require_boundary(P, y)
    t = dot(rx.normal, y)
    if t == -1:
        raise PreconditionError(f"{y} lies on the facet of {rx.point}")
    if t < 1:
        raise PreconditionError(f"<eta_x, y> = {t} < 1")
    if not any(a + b for a, b in zip(rx.point, y)):
        raise PreconditionError("y = -x")
    return tuple(t * a + b for a, b in zip(rx.point, y))


@dataclass
class LemmaReport:
    pairs: int = 0
    common_facet: int = 0
    antipodal: int = 0
    z_witness: int = 0
    max_bound: int = 0
    p_checked: int = 0
    p_is_root: int = 0
    p_orthogonal: int = 0
    p_outside_lambda: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {
            "pairs": self.pairs,
            "common_facet": self.common_facet,
            "antipodal": self.antipodal,
            "z_witness": self.z_witness,
            "scan_bound": self.max_bound,
            "p_checked": self.p_checked,
            "p_root": self.p_is_root,
            "p_orthogonal": self.p_orthogonal,
            "p_outside_lambda": self.p_outside_lambda,
            "violations": len(self.violations),
        }


def verify_lemma_suite(P: LatticePolytope) -> LemmaReport:
    """Classify every ordered pair of distinct boundary lattice points."""
    if not is_reflexive(P):
        raise NotReflexive(f"{P} is not reflexive")
    _, boundary = lattice_points(P)
    facet_pts = set(k_skeleton_points(P, P.dim - 1))
    lam = lambda_k(P, max(P.dim - 2, 0)).lattice
    rep = LemmaReport()
    for x in boundary:
        try:
            rx = root_of(P, x)
        except NotARoot:
            rx = None
        for y in boundary:
            if x == y:
                continue
            rep.pairs += 1
            sc = scan_pair(P, x, y)
            rep.max_bound = max(rep.max_bound, sc.bound)
            cases = [bool(sc.common_facets), sc.antipodal, sc.sum_on_boundary]
            if sum(cases) != 1:
                rep.violations.append(f"trichotomy {x} {y}: {cases}")
                continue
            if sc.common_facets:
                rep.common_facet += 1
                continue
            if sc.antipodal:
                rep.antipodal += 1
                continue
            rep.z_witness += 1
            if len(sc.witnesses) != 1:
                rep.violations.append(f"uniqueness {x} {y}: witnesses {sc.witnesses}")
                continue
            a, b = sc.witnesses[0]
            if a != 1 and b != 1:
                rep.violations.append(f"a=1 or b=1 {x} {y}: ({a},{b})")
            if rx is None:
                continue
            t = dot(rx.normal, y)
            if a != t + 1:
                rep.violations.append(f"a = <eta_x,y>+1 {x} {y}: a={a}, pairing={t}")
            if t >= 1:
                p = p_of(P, x, y)
                z = tuple(a * u + b * v for u, v in zip(x, y))
                rep.p_checked += 1
                if not P.on_boundary(p) or dot(rx.normal, p) != 0:
                    rep.violations.append(f"p({x},{y}) = {p} off boundary or not orthogonal to eta_x")
                if b != 1 or p != tuple(u - v for u, v in zip(z, x)):
                    rep.violations.append(f"p({x},{y}) = {p} is not z - x for z = {z}")
                # the remaining conclusions need x outside the lattice, so only tallied
                if p in facet_pts and P.face_lattice.face_of(p).dim == P.dim - 1:
                    rep.p_is_root += 1
                    if is_orthogonal_pair(P, x, p):
                        rep.p_orthogonal += 1
                if p not in lam:
                    rep.p_outside_lambda += 1
    return rep
