"""Skeleton lattices, Demazure roots and exterior-square quotients."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .linalg import (
    AbelianInvariants,
    IntVector,
    Sublattice,
    dot,
    full_lattice,
    lattice_from_generators,
    lattice_index,
    quotient_invariants,
)
from .polytope import LatticePolytope, NotReflexive, PolytopeError, dual, is_reflexive, lattice_points


class NotARoot(ValueError):
    pass


@dataclass(frozen=True)
class Root:
    point: IntVector
    facet_index: int
    normal: IntVector


@dataclass(frozen=True)
class RootSet:
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.by_point

    @property
    def points(self) -> tuple[IntVector, ...]:
        return tuple(r.point for r in self.roots)

    @property
    def by_point(self) -> dict[IntVector, Root]:
        return {r.point: r for r in self.roots}


@dataclass(frozen=True)
class SkeletonLattice:
    k: int
    lattice: Sublattice
    generators: tuple[IntVector, ...]

    @property
    def index(self) -> int | None:
        return lattice_index(self.lattice)


def _check_k(P: LatticePolytope, k: int) -> None:
    if not 0 <= k <= P.dim:
        raise ValueError(f"k={k} outside 0..{P.dim}")


def k_skeleton_points(P: LatticePolytope, k: int) -> tuple[IntVector, ...]:
    """Lattice points on faces of dimension <= k (k = dim P adds the interior)."""
    _check_k(P, k)
    interior, boundary = lattice_points(P)
    if k == P.dim:
        return tuple(sorted(interior + boundary))
    fl = P.face_lattice
    return tuple(x for x in boundary if fl.face_of(x).dim <= k)


def lambda_k(P: LatticePolytope, k: int) -> SkeletonLattice:
    gens = k_skeleton_points(P, k)
    return SkeletonLattice(k, lattice_from_generators(gens, P.dim), gens)


def quotient_M_mod_lambda(P: LatticePolytope, k: int) -> AbelianInvariants:
    return quotient_invariants(lambda_k(P, k).lattice)


def roots(P: LatticePolytope) -> RootSet:
    """Lattice points in the relative interiors of facets."""
    if not is_reflexive(P):
        raise NotReflexive(f"{P} is not reflexive")
    fl = P.face_lattice
    out = []
    for face in fl.faces(P.dim - 1):
        (fi,) = face.facets
        for x in face.points:
            out.append(Root(x, fi, P.facets[fi].normal))
    out.sort(key=lambda r: r.point)
    return RootSet(tuple(out))


def root_of(P: LatticePolytope, x: Sequence[int]) -> Root:
    x = tuple(x)
    face = P.face_lattice.point_face.get(x)
    if face is None or face.dim != P.dim - 1:
        raise NotARoot(f"{x} is not in the relative interior of a facet")
    (fi,) = face.facets
    return Root(x, fi, P.facets[fi].normal)


def is_orthogonal_pair(P: LatticePolytope, x: Sequence[int], y: Sequence[int]) -> bool:
    rx, ry = root_of(P, x), root_of(P, y)
    return dot(rx.normal, ry.point) == 0 == dot(ry.normal, rx.point)


# ---------------------------------------------------------------------------
# exterior square


def wedge_index(n: int) -> dict[tuple[int, int], int]:
    """Position of e_i ^ e_j (i < j) in the lexicographic basis of the exterior square."""
    return {pair: k for k, pair in enumerate(combinations(range(n), 2))}


def wedge(u: Sequence[int], v: Sequence[int]) -> IntVector:
    n = len(u)
    out = [0] * (n * (n - 1) // 2)
    for (i, j), k in wedge_index(n).items():
        out[k] = u[i] * v[j] - u[j] * v[i]
    return tuple(out)


def exterior_square_quotient(n: int, sub: Sublattice) -> AbelianInvariants:
    """Invariants of wedge^2 Z^n / (Z^n wedge sub)."""
    if sub.ambient_dim != n:
        raise ValueError(f"sublattice lives in Z^{sub.ambient_dim}, not Z^{n}")
    m = n * (n - 1) // 2
    if m == 0:
        return AbelianInvariants()
    gens = []
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        for b in sub.basis:
            gens.append(wedge(e, b))
    return quotient_invariants(lattice_from_generators(gens, m))


def torsion_dual(g: AbelianInvariants) -> AbelianInvariants:
    """Hom(G, Q/Z) for a finite abelian group G, which has the same invariants."""
    if g.free_rank:
        raise ValueError("Hom into Q/Z is only taken of finite groups here")
    return AbelianInvariants(0, g.torsion)


@dataclass(frozen=True)
class MirrorReport:
    m_side: AbelianInvariants  # M / Lambda_2(P)
    n_side: AbelianInvariants  # wedge^2 N / (N wedge Lambda_1(P*))

    @property
    def agree(self) -> bool:
        return self.m_side == self.n_side


def mirror_torsion_check(P: LatticePolytope) -> MirrorReport:
    if P.dim != 4:
        raise PolytopeError("the mirror torsion check is defined for 4-dimensional polytopes")
    if not is_reflexive(P):
        raise NotReflexive(f"{P} is not reflexive")
    m_side = quotient_M_mod_lambda(P, 2)
    edges_of_dual = lambda_k(dual(P), 1).lattice
    return MirrorReport(m_side, exterior_square_quotient(4, edges_of_dual))


def boundary_generates_lattice(P: LatticePolytope) -> bool:
    return lambda_k(P, P.dim - 1).lattice == full_lattice(P.dim)
