"""Full-dimensional lattice polytopes in low dimension.

Everything is computed with exact integers. The convex hull is found by
brute force over affinely independent point subsets, which is plenty for
the handful of vertices a reflexive polytope of dimension <= 4 has.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .linalg import IntMatrix, IntVector, det, dot, hnf, matmul, primitive


class PolytopeError(ValueError):
    """Raised for degenerate or otherwise invalid polytope input."""


class NotReflexive(PolytopeError):
    pass


class UnsupportedDimension(PolytopeError):
    pass


@dataclass(frozen=True)
class FacetInequality:
    """Halfspace ``<normal, x> >= rhs`` with a primitive inner normal."""

    normal: IntVector
    rhs: int

    def value(self, x: Sequence[int]) -> int:
        return dot(self.normal, x)

    def is_tight(self, x: Sequence[int]) -> bool:
        return self.value(x) == self.rhs


@dataclass(frozen=True)
class Face:
    dim: int
    vertices: tuple[int, ...]
    facets: tuple[int, ...]
    points: tuple[IntVector, ...] = ()  # lattice points in the relative interior


@dataclass(frozen=True)
class FaceLattice:
    faces_by_dim: tuple[tuple[Face, ...], ...]
    point_face: dict = field(compare=False, repr=False)

    def faces(self, k: int) -> tuple[Face, ...]:
        return self.faces_by_dim[k]

    def face_of(self, point: Sequence[int]) -> Face:
        """The unique face containing ``point`` in its relative interior."""
        return self.point_face[tuple(point)]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(fs) for fs in self.faces_by_dim[:-1])


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    diffs = [tuple(a - b for a, b in zip(p, p0)) for p in points[1:]]
    diffs = [d for d in diffs if any(d)]
    if not diffs:
        return 0
    return hnf(diffs).rank


def linear_rank(vectors: Sequence[Sequence[int]]) -> int:
    vectors = [v for v in vectors if any(v)]
    return hnf(vectors).rank if vectors else 0


def _normal(p0: Sequence[int], others: Sequence[Sequence[int]]) -> IntVector:
    rows = [[a - b for a, b in zip(p, p0)] for p in others]
    n = len(p0)
    out = []
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows]
        out.append((-1) ** j * det(minor))
    return tuple(out)


def _hull_facets(points: Sequence[IntVector], n: int) -> list[tuple[FacetInequality, frozenset]]:
    found: dict[tuple, frozenset] = {}
    tight_sets: list[frozenset] = []
    for combo in itertools.combinations(range(len(points)), n):
        s = frozenset(combo)
        if any(s <= t for t in tight_sets):
            continue
        nrm = _normal(points[combo[0]], [points[i] for i in combo[1:]])
        if not any(nrm):
            continue
        nrm = primitive(nrm)
        h = dot(nrm, points[combo[0]])
        vals = [dot(nrm, p) for p in points]
        if min(vals) == h:
            key = (nrm, h)
        elif max(vals) == h:
            nrm, h = tuple(-a for a in nrm), -h
            vals = [-v for v in vals]
            key = (nrm, h)
        else:
            continue
        if key in found:
            continue
        tight = frozenset(i for i, v in enumerate(vals) if v == h)
        found[key] = tight
        tight_sets.append(tight)
    return [(FacetInequality(k[0], k[1]), t) for k, t in found.items()]


def _det_stack(m: np.ndarray) -> np.ndarray:
    """Determinants of a stack of small int64 matrices by cofactor expansion."""
    k = m.shape[-1]
    if k == 0:
        return np.ones(m.shape[:-2], dtype=np.int64)
    if k == 1:
        return m[..., 0, 0]
    if k == 2:
        return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    out = np.zeros(m.shape[:-2], dtype=np.int64)
    for j in range(k):
        minor = np.delete(m[..., 1:, :], j, axis=-1)
        out += (-1) ** j * m[..., 0, j] * _det_stack(minor)
    return out


def _fits_int64(points: Sequence[IntVector], n: int) -> bool:
    r = max(abs(a) for p in points for a in p) or 1
    normal_bound = factorial(n - 1) * (2 * r) ** (n - 1)
    return n * normal_bound * r < 2**62


def _hull_facets_np(points: Sequence[IntVector], n: int) -> list[tuple[FacetInequality, frozenset]]:
    """Vectorised twin of :func:`_hull_facets`; only valid under :func:`_fits_int64`."""
    pts = np.array(points, dtype=np.int64)
    combos = np.array(list(itertools.combinations(range(len(points)), n)), dtype=np.intp)
    base = pts[combos[:, 0]]
    diffs = pts[combos[:, 1:]] - base[:, None, :]
    normals = np.stack(
        [(-1) ** j * _det_stack(np.delete(diffs, j, axis=-1)) for j in range(n)], axis=1
    )
    g = np.gcd.reduce(np.abs(normals), axis=1)
    keep = g > 0
    normals, base = normals[keep] // g[keep, None], base[keep]
    h = (normals * base).sum(axis=1)
    vals = normals @ pts.T
    lo, hi = vals.min(axis=1), vals.max(axis=1)
    flip = (hi == h) & (lo != h)
    normals[flip] *= -1
    h[flip] *= -1
    support = (lo == h) | flip
    rows = np.unique(np.column_stack([normals[support], h[support]]), axis=0)
    out = []
    for row in rows.tolist():
        f = FacetInequality(tuple(row[:-1]), row[-1])
        out.append((f, frozenset(i for i, p in enumerate(points) if f.is_tight(p))))
    return out


@dataclass(frozen=True)
class LatticePolytope:
    """A full-dimensional lattice polytope given by its (sorted) vertices.

    Use :func:`build_polytope` to construct one; it computes the facets and
    drops redundant points.
    """

    dim: int
    vertices: tuple[IntVector, ...]
    facets: tuple[FacetInequality, ...] = field(compare=False, repr=False)

    def __str__(self) -> str:
        return f"conv{{{', '.join(str(v) for v in self.vertices)}}}"

    def contains(self, x: Sequence[int]) -> bool:
        return all(f.value(x) >= f.rhs for f in self.facets)

    def on_boundary(self, x: Sequence[int]) -> bool:
        vals = [f.value(x) - f.rhs for f in self.facets]
        return min(vals) == 0

    def tight_facets(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.facets) if f.is_tight(x))

    def facet_vertices(self, i: int) -> tuple[int, ...]:
        f = self.facets[i]
        return tuple(j for j, v in enumerate(self.vertices) if f.is_tight(v))

    @cached_property
    def _points(self) -> tuple[tuple[IntVector, ...], tuple[IntVector, ...]]:
        lo = [min(v[i] for v in self.vertices) for i in range(self.dim)]
        hi = [max(v[i] for v in self.vertices) for i in range(self.dim)]
        interior, boundary = [], []
        for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            slack = min(f.value(x) - f.rhs for f in self.facets)
            if slack > 0:
                interior.append(x)
            elif slack == 0:
                boundary.append(x)
        return tuple(interior), tuple(boundary)

    @cached_property
    def face_lattice(self) -> FaceLattice:
        return _face_lattice(self)


def build_polytope(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Convex hull of integer points; vertices come back sorted."""
    pts = sorted({tuple(int(a) for a in p) for p in points})
    if not pts:
        raise PolytopeError("no points given")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise PolytopeError("points of different dimensions")
    if n == 0 or affine_rank(pts) < n:
        raise PolytopeError("not full-dimensional")
    hull = _hull_facets_np(pts, n) if _fits_int64(pts, n) else _hull_facets(pts, n)
    vert_idx = [
        i for i in range(len(pts))
        if linear_rank([f.normal for f, t in hull if i in t]) == n
    ]
    vertices = tuple(pts[i] for i in vert_idx)
    facets = tuple(sorted((f for f, _ in hull), key=lambda f: (f.normal, f.rhs)))
    return LatticePolytope(n, vertices, facets)


def facets(P: LatticePolytope) -> tuple[FacetInequality, ...]:
    return P.facets


def lattice_points(P: LatticePolytope) -> tuple[tuple[IntVector, ...], tuple[IntVector, ...]]:
    """(interior, boundary) lattice points, each sorted lexicographically."""
    return P._points


def _face_lattice(P: LatticePolytope) -> FaceLattice:
    n = P.dim
    facet_sets = [frozenset(P.facet_vertices(i)) for i in range(len(P.facets))]
    everything = frozenset(range(len(P.vertices)))
    seen = {everything}
    frontier = list(dict.fromkeys(facet_sets))
    seen.update(frontier)
    while frontier:
        nxt = []
        for s in frontier:
            for f in facet_sets:
                t = s & f
                if t and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt

    def incident(s: frozenset) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(facet_sets) if s <= f)

    interior, boundary = lattice_points(P)
    pts_of: dict[frozenset, list[IntVector]] = {s: [] for s in seen}
    pts_of[everything].extend(interior)
    point_set: dict[IntVector, frozenset] = {x: everything for x in interior}
    for x in boundary:
        s = everything
        for i in P.tight_facets(x):
            s = s & facet_sets[i]
        pts_of[s].append(x)
        point_set[x] = s

    by_dim: list[list[Face]] = [[] for _ in range(n + 1)]
    face_of_set = {}
    for s in seen:
        inc = incident(s) if s != everything else ()
        d = n - linear_rank([P.facets[i].normal for i in inc])
        face = Face(d, tuple(sorted(s)), inc, tuple(sorted(pts_of[s])))
        by_dim[d].append(face)
        face_of_set[s] = face
    for fs in by_dim:
        fs.sort(key=lambda f: (f.vertices, f.facets))
    point_face = {x: face_of_set[s] for x, s in point_set.items()}
    return FaceLattice(tuple(tuple(fs) for fs in by_dim), point_face)


def face_lattice(P: LatticePolytope) -> FaceLattice:
    return P.face_lattice


def is_reflexive(P: LatticePolytope) -> bool:
    return all(f.rhs == -1 for f in P.facets)


def dual(P: LatticePolytope) -> LatticePolytope:
    """The dual polytope, whose vertices are the facet normals of P."""
    if not is_reflexive(P):
        raise NotReflexive(f"{P} is not reflexive")
    return build_polytope(f.normal for f in P.facets)


def product(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    verts = sorted(v + w for v in P.vertices for w in Q.vertices)
    zq, zp = (0,) * Q.dim, (0,) * P.dim
    fs = [FacetInequality(f.normal + zq, f.rhs) for f in P.facets]
    fs += [FacetInequality(zp + g.normal, g.rhs) for g in Q.facets]
    fs.sort(key=lambda f: (f.normal, f.rhs))
    return LatticePolytope(P.dim + Q.dim, tuple(verts), tuple(fs))


# ---------------------------------------------------------------------------
# Unimodular equivalence (origin fixed)


def _adjugate(m: IntMatrix) -> IntMatrix:
    n = len(m)
    if n == 1:
        return ((1,),)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(m) if k != i]
            cof[j][i] = (-1) ** (i + j) * det(minor)
    return tuple(tuple(r) for r in cof)


def _independent_tuple(vertices: Sequence[IntVector], n: int) -> tuple[int, ...]:
    chosen: list[int] = []
    for i, v in enumerate(vertices):
        if linear_rank([vertices[j] for j in chosen] + [v]) == len(chosen) + 1:
            chosen.append(i)
            if len(chosen) == n:
                return tuple(chosen)
    raise PolytopeError("vertices do not span")


def _transform(V: IntMatrix, W: IntMatrix) -> IntMatrix | None:
    """Integer T with T @ V == W (columns are points), or None."""
    d = det(V)
    if d == 0:
        return None
    num = matmul(W, _adjugate(V))
    if any(a % d for row in num for a in row):
        return None
    return tuple(tuple(a // d for a in row) for row in num)


def apply(T: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    return tuple(dot(row, v) for row in T)


def unimodular_equivalent(P: LatticePolytope, Q: LatticePolytope) -> IntMatrix | None:
    """A unimodular ``T`` with ``T(P) == Q`` or None if there is none."""
    if P.dim != Q.dim:
        return None
    n = P.dim
    if n > 3:
        raise UnsupportedDimension("equivalence testing supports dimension <= 3")
    if len(P.vertices) != len(Q.vertices) or len(P.facets) != len(Q.facets):
        return None
    anchor = _independent_tuple(P.vertices, n)
    V = tuple(zip(*(P.vertices[i] for i in anchor)))
    target = set(Q.vertices)
    for combo in itertools.permutations(range(len(Q.vertices)), n):
        W = tuple(zip(*(Q.vertices[i] for i in combo)))
        T = _transform(V, W)
        if T is None or abs(det(T)) != 1:
            continue
        if {apply(T, v) for v in P.vertices} == target:
            return T
    return None


def normal_form(P: LatticePolytope) -> tuple[IntVector, ...]:
    """Vertex list that is identical for unimodularly equivalent polytopes.

    For every ordered basis of vertices, the Hermite form of the basis matrix
    fixes a unique unimodular transform. Among the transformed vertex lists
    the one with the smallest coordinates (then lexicographically least) is
    returned.
    """
    n = P.dim
    best = None
    for combo in itertools.permutations(range(len(P.vertices)), n):
        A = tuple(zip(*(P.vertices[i] for i in combo)))
        if det(A) == 0:
            continue
        U = hnf(A).U
        image = tuple(sorted(apply(U, v) for v in P.vertices))
        key = (max(abs(a) for v in image for a in v), image)
        if best is None or key < best:
            best = key
    return best[1]
