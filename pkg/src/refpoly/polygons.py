"""Enumeration of reflexive polygons up to unimodular equivalence.

Polygons are grown vertex by vertex in counter-clockwise order around the
origin. Every edge of a reflexive polygon sits at lattice distance one from
the origin, which keeps the search tiny.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

from .linalg import IntVector, lattice_from_generators, lattice_index
from .polytope import LatticePolytope, build_polytope, is_reflexive, normal_form


@dataclass(frozen=True)
class PolygonClass:
    representative: LatticePolytope
    vertex_count: int
    lambda0_index: int


def _cross(u: IntVector, w: IntVector) -> int:
    return u[0] * w[1] - u[1] * w[0]


def _angle_cmp(u: IntVector, w: IntVector) -> int:
    hu = 0 if u[1] > 0 or (u[1] == 0 and u[0] > 0) else 1
    hw = 0 if w[1] > 0 or (w[1] == 0 and w[0] > 0) else 1
    if hu != hw:
        return hu - hw
    c = _cross(u, w)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _unit_edge(u: IntVector, w: IntVector) -> bool:
    c = _cross(u, w)
    return c > 0 and c == gcd(w[0] - u[0], w[1] - u[1])


def _turns_left(a: IntVector, b: IntVector, c: IntVector) -> bool:
    return _cross((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1])) > 0


def reflexive_vertex_cycles(box: int) -> list[tuple[IntVector, ...]]:
    """All reflexive polygons with vertices in [-box, box]^2, as ccw vertex cycles."""
    pts = [
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if gcd(x, y) == 1
    ]
    pts.sort(key=cmp_to_key(_angle_cmp))
    succ = {u: [w for w in pts if _unit_edge(u, w)] for u in pts}
    order = {p: i for i, p in enumerate(pts)}
    out = []

    def extend(path: list[IntVector]) -> None:
        last = path[-1]
        if len(path) >= 3 and path[0] in succ[last]:
            if _turns_left(path[-2], last, path[0]) and _turns_left(last, path[0], path[1]):
                out.append(tuple(path))
        for w in succ[last]:
            if order[w] <= order[last]:
                continue
            if len(path) >= 2 and not _turns_left(path[-2], last, w):
                continue
            path.append(w)
            extend(path)
            path.pop()

    for v in pts:
        extend([v])
    return out


def _vertex_lattice_index(P: LatticePolytope) -> int:
    return lattice_index(lattice_from_generators(P.vertices, 2))


def enumerate_reflexive_polygons(box: int = 3) -> list[PolygonClass]:
    """One class per unimodular equivalence class, in a fixed order."""
    forms = set()
    for cycle in reflexive_vertex_cycles(box):
        P = build_polytope(cycle)
        if len(P.vertices) != len(cycle) or not is_reflexive(P):
            raise AssertionError(f"enumeration produced a bad polygon {cycle}")
        forms.add(normal_form(P))
    classes = []
    for nf in sorted(forms, key=lambda f: (len(f), f)):
        P = build_polytope(nf)
        classes.append(PolygonClass(P, len(P.vertices), _vertex_lattice_index(P)))
    return classes


def figure1_polygons(box: int = 3) -> list[PolygonClass]:
    """Reflexive polygons whose vertices do not generate Z^2."""
    return [c for c in enumerate_reflexive_polygons(box) if c.lambda0_index > 1]
