import itertools
from collections import Counter
from math import gcd

import pytest

from refpoly.linalg import lattice_from_generators, lattice_index
from refpoly.polygons import enumerate_reflexive_polygons, figure1_polygons, reflexive_vertex_cycles
from refpoly.polytope import (
    PolytopeError,
    build_polytope,
    dual,
    is_reflexive,
    lattice_points,
    normal_form,
    unimodular_equivalent,
)


@pytest.fixture(scope="module")
def classes():
    return enumerate_reflexive_polygons(3)


@pytest.fixture(scope="module")
def subset_oracle():
    """Reflexive polygons with vertices in [-2,2]^2 by trying every vertex subset,
    deduplicated with the explicit equivalence search rather than normal forms."""
    pts = [(x, y) for x in range(-2, 3) for y in range(-2, 3) if gcd(x, y) == 1]
    found = []
    for k in range(3, 7):
        for S in itertools.combinations(pts, k):
            try:
                P = build_polytope(S)
            except PolytopeError:
                continue
            if len(P.vertices) != k or not is_reflexive(P):
                continue
            if not any(unimodular_equivalent(P, Q) is not None for Q in found if len(Q.vertices) == k):
                found.append(P)
    return found


def test_count(classes):
    assert len(classes) == 16


def test_matches_subset_oracle(classes, subset_oracle):
    assert len(subset_oracle) == len(classes)
    for P in subset_oracle:
        matches = [c for c in classes if unimodular_equivalent(P, c.representative) is not None]
        assert len(matches) == 1


def test_vertex_counts(classes):
    assert Counter(c.vertex_count for c in classes) == {3: 5, 4: 7, 5: 3, 6: 1}


def test_pairwise_inequivalent(classes):
    for a, b in itertools.combinations(classes, 2):
        assert unimodular_equivalent(a.representative, b.representative) is None


def test_closed_under_duality(classes):
    forms = {normal_form(c.representative) for c in classes}
    for c in classes:
        D = dual(c.representative)
        assert normal_form(D) in forms
        # boundary points of a reflexive polygon and its dual add to 12
        assert len(lattice_points(c.representative)[1]) + len(lattice_points(D)[1]) == 12


def test_single_interior_point(classes):
    for c in classes:
        assert lattice_points(c.representative)[0] == ((0, 0),)


@pytest.mark.parametrize("box", [2, 4])
def test_box_stable(box):
    assert len(enumerate_reflexive_polygons(box)) == 16


def test_box_too_small():
    # conv{(-1,-1),(2,-1),(-1,2)} needs coordinates of size 2 in every frame
    assert len(enumerate_reflexive_polygons(1)) < 16


def test_cycles_counter_clockwise():
    for cyc in reflexive_vertex_cycles(2):
        for u, w in zip(cyc, cyc[1:] + cyc[:1]):
            assert u[0] * w[1] - u[1] * w[0] > 0


def test_exceptional(classes):
    exc = figure1_polygons()
    assert sorted(c.lambda0_index for c in exc) == [2, 2, 3]
    for c in exc:
        assert lattice_index(lattice_from_generators(c.representative.vertices, 2)) == c.lambda0_index
    assert sum(c.lambda0_index > 1 for c in classes) == 3


def test_deterministic():
    a = [c.representative.vertices for c in enumerate_reflexive_polygons(3)]
    b = [c.representative.vertices for c in enumerate_reflexive_polygons(3)]
    assert a == b
