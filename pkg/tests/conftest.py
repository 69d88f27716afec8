from itertools import product as cartesian
from math import gcd
from itertools import combinations

import pytest

from refpoly.polytope import build_polytope


def cube_points(n):
    return list(cartesian((-1, 1), repeat=n))


@pytest.fixture
def triangle():
    """conv{(1,0),(0,1),(-1,-1)}, the smallest reflexive triangle."""
    return build_polytope([(1, 0), (0, 1), (-1, -1)])


@pytest.fixture
def big_triangle():
    """Its dual conv{(2,-1),(-1,2),(-1,-1)}."""
    return build_polytope([(2, -1), (-1, 2), (-1, -1)])


@pytest.fixture
def square():
    return build_polytope(cube_points(2))


@pytest.fixture
def cube3():
    return build_polytope(cube_points(3))


@pytest.fixture
def simplex3_dual():
    return build_polytope([(-1, -1, -1), (3, -1, -1), (-1, 3, -1), (-1, -1, 3)])


def determinantal_invariants(rows, n):
    """Invariant factors via gcds of k x k minors (independent of any SNF code)."""
    from refpoly.linalg import det

    r = len(rows)
    divisors = [1]
    for k in range(1, min(r, n) + 1):
        g = 0
        for ri in combinations(range(r), k):
            for ci in combinations(range(n), k):
                g = gcd(g, det([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        divisors.append(g)
    factors = [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]
    return n - len(factors), tuple(f for f in factors if f != 1)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
