"""Exact integer linear algebra.

Vectors are tuples of ints and matrices are tuples of row tuples. Python
integers never wrap, but results are still checked against a signed 64-bit
range so that coefficient blow-up surfaces as an error instead of silently
producing enormous certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]

INT_LIMIT = 2**63


class ArithmeticOverflow(OverflowError):
    """An intermediate or final entry left the signed 64-bit range."""


class DimensionMismatch(ValueError):
    pass


def _check_row(row: Sequence[int]) -> None:
    for a in row:
        if not -INT_LIMIT <= a < INT_LIMIT:
            raise ArithmeticOverflow(f"entry {a} exceeds 64-bit range")


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    m = tuple(tuple(int(a) for a in r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("rows of unequal length")
    return m


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def vecmat(v: Sequence[int], m: Sequence[Sequence[int]]) -> IntVector:
    """Row vector times matrix."""
    if len(v) != len(m):
        raise DimensionMismatch(f"vector of length {len(v)} vs {len(m)} rows")
    if not m:
        return ()
    return tuple(sum(c * row[j] for c, row in zip(v, m)) for j in range(len(m[0])))


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def primitive(v: Sequence[int]) -> IntVector:
    """Divide ``v`` by the gcd of its entries."""
    g = reduce(gcd, v, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(a // g for a in v)


# ---------------------------------------------------------------------------
# Hermite normal form


@dataclass(frozen=True)
class HermiteForm:
    H: IntMatrix
    U: IntMatrix
    rank: int

    @property
    def pivots(self) -> tuple[int, ...]:
        """Pivot column of each nonzero row of H."""
        return tuple(next(j for j, a in enumerate(row) if a) for row in self.H[: self.rank])


def hnf(A: Sequence[Sequence[int]]) -> HermiteForm:
    """Row-style Hermite normal form with transform: ``U @ A == H``.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``.
    """
    A = as_matrix(A)
    if not A:
        raise ValueError("hnf of an empty matrix")
    r, c = len(A), len(A[0])
    H = [list(row) for row in A]
    U = [list(row) for row in identity(r)]

    def addrow(dst: int, src: int, q: int) -> None:
        # row_dst -= q * row_src
        if q == 0:
            return
        hd, hs = H[dst], H[src]
        for j in range(c):
            hd[j] -= q * hs[j]
        ud, us = U[dst], U[src]
        for j in range(r):
            ud[j] -= q * us[j]
        _check_row(hd)
        _check_row(ud)

    row = 0
    for col in range(c):
        if row == r:
            break
        while True:
            nz = [i for i in range(row, r) if H[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(H[i][col]))
            if piv != row:
                H[row], H[piv] = H[piv], H[row]
                U[row], U[piv] = U[piv], U[row]
            done = True
            for i in range(row + 1, r):
                if H[i][col]:
                    addrow(i, row, H[i][col] // H[row][col])
                    if H[i][col]:
                        done = False
            if done:
                break
        if all(H[i][col] == 0 for i in range(row, r)):
            continue
        if H[row][col] < 0:
            H[row] = [-a for a in H[row]]
            U[row] = [-a for a in U[row]]
        p = H[row][col]
        for i in range(row):
            addrow(i, row, H[i][col] // p)
        row += 1
    return HermiteForm(as_matrix(H), as_matrix(U), row)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]))))


def snf(A: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form with transforms: ``U @ A @ V == D``."""
    A = as_matrix(A)
    if not A:
        raise ValueError("snf of an empty matrix")
    r, c = len(A), len(A[0])
    D = [list(row) for row in A]
    U = [list(row) for row in identity(r)]
    V = [list(row) for row in identity(c)]

    def rowop(dst: int, src: int, q: int) -> None:
        for j in range(c):
            D[dst][j] -= q * D[src][j]
        for j in range(r):
            U[dst][j] -= q * U[src][j]
        _check_row(D[dst])
        _check_row(U[dst])

    def colop(dst: int, src: int, q: int) -> None:
        for i in range(r):
            D[i][dst] -= q * D[i][src]
        for i in range(c):
            V[i][dst] -= q * V[i][src]
        _check_row([D[i][dst] for i in range(r)])
        _check_row([V[i][dst] for i in range(c)])

    def swap_rows(i: int, j: int) -> None:
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    for t in range(min(r, c)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, r) for j in range(t, c) if D[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = D[t][t]
            clean = True
            for i in range(t + 1, r):
                if D[i][t]:
                    rowop(i, t, D[i][t] // p)
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, c):
                if D[t][j]:
                    colop(j, t, D[t][j] // p)
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            # pivot must divide the remaining block
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            rowop(t, bad, -1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return SmithForm(as_matrix(D), as_matrix(U), as_matrix(V))


# ---------------------------------------------------------------------------
# Sublattices and quotients


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of Z^n stored by its Hermite basis (canonical)."""

    ambient_dim: int
    basis: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v: Sequence[int]) -> bool:
        return lattice_membership(self, v) is not None

    def issubset(self, other: Sublattice) -> bool:
        return all(b in other for b in self.basis)


def lattice_from_generators(gens: Iterable[Sequence[int]], ambient_dim: int) -> Sublattice:
    gens = as_matrix(gens)
    for g in gens:
        if len(g) != ambient_dim:
            raise DimensionMismatch(f"generator {g} not in Z^{ambient_dim}")
    if not gens:
        return Sublattice(ambient_dim, ())
    h = hnf(gens)
    return Sublattice(ambient_dim, h.H[: h.rank])


def full_lattice(n: int) -> Sublattice:
    return Sublattice(n, identity(n))


def lattice_index(sub: Sublattice) -> int | None:
    """Index of ``sub`` in Z^n, or None when the rank is deficient."""
    if sub.rank < sub.ambient_dim:
        return None
    idx = 1
    for i, row in enumerate(sub.basis):
        idx *= row[i]
    return idx


def lattice_membership(sub: Sublattice, v: Sequence[int]) -> IntVector | None:
    """Integer coefficients ``c`` with ``c @ sub.basis == v``, or None."""
    if len(v) != sub.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in Z^{sub.ambient_dim}")
    res = list(v)
    coeffs = []
    for row in sub.basis:
        p = next(j for j, a in enumerate(row) if a)
        q, rem = divmod(res[p], row[p])
        if rem:
            return None
        coeffs.append(q)
        for j in range(p, len(res)):
            res[j] -= q * row[j]
    if any(res):
        return None
    return tuple(coeffs)


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank plus the cyclic factors in ``torsion`` (d1 | d2 | ...)."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"


def invariants_from_diagonal(diag: Iterable[int], n: int) -> AbelianInvariants:
    diag = [abs(d) for d in diag]
    nonzero = [d for d in diag if d]
    torsion = tuple(sorted(d for d in nonzero if d != 1))
    return AbelianInvariants(n - len(nonzero), torsion)


def quotient_invariants(sub: Sublattice) -> AbelianInvariants:
    """Invariants of Z^n / sub."""
    n = sub.ambient_dim
    if n == 0:
        return AbelianInvariants()
    rows = list(sub.basis) + [(0,) * n] * (n - sub.rank)
    return invariants_from_diagonal(snf(rows).diagonal, n)
