"""Exact integer / rational linear algebra on small dense matrices.

Matrices are sequences of rows of Python ints (or Fractions).  Nothing here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, SingularSystem

Matrix = Sequence[Sequence[int]]


def _square(a: Matrix) -> int:
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatch("matrix is not square")
    return n


def bareiss_det(a: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = _square(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def solve(a: Matrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``a x = rhs`` over the rationals by Gauss-Jordan elimination."""
    n = _square(a)
    if len(rhs) != n:
        raise DimensionMismatch("right-hand side has wrong length")
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(a, rhs)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise SingularSystem("matrix is singular")
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n] for row in m]


def adjugate(a: Matrix) -> tuple[list[list[int]], int]:
    """Return ``(adj, det)`` with ``a @ adj == det * I``, all integers.

    Raises :class:`SingularSystem` when ``det == 0``.
    """
    n = _square(a)
    det = bareiss_det(a)
    if det == 0:
        raise SingularSystem("matrix is singular")
    cols = []
    for i in range(n):
        e = [1 if r == i else 0 for r in range(n)]
        col = [x * det for x in solve(a, e)]
        assert all(x.denominator == 1 for x in col)
        cols.append([x.numerator for x in col])
    adj = [[cols[j][i] for j in range(n)] for i in range(n)]
    return adj, det


def matvec(a: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]
