"""Exact linear algebra over the rationals.

Small dense routines on lists of lists of ``Fraction``.  Everything here is
exact; no floating point enters any rank or determinant decision.  Matrices
at the scale this package targets (a handful of species and reactions) do
not justify an external computer-algebra dependency.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


Matrix = list[list[Fraction]]


def to_fraction(x) -> Fraction:
    """Coerce ints, strings like ``"2/3"``, and Fractions; reject floats.

    Floats are rejected on purpose: exactness is a package-wide invariant
    and silently accepting binary floats would break it.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


def mat(rows: Sequence[Sequence]) -> Matrix:
    return [[to_fraction(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += aik * bk[j]
    return out


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot column indices."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    _, pivots = rref(a)
    return len(pivots)


def det(a: Matrix) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in a]
    sign = 1
    out = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        out *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out * sign


def left_null_space(a: Matrix) -> Matrix:
    """Basis (as rows, in RREF) of ``{w : w^T a = 0}``.

    Returned rows are the reduced row echelon form of a null-space basis of
    the transpose, which makes the result canonical for a given ``a``.
    """
    at = transpose(a)
    if not at:
        return identity(len(a))
    reduced, pivots = rref(at)
    n = len(a)
    free = [j for j in range(n) if j not in pivots]
    basis: Matrix = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][j]
        basis.append(v)
    if not basis:
        return []
    reduced_basis, _ = rref(basis)
    return reduced_basis


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]
