"""Fraction-free (Bareiss) elimination over Q.

Rows are first cleared of denominators so that the forward pass runs on
integers; every division in the pass is exact. Back substitution, where it is
needed, switches to Fractions.
"""
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from frobfix.errors import DimensionMismatch, NoSolution
from frobfix.exactlin.matrix import RatMatrix, hstack


def _integer_rows(m: RatMatrix) -> List[List[int]]:
    rows = []
    for i in range(m.rows):
        row = m.row(i)
        scale = lcm(*(v.denominator for v in row)) if row else 1
        rows.append([int(v * scale) for v in row])
    return rows


def _bareiss(rows: List[List[int]], pivot_cols: int) -> Tuple[List[List[int]], List[int], int]:
    """Forward pass in place. Returns (rows, pivot columns, sign of row swaps)."""
    n = len(rows)
    width = len(rows[0]) if rows else 0
    pivots: List[int] = []
    prev = 1
    sign = 1
    r = 0
    for c in range(pivot_cols):
        if r == n:
            break
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, n):
            lead = rows[i][c]
            for j in range(c + 1, width):
                rows[i][j] = (piv * rows[i][j] - lead * rows[r][j]) // prev
            rows[i][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def rank(m: RatMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots, _ = _bareiss(_integer_rows(m), m.cols)
    return len(pivots)


def determinant(m: RatMatrix) -> Fraction:
    if m.rows != m.cols:
        raise DimensionMismatch(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    scales = []
    for i in range(m.rows):
        row = m.row(i)
        scales.append(lcm(*(v.denominator for v in row)))
    rows, pivots, sign = _bareiss(_integer_rows(m), m.cols)
    if len(pivots) < m.rows:
        return Fraction(0)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(sign * rows[-1][-1], denom)


def rref(m: RatMatrix, pivot_cols: Optional[int] = None) -> Tuple[RatMatrix, List[int]]:
    """Reduced row echelon form, pivoting only within the first pivot_cols columns.

    Rows below the pivots keep whatever the forward pass left in the columns
    past pivot_cols; solve reads inconsistency from them.
    """
    if pivot_cols is None:
        pivot_cols = m.cols
    if m.rows == 0:
        return m, []
    ints, pivots, _ = _bareiss(_integer_rows(m), pivot_cols)
    rows = [[Fraction(v) for v in row] for row in ints]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        piv = rows[k][c]
        rows[k] = [v / piv for v in rows[k]]
        for i in range(k):
            factor = rows[i][c]
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
    return RatMatrix.from_rows(rows, cols=m.cols), pivots


def solve(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Some exact x with a @ x == b; raises NoSolution when the system is inconsistent."""
    if a.rows != b.rows:
        raise DimensionMismatch(f"solve needs equal row counts, got {a.rows} and {b.rows}")
    if a.rows == 0:
        return RatMatrix.zeros(a.cols, b.cols)
    reduced, pivots = rref(hstack(a, b), pivot_cols=a.cols)
    for i in range(len(pivots), reduced.rows):
        if any(reduced.get(i, a.cols + j) != 0 for j in range(b.cols)):
            raise NoSolution("the linear system is inconsistent")
    x = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for k, c in enumerate(pivots):
        for j in range(b.cols):
            x[c][j] = reduced.get(k, a.cols + j)
    return RatMatrix.from_rows(x, cols=b.cols)


def kernel_basis(m: RatMatrix) -> List[RatMatrix]:
    if m.rows == 0:
        return [RatMatrix.column([1 if k == j else 0 for k in range(m.cols)]) for j in range(m.cols)]
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in (c for c in range(m.cols) if c not in pivot_set):
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -reduced.get(k, free)
        basis.append(RatMatrix.column(v))
    return basis


def image_basis(m: RatMatrix) -> List[RatMatrix]:
    if m.rows == 0 or m.cols == 0:
        return []
    _, pivots = rref(m)
    return [RatMatrix.column(m.col(c)) for c in pivots]


def span_basis(vectors: Sequence[Sequence[Fraction]], dim: int) -> List[Tuple[Fraction, ...]]:
    if not vectors:
        return []
    reduced, pivots = rref(RatMatrix.from_rows(vectors, cols=dim))
    return [reduced.row(k) for k in range(len(pivots))]


def inverse(m: RatMatrix) -> RatMatrix:
    if m.rows != m.cols:
        raise DimensionMismatch(f"inverse of a non-square {m.rows}x{m.cols} matrix")
    if rank(m) < m.rows:
        raise NoSolution("matrix is singular")
    return solve(m, RatMatrix.identity(m.rows))


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    entries = []
    for i in range(rows):
        ai, bi = divmod(i, b.rows)
        for j in range(cols):
            aj, bj = divmod(j, b.cols)
            entries.append(a.get(ai, aj) * b.get(bi, bj))
    return RatMatrix(rows, cols, tuple(entries))
