"""Exact linear algebra over Fractions: rank, determinant, solve, kernel.

Plain Gaussian elimination on lists of lists; arbitrary precision makes
overflow impossible and keeps every sign decision exact.
"""

from __future__ import annotations

from fractions import Fraction

Row = list[Fraction]
Matrix = list[Row]


def _echelon(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Row echelon form (in place on a copy); returns (rows, pivot column list)."""
    m = [row[:] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            if f == 0:
                continue
            ratio = f / pv
            for j in range(c, n_cols):
                m[i][j] -= m[r][j] * ratio
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def mat_rank(rows: Matrix) -> int:
    if not rows or not rows[0]:
        return 0
    return len(_echelon(rows)[1])


def det(rows: Matrix) -> Fraction:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    m = [row[:] for row in rows]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        pv = m[c][c]
        result *= pv
        for i in range(c + 1, n):
            f = m[i][c]
            if f == 0:
                continue
            ratio = f / pv
            for j in range(c, n):
                m[i][j] -= m[c][j] * ratio
    return result


def solve(rows: Matrix, b: Row) -> Row | None:
    """Solve the square system A x = b; None when A is singular."""
    n = len(rows)
    m = [rows[i][:] + [b[i]] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        pv = m[c][c]
        for i in range(n):
            if i == c:
                continue
            f = m[i][c]
            if f == 0:
                continue
            ratio = f / pv
            for j in range(c, n + 1):
                m[i][j] -= m[c][j] * ratio
    return [m[i][n] / m[i][i] for i in range(n)]


def invert(rows: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix; None when singular."""
    n = len(rows)
    m = [rows[i][:] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for i in range(n):
            if i == c:
                continue
            f = m[i][c]
            if f == 0:
                continue
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [row[n:] for row in m]


def kernel_vector_of_columns(columns: list[Row]) -> Row | None:
    """A non-zero x with sum_j x_j col_j = 0, or None if the columns are independent.

    Requires the kernel to be at most one-dimensional, which holds for the
    minimal dependent sets this is used on; the free coordinate is set to 1.
    """
    if not columns:
        return None
    height = len(columns[0])
    rows = [[col[i] for col in columns] for i in range(height)]
    ech, pivots = _echelon(rows)
    k = len(columns)
    free = [c for c in range(k) if c not in pivots]
    if not free:
        return None
    x = [Fraction(0)] * k
    x[free[0]] = Fraction(1)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = sum((ech[r][j] * x[j] for j in range(c + 1, k)), Fraction(0))
        x[c] = -s / ech[r][c]
    return x
