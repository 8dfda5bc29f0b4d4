"""Small exact linear algebra over Fractions (Gaussian elimination)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class SingularMatrixError(ArithmeticError):
    pass


def solve(matrix: Sequence[Sequence], rhs_columns: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve ``M x = r`` for each right-hand side column ``r``.

    Returns one solution vector per column.  Raises SingularMatrixError when
    ``M`` is not invertible.
    """
    n = len(matrix)
    k = len(rhs_columns)
    rows = [
        [Fraction(v) for v in matrix[i]] + [Fraction(col[i]) for col in rhs_columns]
        for i in range(n)
    ]
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        rows[c], rows[pivot] = rows[pivot], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [v * inv for v in rows[c]]
        for r in range(n):
            if r != c and rows[r][c] != 0:
                factor = rows[r][c]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[c])]
    return [[rows[i][n + j] for i in range(n)] for j in range(k)]


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    rows = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c] != 0:
                factor = rows[r][c] / rows[c][c]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[c])]
    return det


def is_negative_definite(matrix: Sequence[Sequence]) -> bool:
    """Sylvester's criterion: leading minors alternate in sign, starting negative."""
    n = len(matrix)
    for k in range(1, n + 1):
        minor = determinant([row[:k] for row in matrix[:k]])
        if minor == 0 or (minor < 0) != (k % 2 == 1):
            return False
    return True


def rank(matrix: Sequence[Sequence]) -> int:
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c] / rows[r][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
