"""Tiny exact linear solver: square rational systems by Gaussian elimination."""

from __future__ import annotations

from fractions import Fraction


def solve_square_system(A, b) -> list[Fraction] | None:
    """Solve A x = b exactly for square A; None when A is singular.

    A is a list of rows; entries may be ints or Fractions.  Partial pivoting
    is by first nonzero entry (pivot magnitude is irrelevant in exact
    arithmetic).
    """
    m = len(A)
    if m == 0:
        return []
    M = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(A)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if M[r][col] != 0), None)
        if pivot is None:
            return None
        M[col], M[pivot] = M[pivot], M[col]
        pv = M[col][col]
        M[col] = [v / pv for v in M[col]]
        for r in range(m):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[i][m] for i in range(m)]
