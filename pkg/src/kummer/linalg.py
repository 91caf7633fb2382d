"""Exact linear algebra over Q, just enough for kernel computations.

Matrices are lists of row lists of Fractions. The reduction is plain
Gauss-Jordan with exact pivots; no pivoting strategy is needed for
stability, so the first nonzero entry wins, which also makes every
result canonical and therefore byte-stable downstream.
"""

from __future__ import annotations

from fractions import Fraction

from .rat import Rat

Matrix = list


def rref(matrix: list[list[Rat]]) -> tuple[list[list[Rat]], list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace(matrix: list[list[Rat]], ncols: int | None = None) -> list[list[Rat]]:
    """Canonical kernel basis: one vector per free column, ascending.

    Each vector has a 1 in its free column and the forced pivot entries
    elsewhere, so the basis is unique given the matrix.
    """
    if ncols is None:
        if not matrix:
            raise ValueError("need ncols for an empty matrix")
        ncols = len(matrix[0])
    if not matrix:
        return [
            [Fraction(1) if i == j else Fraction(0) for i in range(ncols)]
            for j in range(ncols)
        ]
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_idx, pcol in enumerate(pivots):
            vec[pcol] = -reduced[row_idx][free]
        basis.append(vec)
    return basis


def solve(matrix: list[list[Rat]], rhs: list[Rat]) -> list[Rat] | None:
    """One solution of Ax = b, or None when the system is inconsistent.

    Free variables are set to zero, so the returned solution is canonical.
    """
    if not matrix:
        return None if any(b != 0 for b in rhs) else []
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    out = [Fraction(0)] * ncols
    for row_idx, pcol in enumerate(pivots):
        out[pcol] = reduced[row_idx][ncols]
    return out
