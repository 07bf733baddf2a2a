"""Gaussian elimination over any exact field (Fraction, CyclotomicNumber, ...).

Entries only need ``+ - * /`` and comparison with 0.
"""

from __future__ import annotations

from typing import Sequence


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns. The input is not modified."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def solve(matrix: Sequence[Sequence], rhs: Sequence, zero=0) -> list | None:
    """One solution x of matrix * x = rhs (free variables set to ``zero``), or None."""
    if not matrix:
        return [] if all(b == 0 for b in rhs) else None
    ncols = len(matrix[0])
    reduced, pivots = row_echelon([list(row) + [b] for row, b in zip(matrix, rhs)])
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for row, col in zip(reduced, pivots):
        x[col] = row[-1]
    return x


def solve_sparse(rows: Sequence[dict], rhs: Sequence, ncols: int, zero=0) -> list | None:
    """Like :func:`solve` for rows given as ``{column: value}`` dicts (zeros omitted).

    Rows are reduced one at a time against the pivots found so far, which
    keeps sparse systems sparse.
    """
    pivots: dict[int, tuple[dict, object]] = {}
    for row, b in zip(rows, rhs):
        r = {c: v for c, v in row.items() if v != 0}
        while r:
            col = min(r)
            if col not in pivots:
                inv = 1 / r[col]
                pivots[col] = ({c: v * inv for c, v in r.items()}, b * inv)
                break
            prow, pb = pivots[col]
            factor = r[col]
            for c, v in prow.items():
                nv = r.get(c, zero) - factor * v
                if nv != 0:
                    r[c] = nv
                else:
                    r.pop(c, None)
            b = b - factor * pb
        else:
            if b != 0:
                return None
    x = [zero] * ncols
    for col in sorted(pivots, reverse=True):
        prow, pb = pivots[col]
        x[col] = pb - sum((v * x[c] for c, v in prow.items() if c != col), zero)
    return x
