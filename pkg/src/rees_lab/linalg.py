"""Exact ranks of sparse integer matrices.

Matrices are given column by column as ``{row: int}`` dicts.  Reduction is
the left-to-right "lowest row" column algorithm: a unit pivot is applied by
plain integer subtraction, any other pivot by the fraction-free update
``col <- a*col - b*pivot`` followed by division by the content gcd.  Every
step is invertible over Q, so the pivot count is the rational rank.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Set

Column = Dict[int, int]


def _content(col: Column) -> int:
    g = 0
    for v in col.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def reduce_columns(columns: Sequence[Optional[Column]]) -> Dict[int, Column]:
    """Reduce columns in order; returns ``{pivot_row: reduced column}``.

    ``None`` entries are skipped (used for cleared columns).
    """
    pivots: Dict[int, Column] = {}
    for source in columns:
        if not source:
            continue
        col = dict(source)
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                g = _content(col)
                if g > 1:
                    col = {r: v // g for r, v in col.items()}
                pivots[low] = col
                break
            a, b = piv[low], col[low]
            if a == 1 or a == -1:
                f = b * a
                for r, v in piv.items():
                    nv = col.get(r, 0) - f * v
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
            else:
                g = gcd(a, b)
                a, b = a // g, b // g
                new = {r: a * v for r, v in col.items()}
                for r, v in piv.items():
                    nv = new.get(r, 0) - b * v
                    if nv:
                        new[r] = nv
                    else:
                        new.pop(r, None)
                c = _content(new) if new else 1
                col = {r: v // c for r, v in new.items()} if c > 1 else new
    return pivots


def sparse_rank(columns: Iterable[Column]) -> int:
    return len(reduce_columns(list(columns)))


def dense_rank_fraction(rows: List[List[int]]) -> int:
    """Textbook Gaussian elimination over Fraction (test oracle)."""
    M = [[Fraction(v) for v in row] for row in rows]
    if not M:
        return 0
    rank, ncols = 0, len(M[0])
    for c in range(ncols):
        pr = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if pr is None:
            continue
        M[rank], M[pr] = M[pr], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def chain_complex_ranks(boundaries: Sequence[Sequence[Column]]) -> List[int]:
    """Ranks of ``d_k`` for a chain complex given as ``boundaries[k]`` (columns of d_k).

    Processes degrees from the top down and clears every column whose
    index already appeared as a pivot row one degree higher (such a column
    is known to reduce to zero).
    """
    ranks = [0] * len(boundaries)
    cleared: Set[int] = set()
    for k in reversed(range(len(boundaries))):
        cols = boundaries[k]
        todo = [None if i in cleared else c for i, c in enumerate(cols)]
        piv = reduce_columns(todo)
        ranks[k] = len(piv)
        cleared = set(piv)
    return ranks
