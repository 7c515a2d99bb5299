"""Order complexes, reduced rational homology, Möbius functions and traces.

Two engines are kept apart on purpose: Betti numbers come from exact ranks
of boundary matrices (:mod:`rees_lab.linalg`), Möbius values from the
recursive definition.  :func:`euler_poincare_check` compares them.  A third
route, the alternating chain count, backs :func:`lefschetz_trace`.
"""

from __future__ import annotations

import os
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Tuple

from .linalg import chain_complex_ranks
from .poset import Label, Poset, PosetError, _bits, adjoin_bottom_and_top, interval

DEFAULT_SIMPLEX_GUARD = 60_000


class ComplexityGuardError(RuntimeError):
    """Raised instead of silently truncating an oversized computation."""


def simplex_guard() -> int:
    return int(os.environ.get("REES_LAB_GUARD_SIMPLICES", DEFAULT_SIMPLEX_GUARD))


def chain_counts(P: Poset, mask: Optional[int] = None) -> List[int]:
    """f-vector of the order complex: ``out[k]`` = number of (k+1)-element chains.

    ``mask`` restricts to an induced subposet.
    """
    if mask is None:
        mask = (1 << len(P)) - 1
    per: Dict[int, List[int]] = {}
    total: List[int] = []
    for x in _bits(mask):
        counts = [1]
        for w in _bits(P.below[x] & mask & ~(1 << x)):
            cw = per[w]
            if len(cw) + 1 > len(counts):
                counts.extend([0] * (len(cw) + 1 - len(counts)))
            for k, c in enumerate(cw):
                counts[k + 1] += c
        per[x] = counts
        if len(counts) > len(total):
            total.extend([0] * (len(counts) - len(total)))
        for k, c in enumerate(counts):
            total[k] += c
    return total


class OrderComplex:
    """Chains of ``P`` grouped by dimension, with per-dimension index maps."""

    def __init__(self, P: Poset, guard: Optional[int] = None):
        guard = simplex_guard() if guard is None else guard
        n_simplices = sum(chain_counts(P))
        if n_simplices > guard:
            raise ComplexityGuardError(
                f"order complex has {n_simplices} simplices, guard is {guard}")
        self.poset = P
        up = [list(_bits(P.above[i] & ~(1 << i))) for i in range(len(P))]
        faces: List[List[Tuple[int, ...]]] = []

        def grow(ch: Tuple[int, ...]):
            d = len(ch) - 1
            if d == len(faces):
                faces.append([])
            faces[d].append(ch)
            for j in up[ch[-1]]:
                grow(ch + (j,))

        for i in range(len(P)):
            grow((i,))
        self.simplices: List[List[Tuple[int, ...]]] = [sorted(f) for f in faces]
        self.index: List[Dict[Tuple[int, ...], int]] = [
            {s: k for k, s in enumerate(f)} for f in self.simplices]

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> List[int]:
        return [len(f) for f in self.simplices]

    def boundary_columns(self, d: int):
        """Columns of the augmented boundary map from d-simplices to (d-1)-simplices."""
        if d == 0:
            return [{0: 1} for _ in self.simplices[0]]
        rows = self.index[d - 1]
        cols = []
        for s in self.simplices[d]:
            col = {}
            for k in range(d + 1):
                col[rows[s[:k] + s[k + 1:]]] = -1 if k & 1 else 1
            cols.append(col)
        return cols

    @cached_property
    def reduced_betti(self) -> Dict[int, int]:
        """``{dim: dim H~_dim}`` for ``dim = -1 .. dimension``."""
        D = self.dimension
        if D < 0:
            return {-1: 1}
        ranks = chain_complex_ranks([self.boundary_columns(d) for d in range(D + 1)])
        # ranks[d] = rank of d_d : C_d -> C_{d-1}; C_{-1} is one-dimensional
        out = {-1: 1 - ranks[0]}
        for d in range(D + 1):
            higher = ranks[d + 1] if d + 1 <= D else 0
            out[d] = len(self.simplices[d]) - ranks[d] - higher
        return out


def reduced_betti(P: Poset, guard: Optional[int] = None) -> Dict[int, int]:
    return OrderComplex(P, guard).reduced_betti


def betti(P: Poset, guard: Optional[int] = None) -> Tuple[int, ...]:
    """Reduced Betti numbers ``(b_0, ..., b_d)`` over Q; ``()`` for empty ``P``."""
    rb = reduced_betti(P, guard)
    return tuple(rb[d] for d in range(max(rb) + 1))


def top_dimension(P: Poset) -> int:
    return P.length


def top_betti(P: Poset, guard: Optional[int] = None) -> int:
    """Reduced Betti number in the top dimension (dimension -1 if ``P`` is empty)."""
    return reduced_betti(P, guard)[top_dimension(P)]


# ---------------------------------------------------------------------------
# Möbius function

class MobiusTable:
    """Memoized ``mu_P(x, y)``, filled one lower endpoint at a time."""

    def __init__(self, P: Poset):
        self.poset = P
        self._rows: Dict[int, Dict[int, int]] = {}

    def row(self, i: int) -> Dict[int, int]:
        """``{j: mu(x_i, x_j)}`` for every ``j >= i``."""
        if i not in self._rows:
            P = self.poset
            up = P.above[i]
            vals: Dict[int, int] = {}
            for j in _bits(up):
                if j == i:
                    vals[j] = 1
                    continue
                s = 0
                for k in _bits(P.below[j] & up & ~(1 << j)):
                    s += vals[k]
                vals[j] = -s
            self._rows[i] = vals
        return self._rows[i]

    def __call__(self, x: Label, y: Label) -> int:
        P = self.poset
        i, j = P.index[x], P.index[y]
        if not P.leq_index(i, j):
            raise PosetError(f"{x!r} is not below {y!r}")
        return self.row(i)[j]


def mobius(P: Poset, x: Label, y: Label) -> int:
    return MobiusTable(P)(x, y)


def mobius_invariant(P: Poset) -> int:
    """``mu(P) = mu_P(bottom, top)`` for bounded ``P``."""
    if not P.is_bounded:
        raise PosetError("Möbius invariant needs a bounded poset")
    return mobius(P, P.bottom, P.top)


def mobius_hat(P: Poset, mask: Optional[int] = None) -> int:
    """``mu`` of ``P-hat`` (optionally of the induced subposet on ``mask``),
    computed by the recursion without materializing the bounded poset."""
    if mask is None:
        mask = (1 << len(P)) - 1
    f: Dict[int, int] = {}
    total = 0
    for x in _bits(mask):
        s = 1  # mu(0^, 0^)
        for w in _bits(P.below[x] & mask & ~(1 << x)):
            s += f[w]
        f[x] = -s
        total += f[x]
    return -(1 + total)


def reduced_euler_characteristic(P: Poset, mask: Optional[int] = None) -> int:
    """``sum_k (-1)^k f_k - 1`` from chain counts (P. Hall's route to mu)."""
    return sum((-1) ** k * c for k, c in enumerate(chain_counts(P, mask))) - 1


def euler_poincare_check(P: Poset, guard: Optional[int] = None) -> bool:
    """``mu(P-hat) == sum_i (-1)^i dim H~_i(P)``, each side from its own engine."""
    rb = reduced_betti(P, guard)
    alternating = sum((-b if d % 2 else b) for d, b in rb.items())
    return mobius_invariant(adjoin_bottom_and_top(P)) == alternating


def concentrated_in_top(P: Poset, guard: Optional[int] = None) -> bool:
    rb = reduced_betti(P, guard)
    top = top_dimension(P)
    return all(b == 0 for d, b in rb.items() if d != top)


def is_cohen_macaulay(P: Poset, guard: Optional[int] = None) -> bool:
    """Every open interval of ``P-hat`` has homology only in its top dimension."""
    if not P.ranked:
        return False
    H = adjoin_bottom_and_top(P)
    rk = H.height
    for i in range(len(H)):
        for j in _bits(H.above[i] & ~(1 << i)):
            if rk[j] - rk[i] <= 1:
                continue
            I = interval(H, H.elements[i], H.elements[j], closed=False)
            if not I.ranked or I.length != rk[j] - rk[i] - 2:
                return False
            if not concentrated_in_top(I, guard):
                return False
    return True


# ---------------------------------------------------------------------------
# group actions

def automorphism_indices(P: Poset, g: Mapping[Label, Label]) -> List[int]:
    """Index permutation of ``g``; raises if ``g`` is not an automorphism."""
    try:
        img = [P.index[g[x]] for x in P.elements]
    except KeyError as exc:
        raise PosetError(f"map is not defined on or into P: {exc}") from None
    if len(set(img)) != len(P):
        raise PosetError("map is not a bijection")
    if {(img[i], img[j]) for i, j in P.covers} != P.covers:
        raise PosetError("map does not preserve the cover relation")
    return img


def fixed_mask(P: Poset, g: Mapping[Label, Label]) -> int:
    img = automorphism_indices(P, g)
    m = 0
    for i, k in enumerate(img):
        if i == k:
            m |= 1 << i
    return m


def lefschetz_trace(P: Poset, g: Mapping[Label, Label]) -> int:
    """``sum_j (-1)^j trace(g | H~_j(P))``.

    Equal to the reduced Euler characteristic of the fixed subcomplex, which
    for order-preserving maps is the order complex of the fixed subposet.
    """
    return reduced_euler_characteristic(P, fixed_mask(P, g))
