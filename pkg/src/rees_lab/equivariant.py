"""Symmetric-group actions on posets and characters of their homology.

Representations are handled only through characters.  The trace of ``g``
on the alternating sum of homology is the reduced Euler characteristic of
the fixed subposet, so for a poset whose homology sits in one degree the
character of that homology is ``(-1)^top`` times that number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from .catalog import boolean_lattice, tary_tree
from .homology import automorphism_indices, lefschetz_trace, reduced_betti
from .poset import (BOTTOM, TOP, Label, Poset, PosetError, chain, dual, ideal_Ij,
                    rees_product, remove_bottom)
from .symfunc import (ClassFunction, Partition, SymFunc, frobenius, partition_list,
                      representative, schur_decompose)

Perm = Tuple[int, ...]
ActFn = Callable[[Perm, Label], Label]


class NotConcentratedError(ValueError):
    """Homology is not concentrated in the top degree, so the character of a
    single homology group cannot be read off the Lefschetz trace."""


def _subset_act(g: Perm, S: Label) -> Label:
    return tuple(sorted(g[i - 1] for i in S))


def _pair_act(inner: ActFn) -> ActFn:
    def act(g: Perm, x: Label) -> Label:
        return (inner(g, x[0]), x[1])
    return act


def _fix_extremes(inner: ActFn) -> ActFn:
    def act(g: Perm, x: Label) -> Label:
        if x == TOP or x == BOTTOM:
            return x
        return inner(g, x)
    return act


@dataclass(frozen=True)
class PosetAction:
    """``S_n`` acting on the labels of ``poset`` by ``act(g, label)``."""

    poset: Poset
    n: int
    act: ActFn

    def mapping(self, g: Perm) -> Dict[Label, Label]:
        return {x: self.act(g, x) for x in self.poset.elements}

    def check(self) -> None:
        """Generators of S_n act by cover-preserving bijections; raises PosetError otherwise."""
        gens = []
        if self.n >= 2:
            gens.append((2, 1) + tuple(range(3, self.n + 1)))
            gens.append(tuple(range(2, self.n + 1)) + (1,))
        for g in gens:
            automorphism_indices(self.poset, self.mapping(g))

    def restrict(self, Q: Poset) -> "PosetAction":
        """Same action on a subposet with (a subset of) the same labels."""
        return PosetAction(Q, self.n, self.act)

    def rees(self, other: Poset) -> "PosetAction":
        """Action on ``P * X`` by ``(a, x) g = (a g, x)``."""
        return PosetAction(rees_product(self.poset, other), self.n, _pair_act(self.act))

    def trace(self, g: Perm) -> int:
        return lefschetz_trace(self.poset, self.mapping(g))


def boolean_action(n: int) -> PosetAction:
    """``S_n`` permuting the ground set of ``B_n``."""
    return PosetAction(boolean_lattice(n), n, _subset_act)


def ideal_action(A: PosetAction, j: int) -> PosetAction:
    return PosetAction(ideal_Ij(A.poset, j), A.n, _pair_act(A.act))


def truncated_chain_action(A: PosetAction) -> PosetAction:
    """Action on ``P^- * C_n``."""
    Pm = remove_bottom(A.poset)
    return PosetAction(rees_product(Pm, chain(A.poset.length)), A.n, _pair_act(A.act))


def tree_action(A: PosetAction, t: int, use_dual: bool = False) -> PosetAction:
    """Action on ``(P * T_{t,n})^-`` (or with ``P`` replaced by its dual)."""
    P = dual(A.poset) if use_dual else A.poset
    R = rees_product(P, tary_tree(t, A.poset.length))
    return PosetAction(remove_bottom(R), A.n, _pair_act(A.act))


# ---------------------------------------------------------------------------
# characters

def lefschetz_character(A: PosetAction) -> ClassFunction:
    """Trace of each cycle type on the alternating sum of reduced homology."""
    return {lam: A.trace(representative(lam)) for lam in partition_list(A.n)}


def homology_character(A: PosetAction, check_concentrated: bool = True) -> ClassFunction:
    """Character of the top reduced homology of ``A.poset``.

    With ``check_concentrated`` the Betti numbers are computed first and a
    :class:`NotConcentratedError` is raised if any lower degree survives.
    """
    top = A.poset.length
    if check_concentrated:
        rb = reduced_betti(A.poset)
        if any(b for d, b in rb.items() if d != top):
            raise NotConcentratedError(f"reduced Betti numbers {rb} are not concentrated in degree {top}")
    sign = -1 if top % 2 else 1
    return {lam: sign * v for lam, v in lefschetz_character(A).items()}


@lru_cache(maxsize=None)
def _ideal_character(n: int, j: int) -> Tuple[Tuple[Partition, int], ...]:
    chi = homology_character(ideal_action(boolean_action(n), j))
    return tuple(sorted(chi.items()))


def ideal_frobenius(n: int, j: int) -> SymFunc:
    """``ch H~(I_j(B_n))`` in the top degree."""
    return frobenius(dict(_ideal_character(n, j)), n)


@lru_cache(maxsize=None)
def _truncated_chain_character(n: int) -> Tuple[Tuple[Partition, int], ...]:
    chi = homology_character(truncated_chain_action(boolean_action(n)))
    return tuple(sorted(chi.items()))


def truncated_chain_frobenius(n: int) -> SymFunc:
    """``ch H~(B_n^- * C_n)`` in the top degree."""
    return frobenius(dict(_truncated_chain_character(n)), n)


def tree_frobenius(n: int, t: int, use_dual: bool = False) -> SymFunc:
    """``ch H~((B_n * T_{t,n})^-)`` (or with the dual of ``B_n``), top degree."""
    return frobenius(homology_character(tree_action(boolean_action(n), t, use_dual)), n)


def tree_lefschetz_frobenius(n: int, t: int) -> SymFunc:
    """``ch L((B_n * T_{t,n})^-)``; for ``n = 0`` the empty poset gives ``-1``."""
    if n == 0:
        return SymFunc(0, {(): -1})
    return frobenius(lefschetz_character(tree_action(boolean_action(n), t)), n)


def schur_positive(f: SymFunc) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in schur_decompose(f).values())
