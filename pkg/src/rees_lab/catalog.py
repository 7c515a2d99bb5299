"""Concrete poset families: Boolean lattices, chains, trees, subspace lattices
over prime fields, cross-polytope face posets and their symplectic analogs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Dict, Iterator, List, Tuple

from .poset import Poset, PosetError, build_poset, chain

__all__ = [
    "Subspace", "boolean_lattice", "chain", "tary_tree", "subspace_lattice",
    "crosspolytope_faces", "isotropic_subspace_poset", "whitney_numbers",
    "enumerate_subspaces", "symplectic_form", "build_family", "FAMILIES",
]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q ** 0.5) + 1))


def _check_prime(q: int) -> None:
    if not is_prime(q):
        raise PosetError(f"q={q} is not prime (prime fields only)")


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_q^N held as its reduced row-echelon basis."""

    rows: Tuple[Tuple[int, ...], ...]
    q: int
    ambient: int

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @cached_property
    def vectors(self) -> frozenset:
        out = set()
        for coeffs in product(range(self.q), repeat=len(self.rows)):
            v = [0] * self.ambient
            for c, row in zip(coeffs, self.rows):
                if c:
                    for k, a in enumerate(row):
                        v[k] = (v[k] + c * a) % self.q
            out.add(tuple(v))
        return frozenset(out)

    @cached_property
    def mask(self) -> int:
        """Bitset over the encoded vectors of F_q^N (base-q digits)."""
        m = 0
        for v in self.vectors:
            code = 0
            for a in reversed(v):
                code = code * self.q + a
            m |= 1 << code
        return m

    def contains(self, other: "Subspace") -> bool:
        return other.mask & ~self.mask == 0


def _rref_patterns(N: int, d: int, q: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    for pivots in combinations(range(N), d):
        pset = set(pivots)
        slots = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, N) if c not in pset]
        for values in product(range(q), repeat=len(slots)):
            rows = [[0] * N for _ in range(d)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), a in zip(slots, values):
                rows[r][c] = a
            yield tuple(tuple(row) for row in rows)


def enumerate_subspaces(N: int, q: int, dims=None) -> List[Subspace]:
    """All subspaces of F_q^N (optionally only the given dimensions)."""
    _check_prime(q)
    dims = range(N + 1) if dims is None else dims
    return [Subspace(rows, q, N) for d in dims for rows in _rref_patterns(N, d, q)]


def _subspace_poset(spaces: List[Subspace]) -> Poset:
    by_dim: Dict[int, List[Subspace]] = {}
    for U in spaces:
        by_dim.setdefault(U.dimension, []).append(U)
    pairs = []
    for d, lows in by_dim.items():
        for W in by_dim.get(d + 1, []):
            for U in lows:
                if W.contains(U):
                    pairs.append((U.rows, W.rows))
    return build_poset([U.rows for U in spaces], pairs, check_redundant=False)


def boolean_lattice(n: int) -> Poset:
    """``B_n``: subsets of ``{1..n}`` as sorted tuples, ordered by inclusion."""
    labels = [S for k in range(n + 1) for S in combinations(range(1, n + 1), k)]
    pairs = []
    for S in labels:
        for a in range(1, n + 1):
            if a not in S:
                pairs.append((S, tuple(sorted(S + (a,)))))
    return build_poset(labels, pairs, check_redundant=False)


def tary_tree(t: int, n: int) -> Poset:
    """Complete t-ary tree of height n, root ``()`` at the bottom."""
    if t < 1 or n < 0:
        raise PosetError("need t >= 1 and n >= 0")
    labels = [w for k in range(n + 1) for w in product(range(t), repeat=k)]
    pairs = [(w[:-1], w) for w in labels if w]
    return build_poset(labels, pairs, check_redundant=False)


def subspace_lattice(n: int, q: int) -> Poset:
    """``B_n(q)``: all subspaces of F_q^n; labels are RREF row tuples."""
    return _subspace_poset(enumerate_subspaces(n, q))


def crosspolytope_faces(n: int) -> Poset:
    """``PCP_n``: faces of the n-cross-polytope with no antipodal pair.

    Vertex ``i`` is labelled ``i`` and its antipode ``-i``; faces are sorted
    tuples, the empty face is the minimum.
    """
    if n < 1:
        raise PosetError("need n >= 1")
    faces = []
    for k in range(n + 1):
        for support in combinations(range(1, n + 1), k):
            for signs in product((1, -1), repeat=k):
                faces.append(tuple(sorted(s * i for s, i in zip(signs, support))))
    pairs = []
    for F in faces:
        used = {abs(v) for v in F}
        for i in range(1, n + 1):
            if i not in used:
                for v in (i, -i):
                    pairs.append((F, tuple(sorted(F + (v,)))))
    return build_poset(faces, pairs, check_redundant=False)


def symplectic_form(u, v, n: int, q: int) -> int:
    """Standard alternating form on F_q^{2n}."""
    return sum(u[i] * v[n + i] - u[n + i] * v[i] for i in range(n)) % q


def isotropic_subspace_poset(n: int, q: int) -> Poset:
    """``PCP_n(q)``: totally isotropic subspaces of F_q^{2n}, including 0."""
    _check_prime(q)
    spaces = [U for U in enumerate_subspaces(2 * n, q, dims=range(n + 1))
              if all(symplectic_form(a, b, n, q) == 0 for a, b in combinations(U.rows, 2))]
    return _subspace_poset(spaces)


def whitney_numbers(P: Poset) -> List[int]:
    """Number of elements of each rank."""
    if not P.ranked:
        raise PosetError("Whitney numbers need a ranked poset")
    counts = [0] * (P.length + 1)
    for h in P.height:
        counts[h] += 1
    return counts


FAMILIES = {
    "boolean": lambda n, q, t: boolean_lattice(n),
    "chain": lambda n, q, t: chain(n),
    "tree": lambda n, q, t: tary_tree(t, n),
    "subspace": lambda n, q, t: subspace_lattice(n, q),
    "crosspolytope": lambda n, q, t: crosspolytope_faces(n),
    "isotropic": lambda n, q, t: isotropic_subspace_poset(n, q),
}


def build_family(family: str, n: int, q: int = 2, t: int = 2) -> Poset:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise PosetError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return builder(n, q, t)
