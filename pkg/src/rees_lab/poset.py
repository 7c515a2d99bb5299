"""Finite (ranked) posets and the structural operators built on them.

A :class:`Poset` is immutable.  Elements carry arbitrary hashable labels and
are indexed canonically by ``(height, label key)``, so indices always form a
linear extension and rebuilding from the same data gives the same indexing.
Order queries go through per-element bitsets (Python ints) computed lazily.
"""

from __future__ import annotations

import json
import random
from functools import cached_property
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

Label = Hashable


class PosetError(ValueError):
    pass


def label_key(x):
    """Total, deterministic sort key for nested labels of mixed types."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(label_key(e) for e in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(label_key(e) for e in x)))
    return (4, repr(x))


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset given by labels and its cover relation.

    Use :func:`build_poset` (labels + cover pairs of labels) rather than the
    constructor directly.
    """

    def __init__(self, elements: Sequence[Label], covers: Iterable[Tuple[int, int]],
                 heights: Sequence[int]):
        self.elements: Tuple[Label, ...] = tuple(elements)
        self.index: Dict[Label, int] = {x: i for i, x in enumerate(self.elements)}
        self.covers: frozenset = frozenset(covers)
        self.height: Tuple[int, ...] = tuple(heights)
        up: List[List[int]] = [[] for _ in self.elements]
        down: List[List[int]] = [[] for _ in self.elements]
        for i, j in sorted(self.covers):
            up[i].append(j)
            down[j].append(i)
        self.upper_covers: Tuple[Tuple[int, ...], ...] = tuple(map(tuple, up))
        self.lower_covers: Tuple[Tuple[int, ...], ...] = tuple(map(tuple, down))
        self.ranked: bool = self._graded()
        self.rank: Optional[Tuple[int, ...]] = self.height if self.ranked else None

    def _graded(self) -> bool:
        h = self.height
        if any(h[j] != h[i] + 1 for i, j in self.covers):
            return False
        tops = {h[i] for i in range(len(h)) if not self.upper_covers[i]}
        return len(tops) <= 1

    # -- basic queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        kind = f"ranked, length {self.length}" if self.ranked else "unranked"
        return f"<Poset {len(self)} elements, {kind}>"

    @property
    def length(self) -> int:
        """Length of the longest chain; -1 for the empty poset."""
        return max(self.height, default=-1)

    def rank_of(self, x: Label) -> int:
        if not self.ranked:
            raise PosetError("poset is not ranked")
        return self.height[self.index[x]]

    @cached_property
    def below(self) -> Tuple[int, ...]:
        """``below[i]`` is the bitset of all ``k <= i`` (including ``i``)."""
        out = [0] * len(self)
        for i in range(len(self)):
            m = 1 << i
            for k in self.lower_covers[i]:
                m |= out[k]
            out[i] = m
        return tuple(out)

    @cached_property
    def above(self) -> Tuple[int, ...]:
        out = [0] * len(self)
        for i in reversed(range(len(self))):
            m = 1 << i
            for k in self.upper_covers[i]:
                m |= out[k]
            out[i] = m
        return tuple(out)

    def leq_index(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def leq(self, x: Label, y: Label) -> bool:
        return self.leq_index(self.index[x], self.index[y])

    def less(self, x: Label, y: Label) -> bool:
        return x != y and self.leq(x, y)

    def minimal(self) -> List[int]:
        return [i for i in range(len(self)) if not self.lower_covers[i]]

    def maximal(self) -> List[int]:
        return [i for i in range(len(self)) if not self.upper_covers[i]]

    @property
    def bottom(self) -> Optional[Label]:
        m = self.minimal()
        return self.elements[m[0]] if len(m) == 1 else None

    @property
    def top(self) -> Optional[Label]:
        m = self.maximal()
        return self.elements[m[0]] if len(m) == 1 else None

    @property
    def is_bounded(self) -> bool:
        return len(self) > 0 and self.bottom is not None and self.top is not None

    def elements_of_rank(self, k: int) -> List[Label]:
        if not self.ranked:
            raise PosetError("poset is not ranked")
        return [x for x, h in zip(self.elements, self.height) if h == k]

    def cover_pairs(self) -> List[Tuple[Label, Label]]:
        return [(self.elements[i], self.elements[j]) for i, j in sorted(self.covers)]

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "elements": [_jsonable(x) for x in self.elements],
            "covers": [[i, j] for i, j in sorted(self.covers)],
            "ranks": list(self.rank) if self.ranked else None,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def to_dot(self, name: str = "P") -> str:
        """Hasse diagram in DOT, one ``rank=same`` row per level."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, x in enumerate(self.elements):
            lines.append(f'  n{i} [label="{_dot_label(x)}"];')
        for h in sorted(set(self.height)):
            row = " ".join(f"n{i};" for i in range(len(self)) if self.height[i] == h)
            lines.append(f"  {{ rank=same; {row} }}")
        for i, j in sorted(self.covers):
            lines.append(f"  n{i} -> n{j} [arrowhead=none];")
        lines.append("}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(e) for e in x]
    if isinstance(x, frozenset):
        return sorted((_jsonable(e) for e in x), key=label_key_json)
    return x


def label_key_json(x):
    return label_key(_hashable(x))


def _hashable(x):
    if isinstance(x, list):
        return tuple(_hashable(e) for e in x)
    return x


def _dot_label(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(_dot_label(e) for e in x) + ")"
    return str(x).replace('"', "'")


def poset_from_json(data) -> Poset:
    """Inverse of :meth:`Poset.to_json`; accepts a dict or a JSON string."""
    if isinstance(data, str):
        data = json.loads(data)
    labels = [_hashable(x) for x in data["elements"]]
    pairs = [(labels[i], labels[j]) for i, j in data["covers"]]
    P = build_poset(labels, pairs)
    ranks = data.get("ranks")
    if ranks is not None:
        if not P.ranked:
            raise PosetError("file declares ranks but the cover relation is not graded")
        if any(P.rank_of(x) != r for x, r in zip(labels, ranks)):
            raise PosetError("declared ranks disagree with the cover relation")
    return P


# ---------------------------------------------------------------------------
# construction

def build_poset(labels: Iterable[Label], cover_pairs: Iterable[Tuple[Label, Label]],
                check_redundant: bool = True) -> Poset:
    """Build a poset from labels and cover pairs ``(lower, upper)``.

    Raises :class:`PosetError` on unknown labels, duplicate labels, cycles,
    or (when ``check_redundant``) a supplied pair implied by transitivity.
    """
    labels = list(labels)
    pos = {x: k for k, x in enumerate(labels)}
    if len(pos) != len(labels):
        raise PosetError("duplicate labels")
    up: List[set] = [set() for _ in labels]
    indeg = [0] * len(labels)
    for a, b in cover_pairs:
        if a not in pos or b not in pos:
            raise PosetError(f"cover pair ({a!r}, {b!r}) references an unknown label")
        i, j = pos[a], pos[b]
        if i == j:
            raise PosetError(f"cycle detected at {a!r}")
        if j not in up[i]:
            up[i].add(j)
            indeg[j] += 1

    # Kahn's algorithm, computing heights as longest chains from below
    height = [0] * len(labels)
    stack = [i for i in range(len(labels)) if indeg[i] == 0]
    seen = 0
    while stack:
        i = stack.pop()
        seen += 1
        for j in up[i]:
            height[j] = max(height[j], height[i] + 1)
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
    if seen != len(labels):
        raise PosetError("cycle detected in cover relation")

    order = sorted(range(len(labels)), key=lambda k: (height[k], label_key(labels[k])))
    new = {old: new for new, old in enumerate(order)}
    covers = [(new[i], new[j]) for i in range(len(labels)) for j in up[i]]
    P = Poset([labels[k] for k in order], covers, [height[k] for k in order])
    if check_redundant:
        below = P.below
        for i, j in P.covers:
            strictly_between = below[j] & ~(1 << j) & P.above[i] & ~(1 << i)
            if strictly_between:
                raise PosetError(
                    f"cover ({P.elements[i]!r}, {P.elements[j]!r}) is implied by transitivity")
    return P


def poset_from_relation(labels: Sequence[Label], leq) -> Poset:
    """Build a poset from a ``leq(x, y)`` predicate by transitive reduction."""
    labels = list(labels)
    n = len(labels)
    less = [[j for j in range(n) if j != i and leq(labels[i], labels[j])] for i in range(n)]
    lset = [set(row) for row in less]
    pairs = []
    for i in range(n):
        for j in less[i]:
            if not any(j in lset[k] for k in less[i]):
                pairs.append((labels[i], labels[j]))
    return build_poset(labels, pairs)


def chain(n: int) -> Poset:
    """The n-element chain ``0 < 1 < ... < n-1``."""
    return build_poset(range(n), [(i, i + 1) for i in range(n - 1)])


def subposet(P: Poset, indices: Iterable[int]) -> Poset:
    """Induced subposet on the given element indices (general, via reduction)."""
    idx = sorted(set(indices))
    mask = 0
    for i in idx:
        mask |= 1 << i
    below, above = P.below, P.above
    pairs = []
    for j in idx:
        lower = below[j] & mask & ~(1 << j)
        for i in _bits(lower):
            between = lower & above[i] & ~(1 << i)
            if not between:
                pairs.append((P.elements[i], P.elements[j]))
    return build_poset([P.elements[i] for i in idx], pairs, check_redundant=False)


def _convex_subposet(P: Poset, mask: int) -> Poset:
    # covers of a convex subset are exactly the restricted covers
    labels = [P.elements[i] for i in _bits(mask)]
    pairs = [(P.elements[i], P.elements[j]) for i, j in P.covers if mask >> i & 1 and mask >> j & 1]
    return build_poset(labels, pairs, check_redundant=False)


def _fresh(base: str, P: Poset) -> str:
    label = base
    while label in P.index:
        label += "'"
    return label


TOP = "1^"
BOTTOM = "0^"


def dual(P: Poset) -> Poset:
    return build_poset(P.elements, [(b, a) for a, b in P.cover_pairs()], check_redundant=False)


def adjoin_top(P: Poset) -> Poset:
    """``P^+``: adjoin a new maximum element."""
    t = _fresh(TOP, P)
    pairs = P.cover_pairs() + [(P.elements[i], t) for i in P.maximal()]
    return build_poset(list(P.elements) + [t], pairs, check_redundant=False)


def adjoin_bottom(P: Poset) -> Poset:
    b = _fresh(BOTTOM, P)
    pairs = P.cover_pairs() + [(b, P.elements[i]) for i in P.minimal()]
    return build_poset([b] + list(P.elements), pairs, check_redundant=False)


def adjoin_bottom_and_top(P: Poset) -> Poset:
    """``P-hat``: adjoin a new minimum and a new maximum."""
    return adjoin_top(adjoin_bottom(P))


def remove_bottom(P: Poset) -> Poset:
    """``P^-``: delete the unique minimum element."""
    b = P.bottom
    if b is None or len(P) == 0:
        raise PosetError("poset has no unique minimum element")
    return _convex_subposet(P, ((1 << len(P)) - 1) & ~(1 << P.index[b]))


def remove_top(P: Poset) -> Poset:
    t = P.top
    if t is None or len(P) == 0:
        raise PosetError("poset has no unique maximum element")
    return _convex_subposet(P, ((1 << len(P)) - 1) & ~(1 << P.index[t]))


def interval(P: Poset, x: Label, y: Label, closed: bool = True) -> Poset:
    """``[x, y]`` (closed) or ``(x, y)`` (open) as an induced subposet."""
    i, j = P.index[x], P.index[y]
    if not P.leq_index(i, j):
        raise PosetError(f"{x!r} is not below {y!r}")
    mask = P.above[i] & P.below[j]
    if not closed:
        mask &= ~((1 << i) | (1 << j))
    return _convex_subposet(P, mask)


def lower_ideal(P: Poset, y: Label, closed: bool = True) -> Poset:
    j = P.index[y]
    mask = P.below[j] if closed else P.below[j] & ~(1 << j)
    return _convex_subposet(P, mask)


def upper_ideal(P: Poset, x: Label, closed: bool = True) -> Poset:
    i = P.index[x]
    mask = P.above[i] if closed else P.above[i] & ~(1 << i)
    return _convex_subposet(P, mask)


# ---------------------------------------------------------------------------
# Rees products and the derived ideals

def rees_product(P: Poset, Q: Poset) -> Poset:
    """Rees product ``P * Q`` of two ranked posets.

    Elements are pairs ``(p, q)`` with ``rank(p) >= rank(q)``; ``(p2, q2)``
    covers ``(p1, q1)`` iff ``p2`` covers ``p1`` and ``q2`` equals or covers
    ``q1``.  The rank of ``(p, q)`` is ``rank(p)``.
    """
    if not (P.ranked and Q.ranked):
        raise PosetError("Rees product needs ranked factors")
    rp, rq = P.height, Q.height
    labels = []
    for i, p in enumerate(P.elements):
        for k, q in enumerate(Q.elements):
            if rp[i] >= rq[k]:
                labels.append((p, q))
    pairs = []
    for i, j in P.covers:
        for k, q in enumerate(Q.elements):
            if rq[k] > rp[i]:
                continue
            pairs.append(((P.elements[i], q), (P.elements[j], q)))
            for l in Q.upper_covers[k]:
                # rq[l] = rq[k] + 1 <= rp[i] + 1 = rp[j]
                pairs.append(((P.elements[i], q), (P.elements[j], Q.elements[l])))
    return build_poset(labels, pairs, check_redundant=False)


def rees_product_by_relation(P: Poset, Q: Poset) -> Poset:
    """Rees product built from the order relation plus transitive reduction.

    Independent of :func:`rees_product`; used to cross-check the cover rule.
    """
    if not (P.ranked and Q.ranked):
        raise PosetError("Rees product needs ranked factors")
    labels = [(p, q) for p in P.elements for q in Q.elements if P.rank_of(p) >= Q.rank_of(q)]

    def leq(a, b):
        (p1, q1), (p2, q2) = a, b
        return (P.leq(p1, p2) and Q.leq(q1, q2)
                and P.rank_of(p2) - P.rank_of(p1) >= Q.rank_of(q2) - Q.rank_of(q1))

    return poset_from_relation(labels, leq)


def _require_bounded_ranked(P: Poset) -> int:
    if not (P.ranked and P.is_bounded):
        raise PosetError("poset must be bounded and ranked")
    return P.length


def ideal_Ij(P: Poset, j: int) -> Poset:
    """``I_j(P)``: open lower ideal of ``(top, j)`` in ``P^- * C_n``."""
    n = _require_bounded_ranked(P)
    if not 0 <= j <= n - 1:
        raise PosetError(f"j={j} out of range 0..{n - 1}")
    R = rees_product(remove_bottom(P), chain(n))
    return lower_ideal(R, (P.top, j), closed=False)


def truncated_rees_chain(P: Poset) -> Poset:
    """``P^- * C_n`` for a ranked ``P`` of length ``n`` with a minimum."""
    if not P.ranked or P.bottom is None:
        raise PosetError("poset must be ranked with a unique minimum")
    n = P.length
    return rees_product(remove_bottom(P), chain(n))


def r_i_poset(P: Poset, i: int) -> Poset:
    """Closed lower ideal of ``(top, x_i)`` in ``P * {x_0 < ... < x_n}``.

    The chain elements ``x_j`` are labelled by the integers ``j``.
    """
    n = _require_bounded_ranked(P)
    if not 0 <= i <= n:
        raise PosetError(f"i={i} out of range 0..{n}")
    R = rees_product(P, chain(n + 1))
    return lower_ideal(R, (P.top, i), closed=True)


def psi_i(P: Poset, i: int) -> Dict[Label, Label]:
    """The map ``(a, x_j) -> (a, x_{i-j})`` from ``R_i(P)`` to ``R_i(P*)``."""
    return {(a, j): (a, i - j) for a, j in r_i_poset(P, i).elements}


def check_order_map(P: Poset, Q: Poset, f: Mapping[Label, Label], reverse: bool = False) -> bool:
    """True iff ``f`` is an isomorphism ``P -> Q`` (antiisomorphism if ``reverse``)."""
    if len(P) != len(Q) or set(f) != set(P.elements) or set(f.values()) != set(Q.elements):
        return False
    img = [Q.index[f[x]] for x in P.elements]
    for a in range(len(P)):
        for b in range(len(P)):
            lhs = P.leq_index(a, b)
            rhs = Q.leq_index(img[b], img[a]) if reverse else Q.leq_index(img[a], img[b])
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# isomorphism and uniformity

def _signature(P: Poset, i: int):
    return (P.height[i], len(P.lower_covers[i]), len(P.upper_covers[i]),
            bin(P.below[i]).count("1"), bin(P.above[i]).count("1"))


def _search_order(P: Poset, sig_count: Dict[tuple, int], sp: List[tuple]) -> List[int]:
    """Greedy order: next is the element with most already-ordered neighbours."""
    n = len(P)
    placed = [False] * n
    links = [0] * n
    order = []
    for _ in range(n):
        best = max((i for i in range(n) if not placed[i]),
                   key=lambda i: (links[i], -sig_count[sp[i]], -i))
        placed[best] = True
        order.append(best)
        for k in P.lower_covers[best] + P.upper_covers[best]:
            links[k] += 1
    return order


def find_isomorphism(P: Poset, Q: Poset) -> Optional[Dict[Label, Label]]:
    """Backtracking search for an isomorphism, or ``None``.  Desk scale only."""
    if len(P) != len(Q) or len(P.covers) != len(Q.covers):
        return None
    sp = [_signature(P, i) for i in range(len(P))]
    sq = [_signature(Q, i) for i in range(len(Q))]
    if sorted(sp) != sorted(sq):
        return None
    candidates: Dict[tuple, List[int]] = {}
    for k, s in enumerate(sq):
        candidates.setdefault(s, []).append(k)
    sig_count = {s: len(v) for s, v in candidates.items()}
    order = _search_order(P, sig_count, sp)
    q_down = [set(c) for c in Q.lower_covers]
    q_up = [set(c) for c in Q.upper_covers]
    image = [-1] * len(P)
    used = [False] * len(Q)

    def consistent(i: int, c: int) -> bool:
        mapped = 0
        for k in P.lower_covers[i]:
            if image[k] >= 0:
                if image[k] not in q_down[c]:
                    return False
                mapped += 1
        for k in P.upper_covers[i]:
            if image[k] >= 0:
                if image[k] not in q_up[c]:
                    return False
                mapped += 1
        # no extra adjacency to already used elements of Q
        return mapped == sum(1 for d in Q.lower_covers[c] + Q.upper_covers[c] if used[d])

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        i = order[pos]
        for c in candidates[sp[i]]:
            if used[c] or not consistent(i, c):
                continue
            image[i] = c
            used[c] = True
            if extend(pos + 1):
                return True
            used[c] = False
        image[i] = -1
        return False

    if not extend(0):
        return None
    return {P.elements[i]: Q.elements[image[i]] for i in range(len(P))}


def poset_isomorphic(P: Poset, Q: Poset) -> bool:
    return find_isomorphism(P, Q) is not None


def is_uniform(P: Poset) -> bool:
    """Same-rank upper intervals ``[x, top]`` are pairwise isomorphic."""
    if not (P.ranked and P.is_bounded):
        return False
    top = P.top
    for k in range(P.length + 1):
        xs = P.elements_of_rank(k)
        first = interval(P, xs[0], top)
        for x in xs[1:]:
            if not poset_isomorphic(first, interval(P, x, top)):
                return False
    return True


# ---------------------------------------------------------------------------
# random bounded ranked posets

def random_ranked_bounded_poset(n: int, width: int, density: float, seed: int) -> Poset:
    """Random bounded ranked poset of length ``n``.

    Levels ``1..n-1`` hold ``1..width`` elements.  Each element covers at
    least one element of the level below and is covered by at least one of
    the level above, so the result is graded and bounded by construction.
    """
    if n < 1 or width < 1 or not 0 < density <= 1:
        raise PosetError("need n >= 1, width >= 1, 0 < density <= 1")
    rng = random.Random(seed)
    levels = [[(0, 0)]]
    for k in range(1, n):
        levels.append([(k, i) for i in range(rng.randint(1, width))])
    levels.append([(n, 0)])
    pairs = set()
    for k in range(n):
        low, high = levels[k], levels[k + 1]
        for y in high:
            chosen = [x for x in low if rng.random() < density]
            if not chosen:
                chosen = [rng.choice(low)]
            pairs.update((x, y) for x in chosen)
        covered = {x for x, _ in pairs if x[0] == k}
        for x in low:
            if x not in covered:
                pairs.add((x, rng.choice(high)))
    labels = [x for level in levels for x in level]
    return build_poset(labels, sorted(pairs))
