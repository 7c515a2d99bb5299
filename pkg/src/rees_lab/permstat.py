"""Permutation statistics, barred permutations, derangement families and
their generating polynomials.

Permutations are one-line words: tuples of ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb, factorial
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Sequence, Tuple

from .polynomial import Polynomial

Word = Tuple[int, ...]


def check_permutation(w: Sequence[int]) -> Word:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w!r} is not a permutation of 1..{len(w)}")
    return w


def parse_permutation(text: str) -> Word:
    """``"42153"`` or ``"4,2,1,5,3"`` -> ``(4, 2, 1, 5, 3)``."""
    text = text.strip()
    parts = text.replace(" ", ",").split(",") if ("," in text or " " in text) else list(text)
    return check_permutation(int(p) for p in parts if p)


def all_permutations(n: int) -> Iterator[Word]:
    return permutations(range(1, n + 1))


class PermStats(NamedTuple):
    exc: int
    maj: int
    comaj: int
    des: int
    fix: int


def descents(w: Sequence[int]) -> List[int]:
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def exc(w: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(w, 1) if v > i)


def maj(w: Sequence[int]) -> int:
    return sum(descents(w))


def fix(w: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(w, 1) if v == i)


def comaj(w: Sequence[int]) -> int:
    return comb(len(w), 2) - maj(w)


def stats(w: Sequence[int]) -> PermStats:
    w = check_permutation(w)
    d = descents(w)
    m = sum(d)
    return PermStats(exc=exc(w), maj=m, comaj=comb(len(w), 2) - m, des=len(d), fix=fix(w))


def exd_set(w: Sequence[int]) -> FrozenSet[int]:
    """Descent set of the word with bars on excedance positions, under the
    order ``1bar < ... < nbar < 1 < ... < n``."""
    w = check_permutation(w)
    key = [(0, v) if v > i else (1, v) for i, v in enumerate(w, 1)]
    return frozenset(i + 1 for i in range(len(w) - 1) if key[i] > key[i + 1])


def exd_set_shifted(w: Sequence[int]) -> FrozenSet[int]:
    """Same set as :func:`exd_set`, computed by shifting barred letters down by n."""
    n = len(w)
    shifted = [v - n if v > i else v for i, v in enumerate(w, 1)]
    return frozenset(descents(shifted))


def cycle_type(w: Sequence[int]) -> Tuple[int, ...]:
    seen = [False] * (len(w) + 1)
    parts = []
    for start in range(1, len(w) + 1):
        if not seen[start]:
            k, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = w[x - 1]
                k += 1
            parts.append(k)
    return tuple(sorted(parts, reverse=True))


# ---------------------------------------------------------------------------
# generating polynomials

FLAVORS: Dict[str, Tuple[Tuple[str, str], ...]] = {
    "maj-exc": (("q", "maj"), ("t", "exc")),
    "comaj-exc": (("q", "comaj"), ("t", "exc")),
    "comaj-exc-fix": (("q", "comaj"), ("t", "exc"), ("r", "fix")),
    "maj-exc-fix": (("q", "maj"), ("t", "exc"), ("r", "fix")),
    "des": (("t", "des"),),
    "exc": (("t", "exc"),),
    "maj": (("q", "maj"),),
}


def generating_polynomial(words, spec: Sequence[Tuple[str, str]]) -> Polynomial:
    """``sum_w prod_i var_i ** stat_i(w)`` over the given words."""
    terms: Dict[tuple, int] = {}
    for w in words:
        s = stats(w)._asdict()
        mono = tuple(sorted((v, s[name]) for v, name in spec if s[name]))
        terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(terms)


def q_eulerian(n: int, flavor: str = "maj-exc") -> Polynomial:
    """Joint distribution polynomial over S_n; ``1`` for ``n = 0``."""
    try:
        spec = FLAVORS[flavor]
    except KeyError:
        raise ValueError(f"unknown flavor {flavor!r}; choose from {sorted(FLAVORS)}") from None
    return generating_polynomial(all_permutations(n), spec)


def eulerian_number(n: int, j: int) -> int:
    """Permutations of [n] with exactly j descents (brute force)."""
    return sum(1 for w in all_permutations(n) if len(descents(w)) == j)


def derangements(n: int) -> Iterator[Word]:
    return (w for w in all_permutations(n) if fix(w) == 0)


def d_count(n: int) -> int:
    return sum(1 for _ in derangements(n))


def d_count_formula(n: int) -> int:
    return sum((-1) ** m * comb(n, m) * factorial(n - m) for m in range(n + 1))


def derangement_poly(n: int) -> Polynomial:
    """``sum over derangements of q^comaj t^exc``."""
    return generating_polynomial(derangements(n), FLAVORS["comaj-exc"])


def q_derangement(n: int) -> Polynomial:
    """``d_n(q) = sum over derangements of q^(comaj + exc)``."""
    return derangement_poly(n).subs(t=Polynomial.var("q"))


# ---------------------------------------------------------------------------
# barred permutations (type BC)

@dataclass(frozen=True)
class BarredPermutation:
    word: Word
    bars: FrozenSet[int]  # barred positions, 1-based

    def __post_init__(self):
        check_permutation(self.word)
        if not self.bars <= set(range(1, len(self.word) + 1)):
            raise ValueError("bar positions out of range")

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(f"{v}bar" if i in self.bars else str(v) for i, v in enumerate(self.word, 1))


def is_bc_derangement(s: BarredPermutation) -> bool:
    # a barred i at position i is not a fixed point
    return all(v != i or i in s.bars for i, v in enumerate(s.word, 1))


def bc_derangements(n: int) -> Iterator[BarredPermutation]:
    """Type-BC derangements, ordered by word then by bar set."""
    for w in all_permutations(n):
        fixed = [i for i, v in enumerate(w, 1) if v == i]
        free = [i for i in range(1, n + 1) if w[i - 1] != i]
        for k in range(len(free) + 1):
            for extra in combinations(free, k):
                yield BarredPermutation(w, frozenset(fixed) | frozenset(extra))


def bnd(s: BarredPermutation) -> int:
    """Bar index: move the fixed points of the underlying permutation to the
    front (increasing, bars kept), then sum the barred positions."""
    w = s.word
    fixed = [(v, i) for i, v in enumerate(w, 1) if v == i]
    rest = [(v, i) for i, v in enumerate(w, 1) if v != i]
    rearranged = sorted(fixed) + rest
    return sum(pos for pos, (_, i) in enumerate(rearranged, 1) if i in s.bars)


def bnd_by_count(s: BarredPermutation) -> int:
    """Bar index from ``k`` fixed points: ``1+..+k`` plus ``k + j`` for each
    barred letter at the j-th non-fixed position."""
    k = fix(s.word)
    total = k * (k + 1) // 2
    j = 0
    for i, v in enumerate(s.word, 1):
        if v != i:
            j += 1
            if i in s.bars:
                total += k + j
    return total


def bc_poly(n: int) -> Polynomial:
    """``sum over D_n^BC of q^(comaj + exc + bnd)``."""
    terms: Dict[tuple, int] = {}
    for s in bc_derangements(n):
        st = stats(s.word)
        e = st.comaj + st.exc + bnd(s)
        mono = (("q", e),) if e else ()
        terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(terms)


def bc_count_formula(n: int) -> int:
    return sum((-1) ** j * comb(n, j) * 2 ** (n - j) * factorial(n - j) for j in range(n + 1))


# ---------------------------------------------------------------------------
# words and multiset derangements

def words_W(n: int, j: int, m: int) -> Iterator[Word]:
    """Words of length n over [m] with no equal adjacent letters and j descents."""
    for w in product(range(1, m + 1), repeat=n):
        if any(w[i] == w[i + 1] for i in range(n - 1)):
            continue
        if len(descents(w)) == j:
            yield w


@dataclass(frozen=True)
class MultisetDerangement:
    top: Word
    bottom: Word

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise ValueError("rows differ in length")
        if any(a > b for a, b in zip(self.top, self.top[1:])):
            raise ValueError("top row must be weakly increasing")
        if sorted(self.top) != sorted(self.bottom):
            raise ValueError("rows are not equal as multisets")
        if any(a == b for a, b in zip(self.top, self.bottom)):
            raise ValueError("a column has equal entries")

    def monomial(self) -> Tuple[int, ...]:
        """Exponent vector of ``x^D`` (top-row content), indexed from x_1."""
        m = max(self.top, default=0)
        exps = [0] * m
        for a in self.top:
            exps[a - 1] += 1
        return tuple(exps)


def _distinct_arrangements(counts: Dict[int, int], top: Word, pos: int, acc: list):
    if pos == len(top):
        yield tuple(acc)
        return
    for a in sorted(counts):
        if counts[a] and a != top[pos]:
            counts[a] -= 1
            acc.append(a)
            yield from _distinct_arrangements(counts, top, pos + 1, acc)
            acc.pop()
            counts[a] += 1


def multiset_derangements(content: Sequence[int]) -> Iterator[MultisetDerangement]:
    """All multiset derangements whose rows have the given content."""
    top = tuple(sorted(content))
    counts: Dict[int, int] = {}
    for a in top:
        counts[a] = counts.get(a, 0) + 1
    for bottom in _distinct_arrangements(counts, top, 0, []):
        yield MultisetDerangement(top, bottom)


def multiset_derangements_of_order(n: int, m: int) -> Iterator[MultisetDerangement]:
    """Multiset derangements of order n with entries in [m]."""
    for content in combinations_with_replacement(range(1, m + 1), n):
        yield from multiset_derangements(content)
