"""Exact symmetric and quasisymmetric functions of bounded degree.

:class:`SymFunc` stores a homogeneous symmetric function by its monomial
coefficients (``Fraction``).  The ``h``, ``e``, ``p`` bases enter through
transition matrices into the monomial basis, cached per degree; Schur
functions are built from irreducible characters (Murnaghan-Nakayama).
:class:`QSymExpansion` is an honest polynomial in ``x_1..x_m`` and is used
where quasisymmetry or symmetry has to be observed rather than assumed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import factorial, prod
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from .permstat import all_permutations, exd_set, stats

Partition = Tuple[int, ...]
ClassFunction = Dict[Partition, int]


class NotSymmetricError(ValueError):
    pass


# ---------------------------------------------------------------------------
# partitions

def partitions(n: int, largest: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def partition_list(n: int) -> Tuple[Partition, ...]:
    return tuple(partitions(n))


def z_lambda(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``lam``."""
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= part ** m * factorial(m)
    return out


def class_size(lam: Partition) -> int:
    return factorial(sum(lam)) // z_lambda(lam)


def sort_partition(parts: Iterable[int]) -> Partition:
    return tuple(sorted((p for p in parts if p), reverse=True))


def representative(lam: Partition) -> Tuple[int, ...]:
    """A permutation (one-line, 1-based) with cycle type ``lam``; cycles on consecutive letters."""
    w = []
    start = 1
    for part in lam:
        block = list(range(start, start + part))
        w.extend(block[1:] + block[:1])
        start += part
    return tuple(w)


# ---------------------------------------------------------------------------
# transition matrices into the monomial basis

@lru_cache(maxsize=None)
def _count_matrices(kind: str, rows: Partition, cols: Partition) -> int:
    """Coefficient of ``x^cols`` in ``b_rows`` for ``b`` in h, e, p.

    Counts nonnegative integer matrices with the given row and column sums,
    where ``e`` restricts entries to 0/1 and ``p`` allows one nonzero entry
    per row.  Dynamic programme over columns.
    """

    @lru_cache(maxsize=None)
    def go(c: int, remaining: Tuple[int, ...]) -> int:
        if c == len(cols):
            return int(not any(remaining))
        total = 0
        for take in _column_choices(kind, rows, remaining, cols[c]):
            total += go(c + 1, tuple(r - a for r, a in zip(remaining, take)))
        return total

    return go(0, rows)


def _column_choices(kind, rows, remaining, target):
    def rec(i, left):
        if i == len(remaining):
            if left == 0:
                yield ()
            return
        if kind == "h":
            options = range(min(remaining[i], left) + 1)
        elif kind == "e":
            options = (0, 1) if remaining[i] >= 1 and left >= 1 else (0,)
        else:  # p: the whole part lands in one variable
            options = (0, rows[i]) if remaining[i] == rows[i] and rows[i] <= left else (0,)
        for a in options:
            for tail in rec(i + 1, left - a):
                yield (a,) + tail

    yield from rec(0, target)


_MATRIX_CACHE: Dict[Tuple[str, int], Tuple[Tuple[int, ...], ...]] = {}
_INVERSE_CACHE: Dict[Tuple[str, int], Tuple[Tuple[Fraction, ...], ...]] = {}


def basis_matrix(n: int, basis: str) -> Tuple[Tuple[int, ...], ...]:
    """``M[i][k]`` = coefficient of ``m_{mu_k}`` in ``basis_{lambda_i}``,
    both indexed by :func:`partition_list`."""
    key = (basis, n)
    if key not in _MATRIX_CACHE:
        if basis not in ("h", "e", "p"):
            raise ValueError(f"unknown basis {basis!r}")
        parts = partition_list(n)
        _MATRIX_CACHE[key] = tuple(
            tuple(_count_matrices(basis, lam, mu) for mu in parts) for lam in parts)
    return _MATRIX_CACHE[key]


def _invert(M) -> Tuple[Tuple[Fraction, ...], ...]:
    size = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(int(i == k)) for k in range(size)]
         for i, row in enumerate(M)]
    for c in range(size):
        pr = next((r for r in range(c, size) if A[r][c] != 0), None)
        if pr is None:
            raise ArithmeticError("singular transition matrix")
        A[c], A[pr] = A[pr], A[c]
        piv = A[c][c]
        A[c] = [v / piv for v in A[c]]
        for r in range(size):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return tuple(tuple(row[size:]) for row in A)


def inverse_basis_matrix(n: int, basis: str):
    """Inverse of :func:`basis_matrix`: expresses ``m_mu`` in the given basis."""
    key = (basis, n)
    if key not in _INVERSE_CACHE:
        _INVERSE_CACHE[key] = _invert(basis_matrix(n, basis))
    return _INVERSE_CACHE[key]


# ---------------------------------------------------------------------------
# characters of S_n

@lru_cache(maxsize=None)
def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character ``chi^lam`` at cycle type ``mu`` (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = sorted((c if x == b else x for x in beta), reverse=True)
        new_lam = sort_partition(new_beta[i] - (ell - 1 - i) for i in range(ell))
        total += (-1) ** height * character(new_lam, rest)
    return total


# ---------------------------------------------------------------------------
# SymFunc

def _clean(coeffs: Mapping) -> Dict[Partition, Fraction]:
    return {tuple(lam): Fraction(c) for lam, c in coeffs.items() if c}


class SymFunc:
    """Homogeneous symmetric function, stored in the monomial basis."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Partition, object] | None = None):
        self.degree = degree
        self.coeffs: Dict[Partition, Fraction] = _clean(coeffs or {})
        for lam in self.coeffs:
            if sum(lam) != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")

    # constructors
    @classmethod
    def m(cls, lam: Partition) -> "SymFunc":
        lam = tuple(lam)
        return cls(sum(lam), {lam: 1})

    @classmethod
    def from_basis(cls, basis: str, degree: int, coeffs: Mapping[Partition, object]) -> "SymFunc":
        if basis == "m":
            return cls(degree, coeffs)
        if basis == "s":
            out: Dict[Partition, Fraction] = {}
            for lam, c in coeffs.items():
                for mu, v in schur(tuple(lam)).coeffs.items():
                    out[mu] = out.get(mu, 0) + Fraction(c) * v
            return cls(degree, out)
        parts = partition_list(degree)
        M = basis_matrix(degree, basis)
        pos = {lam: i for i, lam in enumerate(parts)}
        out = {}
        for lam, c in coeffs.items():
            row = M[pos[tuple(lam)]]
            for k, v in enumerate(row):
                if v:
                    out[parts[k]] = out.get(parts[k], 0) + Fraction(c) * v
        return cls(degree, out)

    @classmethod
    def h(cls, n: int) -> "SymFunc":
        return cls.from_basis("h", n, {(n,) if n else (): 1})

    @classmethod
    def e(cls, n: int) -> "SymFunc":
        return cls.from_basis("e", n, {(n,): 1}) if n else cls(0, {(): 1})

    @classmethod
    def p(cls, lam: Partition) -> "SymFunc":
        return cls.from_basis("p", sum(lam), {tuple(lam): 1})

    @classmethod
    def zero(cls, degree: int) -> "SymFunc":
        return cls(degree)

    def to_basis(self, basis: str) -> Dict[Partition, Fraction]:
        """Coefficients in the ``m``, ``h``, ``e``, ``p`` or ``s`` basis."""
        if basis == "m":
            return dict(self.coeffs)
        if basis == "s":
            return {lam: c for lam, c in schur_decompose(self).items() if c}
        parts = partition_list(self.degree)
        pos = {lam: i for i, lam in enumerate(parts)}
        Minv = inverse_basis_matrix(self.degree, basis)
        out: Dict[Partition, Fraction] = {}
        for mu, c in self.coeffs.items():
            row = Minv[pos[mu]]
            for i, v in enumerate(row):
                if v:
                    out[parts[i]] = out.get(parts[i], 0) + c * v
        return {lam: c for lam, c in out.items() if c}

    def coefficient(self, lam: Partition) -> Fraction:
        return self.coeffs.get(tuple(lam), Fraction(0))

    # arithmetic
    def _same_degree(self, other: "SymFunc") -> None:
        if self.degree != other.degree and self.coeffs and other.coeffs:
            raise ValueError("adding symmetric functions of different degrees")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if isinstance(other, int) and other == 0:
            return self
        self._same_degree(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(max(self.degree, other.degree) if not self.coeffs else self.degree, out)

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.degree, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            a, b = self.to_basis("p"), other.to_basis("p")
            out: Dict[Partition, Fraction] = {}
            for l1, c1 in a.items():
                for l2, c2 in b.items():
                    lam = sort_partition(l1 + l2)
                    out[lam] = out.get(lam, 0) + c1 * c2
            return SymFunc.from_basis("p", self.degree + other.degree, out)
        return SymFunc(self.degree, {lam: c * other for lam, c in self.coeffs.items()})

    def __rmul__(self, other) -> "SymFunc":
        return self * other

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def omega(self) -> "SymFunc":
        """``omega(p_lam) = (-1)^(n - len(lam)) p_lam``."""
        n = self.degree
        pc = self.to_basis("p")
        return SymFunc.from_basis("p", n, {lam: (-1) ** (n - len(lam)) * c for lam, c in pc.items()})

    def restrict(self, nvars: int) -> "SymFunc":
        """Specialize to ``nvars`` variables (drops ``m_lam`` with too many parts)."""
        return SymFunc(self.degree, {lam: c for lam, c in self.coeffs.items() if len(lam) <= nvars})

    def expand(self, nvars: int) -> "QSymExpansion":
        terms: Dict[Tuple[int, ...], int] = {}
        for lam, c in self.coeffs.items():
            if len(lam) > nvars:
                continue
            if c.denominator != 1:
                raise ValueError("expansion needs integer coefficients")
            padded = lam + (0,) * (nvars - len(lam))
            for exps in set(permutations(padded)):
                terms[exps] = int(c)
        return QSymExpansion(self.degree, nvars, terms)

    def to_json(self) -> dict:
        return {"degree": self.degree, "basis": "m",
                "coeffs": {str(list(lam)): str(c) for lam, c in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        import json
        coeffs = {tuple(json.loads(k)): Fraction(v) for k, v in data["coeffs"].items()}
        return cls.from_basis(data.get("basis", "m"), data["degree"], coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for lam in partition_list(self.degree):
            c = self.coeffs.get(lam)
            if c:
                name = "m[" + ",".join(map(str, lam)) + "]"
                terms.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(terms)


@lru_cache(maxsize=None)
def schur(lam: Partition) -> SymFunc:
    n = sum(lam)
    coeffs = {mu: Fraction(character(lam, mu), z_lambda(mu)) for mu in partition_list(n)}
    return SymFunc.from_basis("p", n, coeffs)


def frobenius(chi: Mapping[Partition, int], n: int) -> SymFunc:
    """``ch(chi) = sum_lam chi(lam) p_lam / z_lam``."""
    coeffs = {tuple(lam): Fraction(v, z_lambda(tuple(lam))) for lam, v in chi.items()}
    for lam in coeffs:
        if sum(lam) != n:
            raise ValueError(f"{lam} is not a partition of {n}")
    return SymFunc.from_basis("p", n, coeffs)


def class_function(f: SymFunc) -> ClassFunction:
    """Inverse of :func:`frobenius`: values ``chi(lam) = z_lam * [p_lam] f``."""
    pc = f.to_basis("p")
    out = {}
    for lam in partition_list(f.degree):
        v = pc.get(lam, 0) * z_lambda(lam)
        out[lam] = int(v) if v.denominator == 1 else v
    return out


def schur_decompose(f: SymFunc) -> Dict[Partition, Fraction]:
    """Multiplicities ``<f, s_lam>`` for every partition of ``f.degree``.

    Integral for characters of true or virtual representations; inspect
    :func:`is_representation` for nonnegativity.
    """
    pc = f.to_basis("p")
    out = {}
    for lam in partition_list(f.degree):
        out[lam] = sum((c * character(lam, mu) for mu, c in pc.items()), Fraction(0))
    return out


def is_representation(f: SymFunc) -> bool:
    """True iff all Schur multiplicities are nonnegative integers."""
    return all(c.denominator == 1 and c >= 0 for c in schur_decompose(f).values())


# ---------------------------------------------------------------------------
# quasisymmetric expansions

class QSymExpansion:
    """Homogeneous polynomial of degree n in x_1..x_m with integer coefficients."""

    def __init__(self, degree: int, nvars: int, terms: Mapping[Tuple[int, ...], int]):
        self.degree = degree
        self.nvars = nvars
        self.terms = {tuple(e): c for e, c in terms.items() if c}
        for e in self.terms:
            if len(e) != nvars or sum(e) != degree:
                raise ValueError(f"monomial {e} is not of degree {degree} in {nvars} variables")

    def __add__(self, other: "QSymExpansion") -> "QSymExpansion":
        if (self.degree, self.nvars) != (other.degree, other.nvars):
            raise ValueError("incompatible expansions")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return QSymExpansion(self.degree, self.nvars, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymExpansion):
            return NotImplemented
        return (self.degree, self.nvars, self.terms) == (other.degree, other.nvars, other.terms)

    def coefficient(self, exps: Tuple[int, ...]) -> int:
        return self.terms.get(tuple(exps), 0)

    def symmetry_violation(self) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """A pair of monomials in one S_m-orbit with different coefficients, or None."""
        seen: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], int]] = {}
        for e, c in self.terms.items():
            key = tuple(sorted(e, reverse=True))
            if key in seen and seen[key][1] != c:
                return seen[key][0], e
            seen.setdefault(key, (e, c))
        for key, (e, c) in seen.items():
            padded = key
            for other in set(permutations(padded)):
                if self.terms.get(other, 0) != c:
                    return e, other
        return None

    def is_symmetric(self) -> bool:
        return self.symmetry_violation() is None

    def is_quasisymmetric(self) -> bool:
        by_comp: Dict[Tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            comp = tuple(a for a in e if a)
            if by_comp.setdefault(comp, c) != c:
                return False
        # every placement of a composition must appear with the same coefficient
        from itertools import combinations
        for comp, c in by_comp.items():
            for slots in combinations(range(self.nvars), len(comp)):
                e = [0] * self.nvars
                for s, a in zip(slots, comp):
                    e[s] = a
                if self.terms.get(tuple(e), 0) != c:
                    return False
        return True

    def to_monomial_basis(self) -> SymFunc:
        if self.nvars < self.degree:
            raise ValueError("need at least as many variables as the degree")
        bad = self.symmetry_violation()
        if bad is not None:
            raise NotSymmetricError(f"not symmetric: coefficients of {bad[0]} and {bad[1]} differ")
        out = {}
        for lam in partition_list(self.degree):
            padded = lam + (0,) * (self.nvars - len(lam))
            out[lam] = self.terms.get(padded, 0)
        return SymFunc(self.degree, out)

    def principal_specialization(self, var: str = "q"):
        """Substitute ``x_i -> q^(i-1)``."""
        from .polynomial import Polynomial
        out: Dict[tuple, int] = {}
        for e, c in self.terms.items():
            d = sum(i * a for i, a in enumerate(e))
            mono = ((var, d),) if d else ()
            out[mono] = out.get(mono, 0) + c
        return Polynomial(out)


def f_qsym(S: Iterable[int], n: int, m: int) -> QSymExpansion:
    """Fundamental quasisymmetric function ``F_{S,n}`` in m variables.

    Sum over ``i_1 >= ... >= i_n`` with a strict drop at every ``j`` in S.
    """
    S = frozenset(S)
    if m < n:
        raise ValueError("need m >= n variables")
    if not S <= set(range(1, n)):
        raise ValueError(f"S must be a subset of [1, {n - 1}]")
    terms: Dict[Tuple[int, ...], int] = {}
    for word in combinations_with_replacement(range(m, 0, -1), n):
        if all(word[j - 1] > word[j] for j in S):
            e = [0] * m
            for i in word:
                e[i - 1] += 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return QSymExpansion(n, m, terms)


def _check_qrange(n: int, j: int, k: Optional[int]) -> None:
    if not 0 <= j <= max(n - 1, 0):
        raise ValueError(f"j={j} out of range for n={n}")
    if k is not None and not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")


def _selected(n: int, j: int, k: Optional[int]):
    for w in all_permutations(n):
        st = stats(w)
        if st.exc == j and (k is None or st.fix == k):
            yield w


def q_eulerian_qsym(n: int, j: int, k: Optional[int], m: int) -> QSymExpansion:
    """``Q_{n,j,k}`` (or ``Q_{n,j}`` when ``k`` is None) expanded in m variables."""
    _check_qrange(n, j, k)
    total = QSymExpansion(n, m, {})
    for w in _selected(n, j, k):
        total = total + f_qsym(exd_set(w), n, m)
    return total


def _drop_positions(lam: Partition) -> FrozenSet[int]:
    # strict drops of the weakly decreasing word with content x^lam
    out, pos = set(), 0
    for part in reversed(lam):
        pos += part
        out.add(pos)
    out.discard(sum(lam))
    return frozenset(out)


def fundamental_monomial_coeffs(S: FrozenSet[int], n: int) -> Dict[Partition, int]:
    """Monomial coefficients of ``F_{S,n}`` at partition exponents.

    The weakly decreasing word with content ``lam`` is unique, so each
    coefficient is 0 or 1.
    """
    return {lam: 1 for lam in partition_list(n) if S <= _drop_positions(lam)}


def q_eulerian_symfunc(n: int, j: int, k: Optional[int] = None) -> SymFunc:
    """``Q_{n,j,k}`` (or ``Q_{n,j}``) in the monomial basis, assuming symmetry."""
    _check_qrange(n, j, k)
    if n == 0:
        return SymFunc(0, {(): 1})
    out: Dict[Partition, int] = {}
    for w in _selected(n, j, k):
        for lam, c in fundamental_monomial_coeffs(exd_set(w), n).items():
            out[lam] = out.get(lam, 0) + c
    return SymFunc(n, out)


def q_eulerian_table(n: int) -> Dict[Tuple[int, int], SymFunc]:
    """All nonzero ``Q_{n,j,k}`` keyed by ``(j, k)``, from one pass over S_n."""
    if n == 0:
        return {(0, 0): SymFunc(0, {(): 1})}
    acc: Dict[Tuple[int, int], Dict[Partition, int]] = {}
    cache: Dict[FrozenSet[int], Dict[Partition, int]] = {}
    for w in all_permutations(n):
        st = stats(w)
        S = exd_set(w)
        if S not in cache:
            cache[S] = fundamental_monomial_coeffs(S, n)
        bucket = acc.setdefault((st.exc, st.fix), {})
        for lam, c in cache[S].items():
            bucket[lam] = bucket.get(lam, 0) + c
    return {key: SymFunc(n, coeffs) for key, coeffs in sorted(acc.items())}
