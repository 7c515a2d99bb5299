"""Sparse multivariate Laurent polynomials with exact coefficients.

Monomials are stored as sorted tuples of ``(variable, exponent)`` pairs with
nonzero exponents, so polynomials in different variable sets combine without
any alignment step.  Negative exponents are allowed; several identities are
naturally stated with ``q^-1``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]
Number = Union[int, Fraction]

_ONE: Monomial = ()


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        e2 = d.get(v, 0) + e
        if e2:
            d[v] = e2
        else:
            del d[v]
    return tuple(sorted(d.items()))


class Polynomial:
    """Immutable sparse polynomial; ``Polynomial.var('q')`` is the usual entry point."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean: Dict[Monomial, Number] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = _normalize_coeff(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def var(cls, name: str, exponent: int = 1) -> "Polynomial":
        if exponent == 0:
            return cls({_ONE: 1})
        return cls({((name, exponent),): 1})

    @classmethod
    def const(cls, c: Number) -> "Polynomial":
        return cls({_ONE: c})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: Number = 1) -> "Polynomial":
        mono = tuple(sorted((v, e) for v, e in exponents.items() if e))
        return cls({mono: coeff})

    @staticmethod
    def _lift(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.const(other)
        return NotImplemented

    @property
    def terms(self) -> Dict[Monomial, Number]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == _ONE for m in self._terms)

    def constant_term(self) -> Number:
        return self._terms.get(_ONE, 0)

    @property
    def variables(self) -> Tuple[str, ...]:
        names = {v for m in self._terms for v, _ in m}
        return tuple(sorted(names))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Monomial, Number] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (mono, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a monomial needs a unit coefficient")
            return Polynomial({tuple((v, e * k) for v, e in mono): c ** (-k)})
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree(self, var: str) -> int:
        """Largest exponent of ``var`` (0 for the zero polynomial)."""
        return max((dict(m).get(var, 0) for m in self._terms), default=0)

    def min_degree(self, var: str) -> int:
        return min((dict(m).get(var, 0) for m in self._terms), default=0)

    def coefficient(self, exponents: Mapping[str, int] | None = None) -> Number:
        mono = tuple(sorted((v, e) for v, e in (exponents or {}).items() if e))
        return self._terms.get(mono, 0)

    def coeff_of(self, var: str, exp: int) -> "Polynomial":
        """The polynomial multiplying ``var**exp`` (other variables kept)."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            if d.get(var, 0) == exp:
                d.pop(var, None)
                out[tuple(sorted(d.items()))] = c
        return Polynomial(out)

    def truncate(self, var: str, order: int) -> "Polynomial":
        """Drop every term whose ``var`` exponent exceeds ``order``."""
        return Polynomial({m: c for m, c in self._terms.items() if dict(m).get(var, 0) <= order})

    def subs(self, values: Mapping[str, object] | None = None, **kw) -> "Polynomial":
        """Substitute numbers or polynomials for variables."""
        values = dict(values or {}, **kw)
        out: Dict[Monomial, Number] = {}
        cache: Dict[Tuple[str, int], Polynomial] = {}
        for m, c in self._terms.items():
            term = Polynomial.const(c)
            keep = []
            for v, e in m:
                if v in values:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = self._lift(values[v]) ** e if e >= 0 else _inverse_power(values[v], e)
                    term = term * cache[key]
                else:
                    keep.append((v, e))
            for m2, c2 in term._terms.items():
                m3 = _mono_mul(m2, tuple(keep))
                out[m3] = out.get(m3, 0) + c2
        return Polynomial(out)

    def evaluate(self, values: Mapping[str, Number] | None = None, **kw) -> Number:
        """Evaluate at numbers; every variable must be given."""
        p = self.subs(values, **kw)
        if not p.is_constant():
            raise ValueError(f"unassigned variables: {p.variables}")
        return _normalize_coeff(p.constant_term())

    def to_json(self) -> list:
        rows = []
        for m in sorted(self._terms):
            rows.append({"exponents": dict(m), "coefficient": str(self._terms[m])})
        return rows

    @classmethod
    def from_json(cls, rows: Iterable[dict]) -> "Polynomial":
        out = {}
        for row in rows:
            mono = tuple(sorted((v, int(e)) for v, e in row["exponents"].items() if int(e)))
            out[mono] = out.get(mono, 0) + Fraction(row["coefficient"])
        return cls(out)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms, key=lambda m: ([-e for _, e in m], m)):
            c = self._terms[m]
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _inverse_power(value, e: int):
    if isinstance(value, Polynomial):
        return value ** e
    return Polynomial.const(Fraction(1) / Fraction(value) ** (-e))


# ---------------------------------------------------------------------------
# q-analogs

def q_int(n: int, q: str | Number = "q"):
    """``[n]_q = 1 + q + ... + q^(n-1)``; a Polynomial if ``q`` is a name."""
    if isinstance(q, str):
        return sum((Polynomial.var(q, i) for i in range(n)), Polynomial())
    return sum(q ** i for i in range(n))


def q_factorial(n: int, q: str | Number = "q"):
    out = Polynomial.const(1) if isinstance(q, str) else 1
    for i in range(1, n + 1):
        out = out * q_int(i, q)
    return out


def q_binomial(n: int, k: int, q: str | Number = "q"):
    """Gaussian binomial coefficient, computed by the q-Pascal recurrence."""
    symbolic = isinstance(q, str)
    zero = Polynomial() if symbolic else 0
    if k < 0 or k > n:
        return zero
    qq = Polynomial.var(q) if symbolic else q
    # row[k] = [m choose k]_q
    row = [Polynomial.const(1) if symbolic else 1]
    for m in range(1, n + 1):
        new = []
        for i in range(m + 1):
            left = row[i - 1] if i >= 1 else zero
            right = row[i] if i < m else zero
            new.append(left + qq ** i * right)
        row = new
    return row[k]


def q_pochhammer(n: int, q: str = "q") -> Polynomial:
    """``(q;q)_n = prod_{i=1}^n (1 - q^i)``."""
    out = Polynomial.const(1)
    for i in range(1, n + 1):
        out = out * (1 - Polynomial.var(q, i))
    return out
