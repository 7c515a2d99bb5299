"""Truncated power series in ``z`` with symmetric-function coefficients.

A series is ``{degree: {partition: Polynomial}}`` written in the ``h`` basis,
where products are just concatenation of partitions.  The coefficients are
polynomials in auxiliary variables (``t``, ``r``).  Identities are checked
cross-multiplied, and the difference is read off in the monomial basis in
``m`` variables (``m_lam`` with more than ``m`` parts vanish there).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Optional

from .polynomial import Polynomial, q_int
from .symfunc import Partition, SymFunc, basis_matrix, partition_list, q_eulerian_table, sort_partition

HCoeffs = Dict[Partition, Polynomial]
Series = Dict[int, HCoeffs]

IDENTITIES = ("symgen-1", "symgen-2", "derangement-series")

_t = Polynomial.var("t")
_r = Polynomial.var("r")


def _add_into(target: HCoeffs, lam: Partition, c) -> None:
    v = target.get(lam, Polynomial()) + c
    if v.is_zero():
        target.pop(lam, None)
    else:
        target[lam] = v


def series_mul(A: Series, B: Series, cap: int) -> Series:
    out: Series = {}
    for a, fa in A.items():
        for b, fb in B.items():
            if a + b > cap:
                continue
            slot = out.setdefault(a + b, {})
            for l1, c1 in fa.items():
                for l2, c2 in fb.items():
                    _add_into(slot, sort_partition(l1 + l2), c1 * c2)
    return out


def series_sub(A: Series, B: Series) -> Series:
    out: Series = {k: dict(v) for k, v in A.items()}
    for k, fb in B.items():
        slot = out.setdefault(k, {})
        for lam, c in fb.items():
            _add_into(slot, lam, -c)
    return out


def h_coefficients(f: SymFunc, scale=1) -> HCoeffs:
    out: HCoeffs = {}
    for lam, c in f.to_basis("h").items():
        _add_into(out, lam, Polynomial.const(c) * scale)
    return out


def to_monomial(coeffs: HCoeffs, n: int) -> Dict[Partition, Polynomial]:
    """Monomial-basis coefficients of an h-basis combination of degree ``n``."""
    parts = partition_list(n)
    pos = {lam: i for i, lam in enumerate(parts)}
    M = basis_matrix(n, "h")
    out: Dict[Partition, Polynomial] = {}
    for lam, c in coeffs.items():
        row = M[pos[lam]]
        for k, v in enumerate(row):
            if v:
                out[parts[k]] = out.get(parts[k], Polynomial()) + c * v
    return {mu: c for mu, c in out.items() if not c.is_zero()}


def first_nonzero(series: Series, cap: int, m: int) -> Optional[dict]:
    """First surviving coefficient in ``m`` variables, or None if all vanish."""
    for N in range(cap + 1):
        mono = to_monomial(series.get(N, {}), N) if N else {
            (): c for c in [series.get(0, {}).get((), Polynomial())] if not c.is_zero()}
        for mu in partition_list(N):
            if len(mu) <= m and mu in mono:
                return {"degree": N, "partition": list(mu), "coefficient": repr(mono[mu])}
    return None


# ---------------------------------------------------------------------------
# the pieces of the identities

def q_eulerian_series(cap: int) -> Series:
    """``sum_{n,j,k} Q_{n,j,k} t^j r^k z^n`` through ``z^cap``."""
    out: Series = {}
    for n in range(cap + 1):
        slot: HCoeffs = {}
        for (j, k), f in q_eulerian_table(n).items():
            mono = _t ** j * _r ** k
            for lam, c in h_coefficients(f, mono).items():
                _add_into(slot, lam, c)
        out[n] = slot
    return out


def h_series(cap: int, weight: Callable[[int], Polynomial]) -> Series:
    """``sum_n weight(n) h_n z^n``."""
    out: Series = {}
    for n in range(cap + 1):
        w = weight(n)
        if not w.is_zero():
            out[n] = {(n,) if n else (): w}
    return out


def truncated_chain_series(cap: int) -> Series:
    """``sum_n ch H~(B_n^- * C_n) z^n`` from homology characters."""
    from .equivariant import truncated_chain_frobenius
    out: Series = {0: {(): Polynomial.const(1)}}
    for n in range(1, cap + 1):
        out[n] = h_coefficients(truncated_chain_frobenius(n))
    return out


def series_identity_check(identity_id: str, degree_cap: int = 5, m: Optional[int] = None) -> dict:
    """Cross-multiplied check of a generating-function identity through ``z^degree_cap``."""
    if identity_id not in IDENTITIES:
        raise ValueError(f"unknown identity {identity_id!r}; choose from {IDENTITIES}")
    if not 0 <= degree_cap <= 6:
        raise ValueError("degree_cap must be between 0 and 6")
    m = degree_cap if m is None else m
    cap = degree_cap
    if identity_id == "symgen-1":
        Q = q_eulerian_series(cap)
        den = h_series(cap, lambda n: _t ** n - _t)
        num = h_series(cap, lambda n: (1 - _t) * _r ** n)
        diff = series_sub(series_mul(Q, den, cap), num)
    elif identity_id == "symgen-2":
        Q = q_eulerian_series(cap)
        den = h_series(cap, lambda n: Polynomial.const(1) if n == 0 else
                       (-_t * q_int(n - 1, "t") if n >= 2 else Polynomial()))
        num = h_series(cap, lambda n: _r ** n)
        diff = series_sub(series_mul(Q, den, cap), num)
    else:
        L = truncated_chain_series(cap)
        den: Series = {0: {(): Polynomial.const(1)}}
        for i in range(2, cap + 1):
            den[i] = h_coefficients(SymFunc.e(i), Fraction(-(i - 1)))
        diff = series_sub(series_mul(L, den, cap), {0: {(): Polynomial.const(1)}})
    failure = first_nonzero(diff, cap, m)
    return {"identity": identity_id, "degree_cap": cap, "m": m,
            "pass": failure is None, "first_failure": failure}
