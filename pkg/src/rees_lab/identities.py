"""Formal polynomial identities in q, t, r and the closed formulas they feed.

Every check returns plain data (``lhs``, ``rhs``, ``pass``) so the verify
suites can report both sides.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Dict, List

from .permstat import (FLAVORS, all_permutations, bc_poly, derangements, generating_polynomial,
                       q_derangement, q_eulerian, stats)
from .polynomial import Polynomial, q_binomial, q_factorial

q = Polynomial.var("q")
t = Polynomial.var("t")
r = Polynomial.var("r")
x = Polynomial.var("x")
y = Polynomial.var("y")
ONE = Polynomial.const(1)


def _prod(factors) -> Polynomial:
    out = ONE
    for f in factors:
        out = out * f
    return out


def _row(name: str, params: dict, lhs: Polynomial, rhs: Polynomial) -> dict:
    return {"identity": name, "params": params, "lhs": repr(lhs), "rhs": repr(rhs), "pass": lhs == rhs}


# ---------------------------------------------------------------------------
# exponential generating function in q (cross-multiplied, Laurent in q)

def comaj_exc_fix_series_check(N: int) -> dict:
    """Coefficient of ``z^N`` (times ``[N]_q!``) of

        sum_n A_n(q,t,r) z^n/[n]_q! * (Exp_q(z u) - u Exp_q(z))  =  (1 - u) Exp_q(r z)

    with ``u = t/q`` and ``Exp_q(z) = sum q^C(n,2) z^n/[n]_q!``.
    """
    u = t * q ** -1
    lhs = Polynomial()
    for n in range(N + 1):
        m = N - n
        A = q_eulerian(n, "comaj-exc-fix")
        lhs = lhs + A * q_binomial(N, m) * q ** comb(m, 2) * (u ** m - u)
    rhs = (1 - u) * q ** comb(N, 2) * r ** N
    return _row("comaj-exc-fix-egf", {"N": N}, lhs, rhs)


def fixed_point_refinement_check(n: int, k: int) -> dict:
    """``sum_{fix=k} q^comaj t^exc = q^C(k,2) [n,k]_q sum_{D_{n-k}} q^comaj t^exc``."""
    lhs = generating_polynomial((w for w in all_permutations(n) if stats(w).fix == k),
                                FLAVORS["comaj-exc"])
    rhs = q ** comb(k, 2) * q_binomial(n, k) * generating_polynomial(
        derangements(n - k), FLAVORS["comaj-exc"])
    return _row("fixed-point-refinement", {"n": n, "k": k}, lhs, rhs)


def derangement_inversion_check(n: int) -> dict:
    """``sum_{D_n} q^comaj t^exc = sum_k (-1)^k [n,k]_q A_{n-k}^{comaj,exc}(q,t)``."""
    lhs = generating_polynomial(derangements(n), FLAVORS["comaj-exc"])
    rhs = Polynomial()
    for k in range(n + 1):
        rhs = rhs + (-1) ** k * q_binomial(n, k) * q_eulerian(n - k, "comaj-exc")
    return _row("derangement-inversion", {"n": n}, lhs, rhs)


# ---------------------------------------------------------------------------
# Gaussian identities behind the type BC q-formula

def _p(lo: int, hi: int) -> Polynomial:
    """``prod_{i=lo}^{hi} (1 + q^i)`` (empty product is 1)."""
    return _prod(1 + q ** i for i in range(lo, hi + 1))


def gaussian_product_check(n: int, j: int) -> dict:
    """``prod_{i>j} (1+q^i) = sum_k [j,k]_q q^(k^2) (-1)^k prod_{i>k} (1+q^i)``."""
    lhs = _p(j + 1, n)
    rhs = sum((q_binomial(j, k) * q ** (k * k) * (-1) ** k * _p(k + 1, n) for k in range(j + 1)),
              Polynomial())
    return _row("gaussian-product", {"n": n, "j": j}, lhs, rhs)


def gaussian_inverted_check(n: int, j: int) -> dict:
    """``q^(j^2) (-1)^j prod_{i>j} (1+q^i) = sum_k [j,k]_q (-1)^(j-k) q^C(j-k,2) prod_{i>k}(1+q^i)``."""
    lhs = q ** (j * j) * (-1) ** j * _p(j + 1, n)
    rhs = sum((q_binomial(j, k) * (-1) ** (j - k) * q ** comb(j - k, 2) * _p(k + 1, n)
               for k in range(j + 1)), Polynomial())
    return _row("gaussian-inverted", {"n": n, "j": j}, lhs, rhs)


def gaussian_reduced_check(j: int) -> dict:
    """``q^(j^2) (-1)^j = sum_k [j,k]_q (-1)^(j-k) q^C(j-k,2) prod_{k<i<=j} (1+q^i)``."""
    lhs = q ** (j * j) * (-1) ** j
    rhs = sum((q_binomial(j, k) * (-1) ** (j - k) * q ** comb(j - k, 2) * _p(k + 1, j)
               for k in range(j + 1)), Polynomial())
    return _row("gaussian-reduced", {"j": j}, lhs, rhs)


def q_binomial_theorem_check(n: int) -> dict:
    """``prod_{i<n} (x + y q^i) = sum_k [n,k]_q q^C(k,2) x^(n-k) y^k``."""
    lhs = _prod(x + y * q ** i for i in range(n))
    rhs = sum((q_binomial(n, k) * q ** comb(k, 2) * x ** (n - k) * y ** k for k in range(n + 1)),
              Polynomial())
    return _row("q-binomial-theorem", {"n": n}, lhs, rhs)


def power_expansion_check(n: int) -> dict:
    """``x^n = sum_k [n,k]_q (-1)^(n-k) prod_{i<k} (x + q^i)``."""
    lhs = x ** n
    rhs = sum((q_binomial(n, k) * (-1) ** (n - k) * _prod(x + q ** i for i in range(k))
               for k in range(n + 1)), Polynomial())
    return _row("power-expansion", {"n": n}, lhs, rhs)


def square_power_check(n: int) -> dict:
    """``q^(n^2) = sum_k [n,k]_q (-1)^(n-k) q^C(k,2) prod_{i<k} (q^(n-i) + 1)``."""
    lhs = q ** (n * n)
    rhs = sum((q_binomial(n, k) * (-1) ** (n - k) * q ** comb(k, 2)
               * _prod(q ** (n - i) + 1 for i in range(k)) for k in range(n + 1)), Polynomial())
    return _row("square-power", {"n": n}, lhs, rhs)


def gaussian_chain(n_max: int = 6) -> List[dict]:
    rows = []
    for n in range(n_max + 1):
        for j in range(n + 1):
            rows.append(gaussian_product_check(n, j))
            rows.append(gaussian_inverted_check(n, j))
    for j in range(n_max + 1):
        rows.append(gaussian_reduced_check(j))
    for n in range(n_max + 1):
        rows.append(q_binomial_theorem_check(n))
        rows.append(power_expansion_check(n))
        rows.append(square_power_check(n))
    return rows


# ---------------------------------------------------------------------------
# closed formulas

def comaj_exc_total(n: int) -> Polynomial:
    """``a_n(q) = sum_{S_n} q^(comaj + exc)``."""
    return q_eulerian(n, "comaj-exc").subs(t=q)


def isotropic_whitney_formula(n: int, k: int) -> Polynomial:
    """Number of k-dimensional totally isotropic subspaces of F_q^(2n), as a polynomial."""
    return q_binomial(n, k) * _prod(q ** (n - i) + 1 for i in range(k))


def type_bc_q_formula(n: int) -> Polynomial:
    """``sum_k [n,k]_q q^(k^2) prod_{i>k} (1+q^i) d_{n-k}(q)``."""
    return sum((q_binomial(n, k) * q ** (k * k) * _p(k + 1, n) * q_derangement(n - k)
                for k in range(n + 1)), Polynomial())


def type_bc_alternating_formula(n: int) -> Polynomial:
    """``sum_j (-1)^j [n,j]_q prod_{i>j} (1+q^i) a_{n-j}(q)`` (the Mobius-recursion side)."""
    return sum(((-1) ** j * q_binomial(n, j) * _p(j + 1, n) * comaj_exc_total(n - j)
                for j in range(n + 1)), Polynomial())


def bar_index_check(n: int) -> dict:
    """Bar-index generating polynomial against the closed type BC q-formula."""
    return _row("bar-index", {"n": n}, bc_poly(n), type_bc_q_formula(n))


def simplicial_mobius_formula(whitney: List[int]) -> int:
    """``sum_r (-1)^(r-1) W_r r!`` for a ranked simplicial poset."""
    return sum((-1 if rk % 2 == 0 else 1) * w * factorial(rk) for rk, w in enumerate(whitney))


def q_simplicial_mobius_formula(whitney: List[int], qv: int) -> int:
    """``sum_r (-1)^(r-1) W_r a_r(q)`` evaluated at ``q = qv``."""
    return sum((-1 if rk % 2 == 0 else 1) * w * int(comaj_exc_total(rk).evaluate(q=qv))
               for rk, w in enumerate(whitney))


def tree_mobius_formula(n: int) -> Polynomial:
    """``(-1)^(n-1) t sum_{S_n} q^(comaj+exc) t^exc`` for ``n >= 1``."""
    return (-1) ** (n - 1) * t * q_eulerian(n, "comaj-exc").subs(t=q * t)


def q_eulerian_betti_formula(n: int, j: int) -> Polynomial:
    """``q^(C(n,2)+j) a_{n,j}^{maj,exc}(1/q)``, with ``a_{n,j}`` the t^j coefficient."""
    a = q_eulerian(n, "maj-exc").coeff_of("t", j)
    return (q ** (comb(n, 2) + j) * a.subs(q=q ** -1))


def q_derangement_betti_formula(n: int) -> Polynomial:
    """``sum_{D_n} q^(C(n,2) - maj + exc)``."""
    terms: Dict[tuple, int] = {}
    for w in derangements(n):
        s = stats(w)
        e = comb(n, 2) - s.maj + s.exc
        mono = (("q", e),) if e else ()
        terms[mono] = terms.get(mono, 0) + 1
    return Polynomial(terms)


def q_factorial_check(n: int) -> dict:
    """``A_n^{maj,exc}(q, 1) = [n]_q!``."""
    return _row("mahonian", {"n": n}, q_eulerian(n, "maj-exc").subs(t=1), q_factorial(n))
