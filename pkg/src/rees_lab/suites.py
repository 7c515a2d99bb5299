"""Named verification suites.

Each suite computes both sides of an identity by separate routes (homology
or Möbius computations on constructed posets against enumeration of
permutations, words or closed formulas) and records every comparison as a
case.  A case whose computation would exceed a resource guard is recorded as
skipped, never as passed.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import asdict, dataclass, field, fields
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import identities as ident
from .catalog import (boolean_lattice, crosspolytope_faces, is_prime, isotropic_subspace_poset,
                      subspace_lattice, tary_tree, whitney_numbers)
from .equivariant import (PosetAction, boolean_action, homology_character, ideal_frobenius,
                          schur_positive, tree_frobenius, tree_lefschetz_frobenius,
                          truncated_chain_frobenius)
from .homology import (ComplexityGuardError, is_cohen_macaulay, mobius, mobius_hat, mobius_invariant,
                       reduced_betti, simplex_guard)
from .permstat import (bc_count_formula, bc_derangements, d_count, eulerian_number,
                       multiset_derangements_of_order, q_eulerian, words_W)
from .polynomial import Polynomial, q_binomial, q_int
from .poset import (Poset, adjoin_top, chain, check_order_map, dual, find_isomorphism, ideal_Ij,
                    interval, is_uniform, lower_ideal, psi_i, r_i_poset, random_ranked_bounded_poset,
                    rees_product, remove_bottom, subposet, truncated_rees_chain)
from .series import series_identity_check
from .symfunc import QSymExpansion, SymFunc, frobenius, q_eulerian_symfunc, q_eulerian_table


class GuardExceeded(RuntimeError):
    pass


class UnknownSuiteError(ValueError):
    pass


TOP_DEGREE = "top dimension of each order complex as computed"
TREE_DEGREE = ("top dimension n-1 of the order complex of (P * T_{t,n})^-; "
               "a stated index n-2 for this object is read as the top degree")


# ---------------------------------------------------------------------------
# reports

@dataclass
class Case:
    case: str
    params: Dict[str, object]
    lhs: str
    rhs: str
    passed: Optional[bool]  # None: skipped
    witness: str = ""

    @property
    def status(self) -> str:
        return "skipped" if self.passed is None else ("pass" if self.passed else "FAIL")

    def to_dict(self) -> dict:
        return {"case": self.case, "params": self.params, "lhs": self.lhs, "rhs": self.rhs,
                "pass": self.passed, "skipped": self.passed is None, "witness": self.witness}

    @classmethod
    def from_dict(cls, d: dict) -> "Case":
        return cls(d["case"], d["params"], d["lhs"], d["rhs"], d["pass"], d.get("witness", ""))


@dataclass
class SuiteReport:
    suite: str
    statement: str
    degree_convention: str
    config: Dict[str, object] = field(default_factory=dict)
    cases: List[Case] = field(default_factory=list)

    def add(self, case: str, params: dict, lhs, rhs, passed: Optional[bool] = None,
            witness: str = "") -> bool:
        ok = (lhs == rhs) if passed is None else passed
        self.cases.append(Case(case, dict(params), str(lhs), str(rhs), bool(ok), witness))
        return bool(ok)

    def skip(self, case: str, params: dict, reason: str) -> None:
        self.cases.append(Case(case, dict(params), "", "", None, reason))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases if c.passed is not None)

    def counts(self) -> Dict[str, int]:
        out = {"pass": 0, "FAIL": 0, "skipped": 0}
        for c in self.cases:
            out[c.status] += 1
        return out

    def failures(self) -> List[Case]:
        return [c for c in self.cases if c.passed is False]

    def to_dict(self) -> dict:
        return {"statement": self.suite, "description": self.statement,
                "degree_convention": self.degree_convention, "config": self.config,
                "ok": self.ok, "counts": self.counts(),
                "cases": [c.to_dict() for c in self.cases]}

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteReport":
        return cls(d["statement"], d["description"], d["degree_convention"], d.get("config", {}),
                   [Case.from_dict(c) for c in d["cases"]])


def export(reports: Sequence[SuiteReport], fmt: str = "table") -> str:
    if fmt == "json":
        return json.dumps({"ok": all(r.ok for r in reports),
                           "suites": [r.to_dict() for r in reports]}, indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "case", "lhs", "rhs", "pass"])
        for r in reports:
            for c in r.cases:
                w.writerow([r.suite, c.case, c.lhs, c.rhs,
                            "skipped" if c.passed is None else str(c.passed).lower()])
        return buf.getvalue()
    if fmt == "table":
        lines = []
        for r in reports:
            k = r.counts()
            lines.append(f"== {r.suite}: {'OK' if r.ok else 'FAILED'} "
                         f"({k['pass']} pass, {k['FAIL']} fail, {k['skipped']} skipped)")
            lines.append(f"   {r.statement}")
            lines.append(f"   degree convention: {r.degree_convention}")
            width = max((len(c.case) for c in r.cases), default=4)
            for c in r.cases:
                if c.passed is None:
                    lines.append(f"   {c.case:<{width}}  skipped  {c.witness}")
                else:
                    lines.append(f"   {c.case:<{width}}  {c.status:<7}  {_clip(c.lhs)} | {_clip(c.rhs)}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def load_reports(text: str) -> List[SuiteReport]:
    return [SuiteReport.from_dict(d) for d in json.loads(text)["suites"]]


def _clip(s: str, width: int = 60) -> str:
    return s if len(s) <= width else s[:width - 3] + "..."


# ---------------------------------------------------------------------------
# configuration

@dataclass
class SuiteConfig:
    suite: str
    n_max: Optional[int] = None
    q: Tuple[int, ...] = (2, 3)
    t: Tuple[int, ...] = (1, 2, 3)
    m: Optional[int] = None
    degree_cap: Optional[int] = None
    seed: int = 0
    trials: Optional[int] = None
    width: int = 4
    max_simplices: Optional[int] = None
    max_subspaces: int = 5000
    max_permutations: int = factorial(8)
    out: Optional[str] = None
    format: str = "table"

    def resolved_n_max(self) -> int:
        return SUITES[self.suite].default_n if self.n_max is None else self.n_max

    def simplices(self) -> int:
        return simplex_guard() if self.max_simplices is None else self.max_simplices

    def validate(self) -> None:
        if self.suite not in SUITES:
            raise UnknownSuiteError(f"unknown suite {self.suite!r}; run 'list' for the catalog")
        spec = SUITES[self.suite]
        n = self.resolved_n_max()
        if not 1 <= n <= spec.max_n:
            raise ValueError(f"--n-max for {self.suite} must be between 1 and {spec.max_n}")
        for qv in self.q:
            if not is_prime(qv):
                raise ValueError(f"q={qv} is not prime")
        if any(tv < 1 for tv in self.t):
            raise ValueError("t values must be positive")
        if self.degree_cap is not None and not 0 <= self.degree_cap <= 6:
            raise ValueError("degree cap must be between 0 and 6")
        if self.trials is not None and self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if self.width < 1:
            raise ValueError("width must be positive")
        if self.format not in ("json", "csv", "table"):
            raise ValueError(f"unknown format {self.format!r}")

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        data = dict(data)
        for key in ("q", "t"):
            if key in data:
                data[key] = tuple(data[key])
        return cls(**data)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["n_max"] = self.resolved_n_max()
        d["max_simplices"] = self.simplices()
        return d


# ---------------------------------------------------------------------------
# shared helpers

def _perm_guard(cfg: SuiteConfig, n: int) -> None:
    if factorial(n) > cfg.max_permutations:
        raise GuardExceeded(f"{n}! permutations exceed the guard {cfg.max_permutations}")


def _subspace_guard(cfg: SuiteConfig, count: int) -> None:
    if count > cfg.max_subspaces:
        raise GuardExceeded(f"{count} subspaces exceed the guard {cfg.max_subspaces}")


def _subspaces(cfg: SuiteConfig, n: int, q: int) -> Poset:
    _subspace_guard(cfg, sum(q_binomial(n, k, q) for k in range(n + 1)))
    return subspace_lattice(n, q)


def _isotropic(cfg: SuiteConfig, n: int, q: int) -> Poset:
    _subspace_guard(cfg, sum(ident.isotropic_whitney_formula(n, k).evaluate(q=q) for k in range(n + 1)))
    return isotropic_subspace_poset(n, q)


def _guarded(report: SuiteReport, case: str, params: dict, fn: Callable[[], None]) -> None:
    try:
        fn()
    except (ComplexityGuardError, GuardExceeded) as exc:
        report.skip(case, params, f"guard: {exc}")


def _top_betti_case(report: SuiteReport, cfg: SuiteConfig, case: str, params: dict,
                    P: Poset, expected: int) -> None:
    """Top reduced Betti number against ``expected``, plus a Euler-Poincaré case."""
    rb = reduced_betti(P, cfg.simplices())
    top = P.length
    betti = [rb[d] for d in sorted(rb)]
    report.add(case, params, rb[top], expected, witness=f"reduced betti (from -1): {betti}")
    _euler_case(report, case, params, P, rb)


def _euler_case(report: SuiteReport, case: str, params: dict, P: Poset, rb=None) -> None:
    alternating = sum((-b if d % 2 else b) for d, b in rb.items())
    report.add(f"{case} euler-poincare", params, mobius_hat(P), alternating)


def _mobius_route_case(report: SuiteReport, cfg: SuiteConfig, case: str, params: dict,
                       P: Poset, expected: int) -> None:
    """``(-1)^top mu(P-hat)`` against ``expected``; Euler-Poincaré if homology fits the guard."""
    mu = mobius_hat(P)
    report.add(case, params, (-1) ** P.length * mu, expected, witness=f"mu(P-hat) = {mu}")
    try:
        rb = reduced_betti(P, cfg.simplices())
    except ComplexityGuardError as exc:
        report.skip(f"{case} euler-poincare", params, f"guard: {exc}")
        return
    _euler_case(report, case, params, P, rb)


def _eval(p: Polynomial, **values) -> int:
    v = p.evaluate(**values)
    return int(v)


# ---------------------------------------------------------------------------
# suites

def run_jonsson(cfg: SuiteConfig, report: SuiteReport) -> None:
    n_max = cfg.resolved_n_max()
    for n in range(1, n_max + 1):
        params = {"n": n}
        _guarded(report, f"homology n={n}", params, lambda n=n, params=params: _top_betti_case(
            report, cfg, f"homology n={n}", params, truncated_rees_chain(boolean_lattice(n)), d_count(n)))
    for n in range(1, max(n_max, 7) + 1):
        params = {"n": n}

        def body(n=n, params=params):
            _perm_guard(cfg, n)
            _mobius_route_case(report, cfg, f"mobius n={n}", params,
                               truncated_rees_chain(boolean_lattice(n)), d_count(n))
        _guarded(report, f"mobius n={n}", params, body)


def run_eulerian(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(1, cfg.resolved_n_max() + 1):
        for j in range(n):
            params = {"n": n, "j": j}
            _guarded(report, f"n={n} j={j}", params, lambda n=n, j=j, params=params: _top_betti_case(
                report, cfg, f"n={n} j={j}", params, ideal_Ij(boolean_lattice(n), j), eulerian_number(n, j)))


def run_q_eulerian(cfg: SuiteConfig, report: SuiteReport) -> None:
    q = Polynomial.var("q")
    report.add("formula n=3 j=1", {"n": 3, "j": 1}, ident.q_eulerian_betti_formula(3, 1),
               q + q ** 2 + 2 * q ** 3)
    for qv in cfg.q:
        for n in range(1, cfg.resolved_n_max() + 1):
            for j in range(n):
                params = {"n": n, "j": j, "q": qv}
                name = f"q={qv} n={n} j={j}"

                def body(n=n, j=j, qv=qv, params=params, name=name):
                    expected = _eval(ident.q_eulerian_betti_formula(n, j), q=qv)
                    _top_betti_case(report, cfg, name, params, ideal_Ij(_subspaces(cfg, n, qv), j), expected)
                _guarded(report, name, params, body)


def run_q_derangement(cfg: SuiteConfig, report: SuiteReport) -> None:
    for qv in cfg.q:
        for n in range(1, cfg.resolved_n_max() + 1):
            params = {"n": n, "q": qv}
            name = f"q={qv} n={n}"

            def body(n=n, qv=qv, params=params, name=name):
                expected = _eval(ident.q_derangement_betti_formula(n), q=qv)
                _top_betti_case(report, cfg, name, params, truncated_rees_chain(_subspaces(cfg, n, qv)), expected)
            _guarded(report, name, params, body)


def _tree_minus(P: Poset, t: int) -> Poset:
    return remove_bottom(rees_product(P, tary_tree(t, P.length)))


def run_tree(cfg: SuiteConfig, report: SuiteReport) -> None:
    n_max = cfg.resolved_n_max()
    for n in range(1, n_max + 1):
        A = q_eulerian(n, "exc")
        for tv in cfg.t:
            params = {"n": n, "t": tv}
            name = f"boolean n={n} t={tv}"
            _guarded(report, name, params, lambda n=n, tv=tv, params=params, name=name, A=A: _top_betti_case(
                report, cfg, name, params, _tree_minus(boolean_lattice(n), tv), tv * _eval(A, t=tv)))
    for qv in cfg.q:
        for n in range(1, min(n_max, 3) + 1):
            A = q_eulerian(n, "comaj-exc")
            for tv in cfg.t:
                params = {"n": n, "q": qv, "t": tv}
                name = f"subspace q={qv} n={n} t={tv}"

                def body(n=n, qv=qv, tv=tv, params=params, name=name, A=A):
                    expected = tv * _eval(A, q=qv, t=qv * tv)
                    _top_betti_case(report, cfg, name, params, _tree_minus(_subspaces(cfg, n, qv), tv), expected)
                _guarded(report, name, params, body)


def run_tree_corollary(cfg: SuiteConfig, report: SuiteReport) -> None:
    n_max = cfg.resolved_n_max()
    for n in range(1, n_max + 1):
        params = {"n": n}
        P = remove_bottom(rees_product(boolean_lattice(n), chain(n + 1)))
        _guarded(report, f"boolean n={n}", params, lambda n=n, P=P, params=params: _top_betti_case(
            report, cfg, f"boolean n={n}", params, P, factorial(n)))

        def equi(n=n, params=params):
            A = boolean_action(n).rees(chain(n + 1))
            A = A.restrict(remove_bottom(A.poset))
            lhs = frobenius(homology_character(A), n)
            rhs = sum((q_eulerian_symfunc(n, j).omega() for j in range(n)), SymFunc.zero(n))
            report.add(f"equivariant n={n}", params, lhs, rhs)
        _guarded(report, f"equivariant n={n}", params, equi)
    for qv in cfg.q:
        for n in range(1, min(n_max, 3) + 1):
            params = {"n": n, "q": qv}
            name = f"subspace q={qv} n={n}"

            def body(n=n, qv=qv, params=params, name=name):
                P = remove_bottom(rees_product(_subspaces(cfg, n, qv), chain(n + 1)))
                _top_betti_case(report, cfg, name, params, P, _eval(ident.comaj_exc_total(n), q=qv))
            _guarded(report, name, params, body)


def _lemma_checks(report: SuiteReport, tag: str, params: dict, P: Poset) -> None:
    n = P.length
    Pd = dual(P)
    chain_P = truncated_rees_chain(P)
    for i in range(0, n + 1):
        R = r_i_poset(P, i)
        psi = psi_i(P, i)
        back = psi_i(Pd, i)
        anti = check_order_map(R, r_i_poset(Pd, i), psi, reverse=True)
        inverse = all(back[psi[x]] == x for x in R.elements)
        report.add(f"{tag} antiisomorphism i={i}", params, anti and inverse, True)
        if i == 0:
            continue
        plus = subposet(R, [k for k, (a, j) in enumerate(R.elements) if j > 0])
        target = lower_ideal(chain_P, (P.top, i - 1), closed=True)
        f = {(a, j): (a, j - 1) for a, j in plus.elements}
        report.add(f"{tag} isomorphism i={i}", params, check_order_map(plus, target, f), True)
        # the Möbius sum over R_i(P*) that links the two sides
        Rd = r_i_poset(Pd, i)
        base = (P.top, 0)
        total = sum(mobius(Rd, base, (a, j)) for a, j in Rd.elements if j == i)
        report.add(f"{tag} mobius-sum i={i}", params, mobius_hat(ideal_Ij(P, i - 1)), total)


def run_tree_lemma_random(cfg: SuiteConfig, report: SuiteReport) -> None:
    trials = 100 if cfg.trials is None else cfg.trials
    rng = random.Random(cfg.seed)
    for trial in range(trials):
        n = rng.randint(1, cfg.resolved_n_max())
        width = rng.randint(1, cfg.width)
        density = rng.choice([0.3, 0.5, 0.7, 1.0])
        sub_seed = rng.randrange(2 ** 32)
        P = random_ranked_bounded_poset(n, width, density, sub_seed)
        params = {"trial": trial, "n": n, "width": width, "density": density, "seed": sub_seed}
        tag = f"trial {trial}"
        ideals = [mobius_hat(ideal_Ij(P, j - 1)) for j in range(1, n + 1)]
        for tv in cfg.t:
            lhs = sum(m * tv ** j for j, m in enumerate(ideals, 1))
            rhs = -mobius_invariant(adjoin_top(rees_product(dual(P), tary_tree(tv, n))))
            report.add(f"{tag} t={tv}", {**params, "t": tv}, lhs, rhs)
        _lemma_checks(report, tag, params, P)


def run_uniform_recursion(cfg: SuiteConfig, report: SuiteReport) -> None:
    n_max = cfg.resolved_n_max()

    def tree_mu(P: Poset, tv: int) -> int:
        return mobius_invariant(adjoin_top(rees_product(P, tary_tree(tv, P.length))))

    def family(name: str, build: Callable[[int], Poset], top_n: int, qv: int):
        seq = [build(k) for k in range(top_n + 1)]
        for k, P in enumerate(seq):
            report.add(f"{name} uniform n={k}", {"n": k, "q": qv}, is_uniform(P), True)
        for tv in cfg.t:
            mus = [tree_mu(P, tv) for P in seq]
            for n in range(top_n + 1):
                W = whitney_numbers(seq[n])
                total = 1 + sum(W[k] * _eval(q_int(k + 1, "t"), t=tv) * mus[n - k] for k in range(n + 1))
                params = {"n": n, "t": tv, "q": qv}
                report.add(f"{name} recursion n={n} t={tv}", params, total, 0)
                if n >= 1:
                    report.add(f"{name} closed form n={n} t={tv}", params, mus[n],
                               _eval(ident.tree_mobius_formula(n), q=qv, t=tv))

    family("boolean", boolean_lattice, n_max, 1)
    for qv in cfg.q:
        top = min(n_max, 3)
        _guarded(report, f"subspace q={qv}", {"q": qv},
                 lambda qv=qv, top=top: family(f"subspace q={qv}", lambda k: _subspaces(cfg, k, qv), top, qv))


def run_symgen(cfg: SuiteConfig, report: SuiteReport) -> None:
    cap = cfg.degree_cap if cfg.degree_cap is not None else min(cfg.resolved_n_max(), 6)
    m = cfg.m if cfg.m is not None else cap
    for ident_id in ("symgen-1", "symgen-2"):
        res = series_identity_check(ident_id, cap, m)
        report.add(f"{ident_id} through z^{cap}", {"degree_cap": cap, "m": m}, res["pass"], True,
                   witness=json.dumps(res["first_failure"]))
    for N in range(0, max(cap, 6) + 1):
        row = ident.comaj_exc_fix_series_check(N)
        report.add(f"q-exponential N={N}", row["params"], row["lhs"], row["rhs"], row["pass"])
    for n in range(0, max(cap, 7) + 1):
        _guarded(report, f"fixed points n={n}", {"n": n}, lambda n=n: _fixed_rows(cfg, report, n))
    for n in range(1, cap + 1):
        for j in range(n):
            report.add(f"palindromic n={n} j={j}", {"n": n, "j": j},
                       q_eulerian_symfunc(n, j), q_eulerian_symfunc(n, n - 1 - j))


def _fixed_rows(cfg: SuiteConfig, report: SuiteReport, n: int) -> None:
    _perm_guard(cfg, n)
    for k in range(n + 1):
        row = ident.fixed_point_refinement_check(n, k)
        report.add(f"fixed points n={n} k={k}", row["params"], row["lhs"], row["rhs"], row["pass"])
    row = ident.derangement_inversion_check(n)
    report.add(f"derangement inversion n={n}", row["params"], row["lhs"], row["rhs"], row["pass"])


def run_equivariant_ideals(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(1, cfg.resolved_n_max() + 1):
        for j in range(n):
            params = {"n": n, "j": j}
            ch = ideal_frobenius(n, j)
            report.add(f"n={n} j={j}", params, ch, q_eulerian_symfunc(n, j).omega())
            report.add(f"n={n} j={j} schur-positive", params, schur_positive(ch), True)
            report.add(f"n={n} j={j} dimension", params, ch.coefficient((1,) * n), eulerian_number(n, j))


def run_equivariant_derangements(cfg: SuiteConfig, report: SuiteReport) -> None:
    n_max = cfg.resolved_n_max()
    for n in range(1, n_max + 1):
        params = {"n": n}
        ch = truncated_chain_frobenius(n)
        table = q_eulerian_table(n)
        rhs = sum((f.omega() for (j, k), f in table.items() if k == 0), SymFunc.zero(n))
        report.add(f"n={n}", params, ch, rhs)
        report.add(f"n={n} schur-positive", params, schur_positive(ch), True)
    cap = min(n_max, 6)
    res = series_identity_check("derangement-series", cap, cap)
    report.add(f"series through z^{cap}", {"degree_cap": cap}, res["pass"], True,
               witness=json.dumps(res["first_failure"]))


def _expansion(monomials, n: int, m: int) -> QSymExpansion:
    terms: Dict[tuple, int] = {}
    for e in monomials:
        e = tuple(e) + (0,) * (m - len(e))
        terms[e] = terms.get(e, 0) + 1
    return QSymExpansion(n, m, terms)


def _word_exponents(w, m):
    e = [0] * m
    for a in w:
        e[a - 1] += 1
    return tuple(e)


def run_words(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(1, cfg.resolved_n_max() + 1):
        m = n if cfg.m is None else max(cfg.m, n)
        for j in range(n):
            params = {"n": n, "j": j, "m": m}
            lhs = ideal_frobenius(n, j).expand(m)
            rhs = _expansion((_word_exponents(w, m) for w in words_W(n, j, m)), n, m)
            report.add(f"n={n} j={j}", params, lhs == rhs, True,
                       witness=f"{len(rhs.terms)} monomials")


def run_multiset_derangements(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(1, cfg.resolved_n_max() + 1):
        m = n if cfg.m is None else max(cfg.m, n)
        params = {"n": n, "m": m}
        lhs = truncated_chain_frobenius(n).expand(m)
        rhs = _expansion((D.monomial() for D in multiset_derangements_of_order(n, m)), n, m)
        report.add(f"n={n}", params, lhs == rhs, True, witness=f"{sum(rhs.terms.values())} derangements")


def run_equivariant_tree(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(1, cfg.resolved_n_max() + 1):
        omegas = [q_eulerian_symfunc(n, j).omega() for j in range(n)]
        for tv in cfg.t:
            params = {"n": n, "t": tv}
            rhs = sum((f * (tv ** (j + 1)) for j, f in enumerate(omegas)), SymFunc.zero(n))
            _guarded(report, f"n={n} t={tv}", params, lambda n=n, tv=tv, params=params, rhs=rhs: report.add(
                f"n={n} t={tv}", params, tree_frobenius(n, tv), rhs))


def run_equivariant_tree_lemma(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(1, cfg.resolved_n_max() + 1):
        for tv in cfg.t:
            params = {"n": n, "t": tv}
            lhs = sum((ideal_frobenius(n, j - 1) * (tv ** j) for j in range(1, n + 1)), SymFunc.zero(n))
            _guarded(report, f"n={n} t={tv}", params, lambda n=n, tv=tv, params=params, lhs=lhs: report.add(
                f"n={n} t={tv}", params, lhs, tree_frobenius(n, tv, use_dual=True)))


def run_sundaram(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(1, cfg.resolved_n_max() + 1):
        total = SymFunc.zero(n)
        for m in range(n + 1):
            inner = SymFunc(0, {(): 1}) if m == 0 else sum(
                (ideal_frobenius(m, j) for j in range(m)), SymFunc.zero(m))
            total = total + (-1) ** (n - m) * (inner * SymFunc.h(n - m))
        report.add(f"n={n}", {"n": n}, total, truncated_chain_frobenius(n))


def run_g_uniform(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(0, cfg.resolved_n_max() + 1):
        for tv in cfg.t:
            params = {"n": n, "t": tv}

            def body(n=n, tv=tv, params=params):
                total = SymFunc.zero(n)
                for k in range(n + 1):
                    weight = _eval(q_int(k + 1, "t"), t=tv)
                    total = total + weight * (SymFunc.h(k) * tree_lefschetz_frobenius(n - k, tv))
                report.add(f"n={n} t={tv}", params, total, -SymFunc.h(n))
            _guarded(report, f"n={n} t={tv}", params, body)


def run_bc(cfg: SuiteConfig, report: SuiteReport) -> None:
    for n in range(1, cfg.resolved_n_max() + 1):
        params = {"n": n}
        P = crosspolytope_faces(n)
        W = whitney_numbers(P)
        report.add(f"whitney n={n}", params, W, [2 ** r * comb(n, r) for r in range(n + 1)])
        count = sum(1 for _ in bc_derangements(n))
        report.add(f"count formula n={n}", params, count, bc_count_formula(n))
        R = truncated_rees_chain(P)
        _guarded(report, f"homology n={n}", params, lambda R=R, n=n, params=params, count=count: _top_betti_case(
            report, cfg, f"homology n={n}", params, R, count))
        report.add(f"simplicial mobius n={n}", params, mobius_hat(R), ident.simplicial_mobius_formula(W))
        if n <= 3:
            bottom = P.bottom
            ok = all(find_isomorphism(interval(P, bottom, x), boolean_lattice(len(x))) is not None
                     for x in P.elements)
            report.add(f"simplicial n={n}", params, ok, True)


def run_bc_q(cfg: SuiteConfig, report: SuiteReport) -> None:
    n_max = cfg.resolved_n_max()
    for qv in cfg.q:
        for n in range(1, n_max + 2):
            params = {"n": n, "q": qv}
            name = f"q={qv} n={n}"

            def body(n=n, qv=qv, params=params, name=name):
                P = _isotropic(cfg, n, qv)
                W = whitney_numbers(P)
                report.add(f"{name} whitney", params, W,
                           [_eval(ident.isotropic_whitney_formula(n, k), q=qv) for k in range(n + 1)])
                report.add(f"{name} maximal dimension", params,
                           sorted({P.height[i] for i in P.maximal()}), [n])
                R = truncated_rees_chain(P)
                expected = _eval(ident.type_bc_q_formula(n), q=qv)
                if n <= n_max:
                    _top_betti_case(report, cfg, f"{name} homology", params, R, expected)
                else:
                    _mobius_route_case(report, cfg, f"{name} mobius", params, R, expected)
                report.add(f"{name} q-simplicial mobius", params, mobius_hat(R),
                           ident.q_simplicial_mobius_formula(W, qv))
                if n <= 2:
                    ok = all(find_isomorphism(interval(P, P.bottom, x), _subspaces(cfg, P.height[P.index[x]], qv))
                             is not None for x in P.elements)
                    report.add(f"{name} q-simplicial", params, ok, True)
            _guarded(report, name, params, body)
    for n in range(0, max(n_max, 5) + 1):
        row = ident.bar_index_check(n)
        report.add(f"bar index n={n}", row["params"], row["lhs"], row["rhs"], row["pass"])
        report.add(f"alternating form n={n}", {"n": n}, ident.type_bc_alternating_formula(n),
                   ident.type_bc_q_formula(n))


def run_gaussian_identity(cfg: SuiteConfig, report: SuiteReport) -> None:
    for row in ident.gaussian_chain(cfg.resolved_n_max()):
        label = " ".join(f"{k}={v}" for k, v in row["params"].items())
        report.add(f"{row['identity']} {label}", row["params"], row["lhs"], row["rhs"], row["pass"])


def run_cohen_macaulay(cfg: SuiteConfig, report: SuiteReport) -> None:
    n_max = cfg.resolved_n_max()
    families = [("boolean", lambda n: boolean_lattice(n), n_max)]
    families += [(f"subspace q={qv}", lambda n, qv=qv: _subspaces(cfg, n, qv), n_max - 1) for qv in cfg.q[:1]]
    families += [("crosspolytope", crosspolytope_faces, n_max - 1)]
    for name, build, top in families:
        for n in range(1, top + 1):
            params = {"n": n}
            _guarded(report, f"{name} n={n}", params, lambda name=name, build=build, n=n, params=params: report.add(
                f"{name} n={n}", params, is_cohen_macaulay(truncated_rees_chain(build(n)), cfg.simplices()), True))


def run_euler_poincare(cfg: SuiteConfig, report: SuiteReport) -> None:
    posets = []
    for n in range(1, cfg.resolved_n_max() + 1):
        posets.append((f"boolean n={n}", boolean_lattice(n)))
        posets.append((f"boolean^- * chain n={n}", truncated_rees_chain(boolean_lattice(n))))
    posets.append(("subspace n=3 q=2", subspace_lattice(3, 2)))
    posets.append(("crosspolytope n=3", crosspolytope_faces(3)))
    posets.append(("tree t=2 n=3", tary_tree(2, 3)))
    rng = random.Random(cfg.seed)
    for k in range(50 if cfg.trials is None else cfg.trials):
        n = rng.randint(1, 4)
        P = random_ranked_bounded_poset(n, rng.randint(1, cfg.width), rng.choice([0.3, 0.6, 1.0]),
                                        rng.randrange(2 ** 32))
        posets.append((f"random {k} interior", remove_bottom(P) if len(P) > 1 else P))
    for name, P in posets:
        def body(name=name, P=P):
            rb = reduced_betti(P, cfg.simplices())
            _euler_case(report, name, {"size": len(P)}, P, rb)
        _guarded(report, name, {"size": len(P)}, body)


@dataclass(frozen=True)
class SuiteSpec:
    id: str
    statement: str
    default_n: int
    max_n: int
    runner: Callable[[SuiteConfig, SuiteReport], None]
    degree_convention: str = TOP_DEGREE


SUITES: Dict[str, SuiteSpec] = {s.id: s for s in [
    SuiteSpec("jonsson", "top homology of B_n^- * C_n has dimension d_n (homology route; Mobius route to n=7)",
              5, 6, run_jonsson),
    SuiteSpec("eulerian", "top homology of I_j(B_n) has dimension a_{n,j}", 5, 6, run_eulerian),
    SuiteSpec("q-eulerian", "top homology of I_j(B_n(q)) has dimension q^(C(n,2)+j) a_{n,j}^{maj,exc}(1/q)",
              4, 4, run_q_eulerian),
    SuiteSpec("q-derangement", "top homology of B_n(q)^- * C_n has dimension sum_{D_n} q^(C(n,2)-maj+exc)",
              4, 4, run_q_derangement),
    SuiteSpec("tree", "top homology of (B_n * T_{t,n})^- has dimension t A_n(t); "
              "subspace version t A_n^{comaj,exc}(q, qt)", 4, 5, run_tree, TREE_DEGREE),
    SuiteSpec("tree-corollary", "(B_n * C_{n+1})^-: dimension n!, subspace version sum q^(comaj+exc), "
              "character sum_j omega Q_{n,j}", 4, 5, run_tree_corollary, TREE_DEGREE),
    SuiteSpec("tree-lemma-random", "random bounded ranked P: sum_j mu(I_{j-1}(P)-hat) t^j = "
              "-mu((P* * T_{t,n})^+), with the R_i(P) isomorphism and antiisomorphism checks",
              4, 5, run_tree_lemma_random),
    SuiteSpec("uniform-recursion", "1 + sum_k W_k(P_n) [k+1]_t mu((P_{n-k} * T_{t,n-k})^+) = 0 for "
              "uniform sequences, and the closed form of mu((B_n(q) * T_{t,n})^+)", 4, 6, run_uniform_recursion),
    SuiteSpec("symgen", "generating function of Q_{n,j,k} (both forms), its q-exponential "
              "specialization and the fixed-point refinement", 5, 6, run_symgen),
    SuiteSpec("equivariant-ideals", "ch H~(I_j(B_n)) = omega Q_{n,j}", 5, 6, run_equivariant_ideals),
    SuiteSpec("equivariant-derangements", "ch H~(B_n^- * C_n) = sum_j omega Q_{n,j,0}, and its "
              "generating function 1/(1 - sum (i-1) e_i z^i)", 5, 6, run_equivariant_derangements),
    SuiteSpec("words", "ch H~(I_j(B_n)) = sum of x_w over words with no equal adjacent letters and "
              "j descents", 4, 5, run_words),
    SuiteSpec("multiset-derangements", "ch H~(B_n^- * C_n) = sum of x^D over multiset derangements",
              4, 5, run_multiset_derangements),
    SuiteSpec("equivariant-tree", "ch H~((B_n * T_{t,n})^-) = t sum_j omega Q_{n,j} t^j",
              4, 5, run_equivariant_tree, TREE_DEGREE),
    SuiteSpec("equivariant-tree-lemma", "sum_j t^j ch H~(I_{j-1}(B_n)) = ch H~((B_n* * T_{t,n})^-)",
              4, 5, run_equivariant_tree_lemma, TREE_DEGREE),
    SuiteSpec("sundaram", "sum_m (-1)^(n-m) sum_j ch H~(I_j(B_m)) h_{n-m} = ch H~(B_n^- * C_n)",
              4, 5, run_sundaram),
    SuiteSpec("g-uniform", "sum_k [k+1]_t h_k L_{n-k}(t) = -h_n with L_m the Lefschetz character of "
              "(B_m * T_{t,m})^-", 5, 6, run_g_uniform),
    SuiteSpec("bc", "top homology of PCP_n^- * C_n has dimension d_n^BC; simplicial Mobius formula",
              4, 5, run_bc),
    SuiteSpec("bc-q", "top homology of PCP_n(q)^- * C_n against the closed q-formula and the bar-index "
              "polynomial; isotropic Whitney numbers", 2, 3, run_bc_q),
    SuiteSpec("gaussian-identity", "Gaussian-binomial identities behind the type BC q-formula, "
              "as polynomial identities", 6, 10, run_gaussian_identity),
    SuiteSpec("cohen-macaulay", "P^- * C_n is Cohen-Macaulay for Boolean, subspace and "
              "cross-polytope posets", 4, 4, run_cohen_macaulay),
    SuiteSpec("euler-poincare", "mu(P-hat) equals the alternating sum of reduced Betti numbers",
              4, 5, run_euler_poincare),
]}


def list_suites() -> List[Tuple[str, str]]:
    return [(s.id, s.statement) for s in SUITES.values()]


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    cfg.validate()
    spec = SUITES[cfg.suite]
    report = SuiteReport(spec.id, spec.statement, spec.degree_convention, cfg.to_dict())
    spec.runner(cfg, report)
    return report


def run_suites(names: Sequence[str], base: Optional[SuiteConfig] = None) -> List[SuiteReport]:
    out = []
    for name in names:
        cfg = SuiteConfig(**{**asdict(base or SuiteConfig(suite=name)), "suite": name})
        out.append(run_suite(cfg))
    return out
