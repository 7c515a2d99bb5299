"""Command line entry point: ``rees-lab``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import List, Optional

from .catalog import FAMILIES, build_family
from .homology import ComplexityGuardError, euler_poincare_check, mobius_hat, reduced_betti
from .permstat import FLAVORS, exd_set, parse_permutation, q_eulerian, stats
from .poset import PosetError, poset_from_json
from .suites import SUITES, SuiteConfig, UnknownSuiteError, export, list_suites, run_suite


def _load_poset(path: str):
    with open(path) as fh:
        return poset_from_json(json.load(fh))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_verify(args) -> int:
    data = {}
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
    overrides = {"n_max": args.n_max, "q": args.q, "t": args.t, "seed": args.seed,
                 "trials": args.trials, "m": args.m, "out": args.out, "format": args.format}
    data.update({k: v for k, v in overrides.items() if v is not None})
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        cfg = SuiteConfig.from_dict({**data, "suite": name})
        if args.suite == "all" and cfg.n_max is not None:
            cfg.n_max = min(cfg.n_max, SUITES[name].max_n)
        reports.append(run_suite(cfg))
    fmt = data.get("format", "table")
    _emit(export(reports, fmt), data.get("out"))
    failed = [r.suite for r in reports if not r.ok]
    if failed and data.get("out"):
        print(f"failed suites: {', '.join(failed)}", file=sys.stderr)
    return 1 if failed else 0


def cmd_list(args) -> int:
    for sid, statement in list_suites():
        spec = SUITES[sid]
        print(f"{sid:26s} n<={spec.default_n} (max {spec.max_n})  {statement}")
    return 0


def cmd_poset_build(args) -> int:
    P = build_family(args.family, args.n, args.q, args.t)
    if args.format == "dot":
        _emit(P.to_dot(args.family), args.out)
    else:
        _emit(json.dumps(P.to_json(), indent=None), args.out)
    return 0


def cmd_betti(args) -> int:
    P = _load_poset(args.poset)
    rb = reduced_betti(P, args.max_simplices)
    # reduced Betti numbers from degree 0 up to the top
    out = {"betti": [rb[d] for d in range(max(rb) + 1)], "mu": mobius_hat(P),
           "euler_ok": euler_poincare_check(P, args.max_simplices)}
    print(json.dumps(out))
    return 0


def cmd_mobius(args) -> int:
    print(json.dumps({"mu": mobius_hat(_load_poset(args.poset))}))
    return 0


def cmd_stats(args) -> int:
    w = parse_permutation(args.perm)
    out = stats(w)._asdict()
    out["exd"] = sorted(exd_set(w))
    print(json.dumps({"permutation": list(w), **out}))
    return 0


def cmd_poly(args) -> int:
    print(json.dumps(q_eulerian(args.n, args.flavor).to_json()))
    return 0


def cmd_symfunc(args) -> int:
    from .symfunc import q_eulerian_symfunc
    f = q_eulerian_symfunc(args.n, args.j, args.k)
    if args.basis == "m":
        print(json.dumps(f.to_json()))
    else:
        coeffs = {str(list(lam)): str(c) for lam, c in sorted(f.to_basis(args.basis).items()) if c}
        print(json.dumps({"degree": f.degree, "basis": args.basis, "coeffs": coeffs}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rees-lab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite (or 'all')")
    v.add_argument("suite")
    v.add_argument("--n-max", "--n", dest="n_max", type=int)
    v.add_argument("--q", type=int, nargs="+")
    v.add_argument("--t", type=int, nargs="+")
    v.add_argument("--m", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--out")
    v.add_argument("--format", choices=["json", "csv", "table"])
    v.add_argument("--config", help="JSON file with SuiteConfig fields")
    v.set_defaults(func=cmd_verify)

    sub.add_parser("list", help="list the suites").set_defaults(func=cmd_list)

    ps = sub.add_parser("poset", help="catalog posets").add_subparsers(dest="poset_cmd", required=True)
    b = ps.add_parser("build")
    b.add_argument("family", choices=sorted(FAMILIES))
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--t", type=int, default=2)
    b.add_argument("--format", choices=["json", "dot"], default="json")
    b.add_argument("--out")
    b.set_defaults(func=cmd_poset_build)

    bt = sub.add_parser("betti", help="reduced Betti numbers of a poset JSON file")
    bt.add_argument("poset")
    bt.add_argument("--max-simplices", type=int)
    bt.set_defaults(func=cmd_betti)

    mb = sub.add_parser("mobius", help="mu of the poset with bottom and top adjoined")
    mb.add_argument("poset")
    mb.set_defaults(func=cmd_mobius)

    st = sub.add_parser("stats", help="statistics of a permutation")
    st.add_argument("perm")
    st.set_defaults(func=cmd_stats)

    po = sub.add_parser("poly").add_subparsers(dest="poly_cmd", required=True)
    eu = po.add_parser("eulerian")
    eu.add_argument("--n", type=int, required=True)
    eu.add_argument("--flavor", choices=sorted(FLAVORS), default="maj-exc")
    eu.set_defaults(func=cmd_poly)

    sf = sub.add_parser("symfunc").add_subparsers(dest="symfunc_cmd", required=True)
    qe = sf.add_parser("q-eulerian")
    qe.add_argument("--n", type=int, required=True)
    qe.add_argument("--j", type=int, required=True)
    qe.add_argument("--k", type=int)
    qe.add_argument("--basis", choices=["m", "s", "h", "e", "p"], default="m")
    qe.set_defaults(func=cmd_symfunc)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UnknownSuiteError, PosetError, ComplexityGuardError, ValueError, OSError) as exc:
        print(f"rees-lab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
