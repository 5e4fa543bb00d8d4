"""Command-line workbench: factor, analyze, enumerate, verify.

Polynomial string grammar for human input: terms `c`, `x`, `x^e`, `c x^e`
joined by `+`/`-`, coefficients reduced mod p; a polynomial over R_k is k
semicolon-separated F_p polynomial strings in u-layer order, e.g.
`x^2+1; 1` for x^2+1+u.  JSON code files remain the canonical format.

Exit codes: 0 success, 1 property failure, 2 usage or validation error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .chainring import RkPoly
from .code import CyclicCode, code_from_generators, load_code_file
from .distance import closed_form_distance
from .gfp import BudgetError, FpPoly, PrimeParams, factor_xn_minus_1
from .properties import SUITES, run_suite
from .structure import (canonical_form, collapse_coprime, enumerate_coprime,
                        is_free, minimal_spanning_set, rank, verify_constraints)

__all__ = ["main", "entry", "parse_fp_poly", "format_fp_poly",
           "parse_rk_poly", "format_rk_poly", "parse_budget", "build_report"]


# -- polynomial string grammar -------------------------------------------

_TERM = re.compile(r"([+-]?)(\d+)?\*?(x(?:\^(\d+))?)?\Z")


def parse_fp_poly(text: str, p: int) -> FpPoly:
    s = text.replace(" ", "").replace("**", "^")
    if s in ("", "0"):
        return FpPoly.zero(p)
    coeffs: dict[int, int] = {}
    for part in re.findall(r"[+-]?[^+-]+", s):
        m = _TERM.fullmatch(part)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"bad polynomial term {part!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            e = 0
        else:
            e = int(m.group(4)) if m.group(4) is not None else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return FpPoly(out, p)


def format_fp_poly(f: FpPoly) -> str:
    if f.is_zero:
        return "0"
    terms = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            var = "x" if e == 1 else f"x^{e}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms)


def parse_rk_poly(text: str, params: PrimeParams) -> RkPoly:
    layers = text.split(";")
    if len(layers) > params.k:
        raise ValueError(f"at most {params.k} u-layers expected")
    return RkPoly([parse_fp_poly(l, params.p) for l in layers], params)


def format_rk_poly(g: RkPoly) -> str:
    return "; ".join(format_fp_poly(l) for l in g.ulayers)


def parse_budget(text: str) -> int:
    """Plain integer or `2^N` notation."""
    m = re.fullmatch(r"(\d+)\^(\d+)", text.strip())
    if m:
        return int(m.group(1)) ** int(m.group(2))
    return int(text)


# -- analysis report -------------------------------------------------------

_DISTANCE_ORDER = {
    "auto": ("closed-form", "torsion", "brute-force"),
    "closed-form": ("closed-form",),
    "torsion": ("torsion",),
    "brute-force": ("brute-force",),
}


def _resolve_distance(code: CyclicCode, mode: str, budget: int) -> dict:
    if code.dim == 0:
        return {"value": None, "method": None, "note": "undefined (zero code)"}
    attempts = _DISTANCE_ORDER[mode]
    last_error = None
    for method in attempts:
        try:
            if method == "closed-form":
                value = closed_form_distance(code)
            elif method == "torsion":
                value = code.min_distance(budget=budget)
            else:
                value = code.min_distance_bruteforce(budget=budget)
            return {"value": value, "method": method}
        except BudgetError:
            if method == attempts[-1]:
                raise
        except ValueError as exc:
            last_error = exc
            if method == attempts[-1] and len(attempts) == 1:
                raise
    raise ValueError(f"no distance method applicable: {last_error}")


def build_report(code: CyclicCode, distance_mode: str = "auto",
                 budget: int = 1 << 24) -> dict:
    params = code.params
    tower = code.torsion_tower()
    cf = canonical_form(code)
    free, witness = is_free(code)
    creport = verify_constraints(code)
    dual = code.dual()
    assert code.dim + dual.dim == params.k * params.n
    if code.dim == 0:
        spanning = None
    else:
        ss = minimal_spanning_set(code)
        spanning = {"size": ss.cardinality,
                    "elements": [format_rk_poly(e) for e in ss.elements]}
    return {
        "p": params.p,
        "k": params.k,
        "n": params.n,
        "zero_code": code.dim == 0,
        "tower": [{"coeffs": list(g.coeffs), "string": format_fp_poly(g)}
                  for g in tower.gens],
        "shape": cf.shape,
        "free": free,
        "witness": None if witness is None else format_rk_poly(witness),
        "rank": rank(code),
        "log_cardinality": code.dim,
        "spanning_set": spanning,
        "distance": _resolve_distance(code, distance_mode, budget),
        "dual": {"log_cardinality": dual.dim, "self_dual": dual == code},
        "constraints": [
            {"level": c.level, "layer": c.layer,
             "mixing": format_fp_poly(c.mixing), "vacuous": c.vacuous,
             "chain_cofactors_ok": c.chain_cofactors_ok, "repeated_cofactors_ok": c.repeated_cofactors_ok}
            for c in creport.checks
        ],
        "code": code.to_json_dict(),
    }


def _print_report_text(rep: dict, out):
    print(f"code over R_{rep['k']} (p={rep['p']}), length {rep['n']}", file=out)
    print("tower: " + " | ".join(t["string"] for t in rep["tower"]), file=out)
    print(f"shape: {rep['shape']}", file=out)
    print(f"free: {'yes, witness ' + rep['witness'] if rep['free'] and rep['witness'] else ('yes' if rep['free'] else 'no')}", file=out)
    print(f"rank: {rep['rank']}", file=out)
    print(f"log_p|C|: {rep['log_cardinality']}", file=out)
    if rep["spanning_set"] is not None:
        print(f"minimal spanning set ({rep['spanning_set']['size']}):", file=out)
        for e in rep["spanning_set"]["elements"]:
            print(f"  {e}", file=out)
    d = rep["distance"]
    if d["value"] is None:
        print(f"distance: {d['note']}", file=out)
    else:
        print(f"distance: {d['value']} ({d['method']})", file=out)
    print(f"dual: log_p|C~| = {rep['dual']['log_cardinality']}, "
          f"self-dual: {'yes' if rep['dual']['self_dual'] else 'no'}", file=out)
    for c in rep["constraints"]:
        status = "vacuous" if c["vacuous"] else \
            f"chain-cofactors {'ok' if c['chain_cofactors_ok'] else 'FAIL'}, " \
            f"repeated-cofactors {'ok' if c['repeated_cofactors_ok'] else 'FAIL'}"
        print(f"constraint level {c['level']} layer {c['layer']} "
              f"(mixing {c['mixing']}): {status}", file=out)


# -- commands ---------------------------------------------------------------

def cmd_factor(args) -> int:
    params = PrimeParams(args.p, 1, args.n)
    facs = factor_xn_minus_1(params)
    if args.format == "json":
        doc = {"p": params.p, "n": params.n,
               "factors": [{"coeffs": list(q.coeffs), "string": format_fp_poly(q),
                            "multiplicity": e} for q, e in facs]}
        print(json.dumps(doc, indent=2))
    else:
        print(f"x^{params.n} - 1 over F_{params.p}")
        for q, e in facs:
            print(f"({format_fp_poly(q)})^{e}")
    return 0


def _load_analyze_code(args) -> CyclicCode:
    if args.code_file:
        return load_code_file(args.code_file)
    if args.gen and args.p and args.k and args.n:
        params = PrimeParams(args.p, args.k, args.n)
        gens = [parse_rk_poly(s, params) for s in args.gen]
        return code_from_generators(params, gens)
    raise ValueError("provide --code-file, or --p/--k/--n with one or more --gen")


def cmd_analyze(args) -> int:
    code = _load_analyze_code(args)
    rep = build_report(code, args.distance_mode, args.budget)
    if args.format == "json":
        print(json.dumps(rep, indent=2))
    else:
        _print_report_text(rep, sys.stdout)
    return 0


def cmd_enumerate(args) -> int:
    params = PrimeParams(args.p, args.k, args.n)
    codes = enumerate_coprime(params)
    nonzero = [c for c in codes if c.dim > 0]
    rows = []
    for code in nonzero:
        h = collapse_coprime(code)
        rows.append({"generator": format_rk_poly(h), "rank": rank(code),
                     "log_cardinality": code.dim,
                     "distance": code.min_distance(budget=args.budget)})
    if args.include_zero:
        rows.append({"generator": "0", "rank": 0, "log_cardinality": 0,
                     "distance": None, "zero_code": True})
    if args.format == "json":
        print(json.dumps({"p": params.p, "k": params.k, "n": params.n,
                          "codes": rows, "nonzero_count": len(nonzero)}, indent=2))
    else:
        for row in rows:
            d = "-" if row["distance"] is None else row["distance"]
            print(f"<{row['generator']}>  rank={row['rank']}  "
                  f"log|C|={row['log_cardinality']}  d={d}")
        print(f"{len(nonzero)} nonzero codes")
    return 0


def cmd_verify(args) -> int:
    print(f"suite: {args.suite}  trials: {args.trials}  seed: {args.seed}  "
          f"budget: {args.budget}")
    results = run_suite(args.suite, args.trials, args.seed, args.budget)
    failed = False
    for res in results:
        print(f"{res.name}: {res.passed}/{res.total}")
        if not res.ok:
            failed = True
            for repro in res.failures[:5]:
                print(f"  FAIL reproducer: {repro}")
    print("result: " + ("FAIL" if failed else "PASS"))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ucyclic",
        description="cyclic codes over Z_p + uZ_p + ... + u^(k-1)Z_p")
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("factor", help="factor x^n - 1 over F_p")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.set_defaults(func=cmd_factor)

    a = sub.add_parser("analyze", help="full structure report for one code")
    a.add_argument("--code-file", help="JSON code document")
    a.add_argument("--p", type=int)
    a.add_argument("--k", type=int)
    a.add_argument("--n", type=int)
    a.add_argument("--gen", action="append",
                   help="generator as semicolon-separated u-layer polynomials; repeatable")
    a.add_argument("--distance-mode", default="auto",
                   choices=("auto", "closed-form", "torsion", "brute-force"))
    a.add_argument("--budget", type=parse_budget, default=1 << 24)
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="all cyclic codes for gcd(n, p) = 1")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--include-zero", action="store_true")
    e.add_argument("--budget", type=parse_budget, default=1 << 24)
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run randomized/exhaustive property suites")
    v.add_argument("--suite", choices=tuple(SUITES), default="all")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=parse_budget, default=1 << 24)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())
