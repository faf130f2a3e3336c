"""Command-line front end: ``fockweyl {eval,check,conditions,scan,solve,examples}``.

Exact values are printed as rationals in units of pi^n; floats with 17
significant digits.  ``--json`` switches every command to machine-readable
output.  The exit code is nonzero iff a requested check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, List, Optional

from . import estimates, sampling
from .dsl import DSLSyntaxError, infer_dimension, parse_operator, parse_poly, parse_symbol
from .fock import UNIT, FockPoly
from .forms import OperatorFamily, PForm, d_apply, duality_check
from .poly import DimensionError
from .scalar import GaussianRational, parse_scalar
from .spectral import solve_canonical_1d
from .weyl import diff_op, hamil_expansion, mult_op, multiply

DEFAULT_SEED = 0
DEFAULT_TRIALS = 100
IDENTITIES = ("hamil", "comm11", "energy", "duality", "d_squared")

EXAMPLE_FAMILIES = {
    "a": "d1*d2; d1^2 + d2^2",
    "b": "i*d1*d2; d1^2 + d2^2",
    "c": "d1^2; d2^2",
    "d": "d1^2 + d2; d1 + d2^2",
}


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _scalar(x: GaussianRational) -> dict:
    return {"re": str(x.re), "im": str(x.im)}


def _emit(args, payload: dict, lines: List[str]):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _parse_form(text: str, n: int, p: int) -> PForm:
    parts = [s.strip() for s in text.split(";")]
    polys = [parse_poly(s, n) if s else FockPoly(n) for s in parts]
    return PForm.from_list(n, p, polys)


def _load_form(args, n: int) -> Optional[PForm]:
    if getattr(args, "form_file", None):
        with open(args.form_file) as fh:
            u = PForm.from_json(json.load(fh))
        if u.n != n:
            raise UsageError(f"form file has n={u.n}, family has n={n}")
        return u
    if getattr(args, "form", None):
        return _parse_form(args.form, n, args.degree)
    return None


# eval ------------------------------------------------------------------------

def cmd_eval(args) -> int:
    n = args.n
    if n is None:
        n = max(infer_dimension(args.expr), infer_dimension(args.operand))
    op = parse_operator(args.expr, n)
    f = parse_poly(args.operand, n)
    result = op(f)
    _emit(args, {"operator": str(op), "operand": str(f), "result": str(result),
                 "result_json": result.to_json(), "n": n}, [str(result)])
    return 0


# check -----------------------------------------------------------------------

def _trial_hamil(rng, args):
    n = rng.randint(1, 3)
    Q, P = sampling.symbol(rng, n, 3), sampling.symbol(rng, n, 3)
    lhs = hamil_expansion(Q, P)
    rhs = multiply(diff_op(Q), mult_op(P))
    return lhs == rhs, {"Q": str(Q), "P": str(P)}, str(lhs), str(rhs)


def _trial_comm11(rng, args, coeffs=None, u=None):
    if coeffs is None:
        m = rng.randint(0, 4)
        coeffs = [sampling.gaussian_rational(rng) for _ in range(m + 1)]
        u = sampling.poly(rng, 1, 6, density=0.6)
    r = estimates.commutator_identity_1d(coeffs, u)
    return r.holds, {"coeffs": [str(c) for c in coeffs], "u": str(u)}, str(r.lhs), str(r.rhs)


def _random_family(rng, args):
    if args.family:
        return OperatorFamily.from_dsl(args.family)
    n = rng.randint(1, 3)
    return sampling.family(rng, n, 2)


def _trial_energy(rng, args, F=None, u=None):
    if F is None:
        F = _random_family(rng, args)
    if u is None:
        u = sampling.form(rng, F.n, 1, 4)
    r = estimates.energy_identity_check(F, u)
    inputs = {"family": str(F), "form": str(u), "q": str(r.q)}
    return r.holds, inputs, str(r.lhs), str(r.rhs)


def _trial_duality(rng, args, F=None, u=None, v=None):
    if F is None:
        F = _random_family(rng, args)
    if u is None:
        p = rng.randint(0, F.n - 1) if F.n > 0 else 0
        u = sampling.form(rng, F.n, p, 4)
        v = sampling.form(rng, F.n, p + 1, 4)
    r = duality_check(F, u, v)
    return r.holds, {"family": str(F), "u": str(u), "v": str(v)}, str(r.lhs), str(r.rhs)


def _trial_d_squared(rng, args, F=None, u=None):
    if F is None:
        F = _random_family(rng, args)
    if F.n < 2:
        return True, {"family": str(F), "note": "n=1 has no 2-forms"}, "0", "0"
    if u is None:
        u = sampling.form(rng, F.n, rng.randint(0, F.n - 2), 4)
    ddu = d_apply(F, d_apply(F, u))
    return ddu.is_zero(), {"family": str(F), "form": str(u)}, str(ddu), "0"


TRIALS = {"hamil": _trial_hamil, "comm11": _trial_comm11, "energy": _trial_energy,
          "duality": _trial_duality, "d_squared": _trial_d_squared}


def _explicit_trial(args) -> Optional[Callable]:
    """A single trial built from explicit inputs, or None for randomized mode."""
    ident = args.identity
    if ident == "comm11" and args.coeffs:
        coeffs = [parse_scalar(c) for c in args.coeffs.split(",")]
        u = parse_poly(args.poly or "1", 1)
        return lambda rng, a: _trial_comm11(rng, a, coeffs, u)
    if ident == "hamil" and args.family:
        parts = args.family.split(";")
        if len(parts) != 2:
            raise UsageError("hamil takes --family 'Q; P' with exactly two symbols")
        n = max(infer_dimension(s) for s in parts)
        Q, P = (parse_symbol(s, n) for s in parts)

        def run(rng, a):
            lhs, rhs = hamil_expansion(Q, P), multiply(diff_op(Q), mult_op(P))
            return lhs == rhs, {"Q": str(Q), "P": str(P)}, str(lhs), str(rhs)
        return run
    if args.family and (args.form or args.form_file):
        F = OperatorFamily.from_dsl(args.family)
        u = _load_form(args, F.n)
        if ident == "energy":
            return lambda rng, a: _trial_energy(rng, a, F, u)
        if ident == "d_squared":
            return lambda rng, a: _trial_d_squared(rng, a, F, u)
        if ident == "duality":
            if not args.form_v:
                raise UsageError("duality with an explicit form also needs --form-v")
            v = _parse_form(args.form_v, F.n, u.p + 1)
            return lambda rng, a: _trial_duality(rng, a, F, u, v)
    return None


def cmd_check(args) -> int:
    if args.identity not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}; choose from {IDENTITIES}")
    rng = sampling.make_rng(args.seed)
    single = None if args.random is not None else _explicit_trial(args)
    if single is not None:
        runs = [single]
    else:
        n_trials = args.random if args.random is not None else args.trials
        runs = [TRIALS[args.identity]] * n_trials
    passed, first_failure, last = 0, None, None
    for i, trial in enumerate(runs):
        ok, inputs, lhs, rhs = trial(rng, args)
        last = {"trial": i, "inputs": inputs, "lhs": lhs, "rhs": rhs}
        if ok:
            passed += 1
        elif first_failure is None:
            first_failure = last
    total = len(runs)
    # hamil compares operators and d_squared compares forms; only the rest are inner products
    unit = UNIT if args.identity in ("comm11", "energy", "duality") else None
    payload = {"identity": args.identity, "seed": args.seed, "trials": total, "passed": passed,
               "failed": total - passed, "unit": unit, "first_failure": first_failure}
    lines = [f"{args.identity}: {passed}/{total} passed (seed {args.seed})"]
    if single is not None:
        payload["instance"] = last
        lines += [f"  {k}: {v}" for k, v in last["inputs"].items()]
        suffix = f"  ({unit})" if unit else ""
        lines += [f"  lhs = {last['lhs']}{suffix}", f"  rhs = {last['rhs']}{suffix}"]
    if first_failure:
        lines += ["first failure:", f"  inputs: {first_failure['inputs']}",
                  f"  lhs = {first_failure['lhs']}", f"  rhs = {first_failure['rhs']}"]
    _emit(args, payload, lines)
    return 0 if passed == total else 1


# conditions / scan -----------------------------------------------------------

def _pair(text: str):
    F = OperatorFamily.from_dsl(text)
    if F.n != 2:
        raise UsageError(f"need a family of two operators in n=2, got n={F.n}")
    return F.symbols


def _verdict_lines(v: estimates.ConditionVerdict) -> List[str]:
    status = "pass" if v.passed else "fail"
    sign = {1: "+1", -1: "-1", None: "none"}[v.sign]
    const = v.estimate_constant if v.estimate_constant is not None else "not applicable"
    out = [f"{v.theorem}: {status}  sign={sign}  first_order={v.first_order_ok}  "
           f"second_order={v.second_order_ok}  C1={v.C1}  C2={v.C2}  constant={const}"]
    out += [f"    violated: {f}" for f in v.failures]
    out += [f"    note: {n}" for n in v.notes]
    return out


def cmd_conditions(args) -> int:
    p1, p2 = _pair(args.family)
    verdicts = estimates.check_conditions_dim2(p1, p2)
    lines = [f"family: {args.family}"]
    for v in verdicts:
        lines += _verdict_lines(v)
    _emit(args, {"family": args.family, "verdicts": [v.to_json() for v in verdicts]}, lines)
    return 0


def cmd_scan(args) -> int:
    p1, p2 = _pair(args.family)
    hits = estimates.scan_counterexample(p1, p2, args.max_degree,
                                         estimates.coefficient_grid(args.grid))
    lines = [f"family: {args.family}  max_degree={args.max_degree}  grid={args.grid}",
             f"{len(hits)} negative value(s) (unit pi^2)"]
    lines += [f"  Q = {h.value.re}   u = {h.u}" for h in hits[:args.limit]]
    if len(hits) > args.limit:
        lines.append(f"  ... {len(hits) - args.limit} more")
    _emit(args, {"family": args.family, "max_degree": args.max_degree, "grid": args.grid,
                 "unit": "pi^2", "count": len(hits), "hits": [h.to_json() for h in hits]}, lines)
    return 0


# solve -----------------------------------------------------------------------

def cmd_solve(args) -> int:
    coeffs = [parse_scalar(c) for c in args.coeffs.split(",")]
    alpha = parse_poly(args.alpha, 1)
    sol = solve_canonical_1d(coeffs, alpha, args.cutoff)
    mono = sol.u0_monomial()
    terms = [f"({_fmt(c.real)}{c.imag:+.17g}j)*z^{k}" for k, c in enumerate(mono)
             if abs(c) > 1e-12]
    lines = [f"u0 = {' + '.join(terms) or '0'}",
             f"residual_norm        = {_fmt(sol.residual_norm)}",
             f"orthogonality_defect = {_fmt(sol.orthogonality_defect)}",
             f"convergence_estimate = {_fmt(sol.convergence_estimate)}",
             f"||u0||^2/||alpha||^2 = {_fmt(sol.norm_ratio)}  (C = {_fmt(sol.constant)}, "
             f"bound {'ok' if sol.bound_ok else 'VIOLATED'})"]
    lines += [f"note: {n}" for n in sol.notes]
    _emit(args, {"coeffs": [str(c) for c in coeffs], "alpha": str(alpha), **sol.to_json()}, lines)
    return 0 if sol.bound_ok else 1


# examples --------------------------------------------------------------------

def cmd_examples(args) -> int:
    payload, lines = {"unit": "pi^2", "families": {}}, []
    for name, text in EXAMPLE_FAMILIES.items():
        p1, p2 = _pair(text)
        verdicts = estimates.check_conditions_dim2(p1, p2)
        hits = estimates.scan_counterexample(p1, p2, args.max_degree)
        payload["families"][name] = {"family": text,
                                     "verdicts": [v.to_json() for v in verdicts],
                                     "scan_max_degree": args.max_degree,
                                     "negative_hits": len(hits)}
        lines.append(f"({name}) {text}")
        for v in verdicts:
            lines += ["  " + s for s in _verdict_lines(v)]
        lines.append(f"  scan up to degree {args.max_degree}: {len(hits)} negative value(s)")
    F = OperatorFamily.from_dsl(EXAMPLE_FAMILIES["d"])
    rows = []
    lines.append("(d) u = z2^k dz1 - z2^(k-1) dz2:")
    for k in (8, 9, 10):
        u = _parse_form(f"z2^{k}; -z2^{k - 1}", 2, 1)
        q = estimates.quadratic_form(F, u).value
        rows.append({"k": k, "q": _scalar(q)})
        lines.append(f"  k={k}: Q = {q} (pi^2)")
    payload["example_d_forms"] = rows
    _emit(args, payload, lines)
    return 0


# parser ----------------------------------------------------------------------

def _common(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False),
                        help="emit JSON instead of a table")
    parser.add_argument("--seed", type=int, default=d(DEFAULT_SEED))
    parser.add_argument("--trials", type=int, default=d(DEFAULT_TRIALS))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fockweyl", description=__doc__.splitlines()[0])
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="apply an operator to a polynomial")
    p.add_argument("expr")
    p.add_argument("operand")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="verify an identity exactly")
    p.add_argument("identity", help=", ".join(IDENTITIES))
    p.add_argument("--random", type=int, metavar="TRIALS")
    p.add_argument("--family", help="semicolon-separated operators, e.g. 'd1*d2; d1^2+d2^2'")
    p.add_argument("--form", help="semicolon-separated components in increasing-index order")
    p.add_argument("--form-v", help="second form for the duality check")
    p.add_argument("--form-file", help="form in JSON")
    p.add_argument("--degree", type=int, default=1, help="form degree p (default 1)")
    p.add_argument("--coeffs", help="a0,a1,...,am for comm11")
    p.add_argument("--poly", help="polynomial u in z1 for comm11")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("conditions", help="check the two-variable coercivity conditions")
    p.add_argument("family")
    p.set_defaults(func=cmd_conditions)

    p = sub.add_parser("scan", help="search monomial forms with negative quadratic form")
    p.add_argument("family")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--grid", choices=("units", "rational"), default="units")
    p.add_argument("--limit", type=int, default=20, help="table rows to show")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("solve", help="canonical solution of Du = alpha in one variable")
    p.add_argument("--coeffs", required=True, help="a0,a1,...,am")
    p.add_argument("--alpha", required=True, help="polynomial in z1")
    p.add_argument("--cutoff", type=int, default=16)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("examples", help="run the four two-variable example families")
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(func=cmd_examples)

    for sp in sub.choices.values():
        _common(sp, suppress=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DSLSyntaxError, DimensionError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if args.json:
            print(json.dumps(err, indent=2))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
