"""Command-line front end.

Polynomials are printed as coefficient lists in ascending order (c_0 first);
rationals as "p" or "p/q".  Exit status: 0 success, 1 computation or
verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd, prod

from . import __version__
from .algebra import Poly
from .counting import (
    DEFAULT_MAX_ITERATIONS,
    HPolytopeSpec,
    SimplexSpec,
    count_closed_simplex,
    count_denumerant,
    count_hpolytope,
    count_open_simplex,
)
from .dedekind import (
    dedekind_direct,
    dedekind_fast,
    dedekind_reciprocity_rhs,
    dedekind_root_identity,
)
from .ehrhart import (
    codim2_closed_form,
    coefficient_via_g,
    ehrhart_closed_residue,
    ehrhart_interpolated,
    hpolytope_count_series,
    lemma4_residue_at_zero,
)
from .errors import BudgetExceeded, IdentityViolation, PreconditionError

SUITES = ("oracle", "reciprocity", "lemma4", "theorem7", "theorem8", "dedekind-identities")
MAX_VOLUME = 2000


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return vals


def _matrix(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_int_list(row) for row in text.split(";") if row.strip())


def _coeffs(p: Poly) -> list[str]:
    return [str(Fraction(c)) for c in p.coeffs] or ["0"]


# --------------------------------------------------------------------------
# output


def _emit(fmt: str, plain_lines: list[str], payload: dict, rows: list[list]) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return "".join(line + "\n" for line in plain_lines)


# --------------------------------------------------------------------------
# commands


def cmd_ehrhart(args) -> tuple[str, int]:
    s = SimplexSpec(args.legs)
    ep, br = ehrhart_closed_residue(s, check_rationality=not args.no_check)
    roots = {str(d): _coeffs(p) for d, p in sorted(br.at_roots.items())}
    payload = {
        "a": list(s.a),
        "closed": _coeffs(ep.closed),
        "open": _coeffs(ep.open),
        "residue_at_one": _coeffs(br.at_one),
        "roots": roots,
    }
    plain = [
        f"a: {' '.join(map(str, s.a))}",
        f"closed: {' '.join(payload['closed'])}",
        f"open: {' '.join(payload['open'])}",
        f"residue_at_one: {' '.join(payload['residue_at_one'])}",
    ] + [f"root d={d}: {' '.join(c)}" for d, c in roots.items()]
    rows = [["part", "coefficients (ascending)"]]
    rows += [[k, *payload[k]] for k in ("closed", "open", "residue_at_one")]
    rows += [[f"root_{d}", *c] for d, c in roots.items()]
    return _emit(args.format, plain, payload, rows), 0


def cmd_count(args) -> tuple[str, int]:
    s = SimplexSpec(args.legs)
    if args.method == "denumerant":
        if args.open:
            raise PreconditionError("the denumerant method counts the closed simplex only")
        value = count_denumerant(s, args.t)
    elif args.open:
        value = count_open_simplex(s, args.t)
    else:
        value = count_closed_simplex(s, args.t)
    payload = {"a": list(s.a), "count": value, "method": args.method, "open": args.open, "t": args.t}
    rows = [["a", "t", "open", "method", "count"], [" ".join(map(str, s.a)), args.t, args.open, args.method, value]]
    return _emit(args.format, [str(value)], payload, rows), 0


def cmd_dedekind(args) -> tuple[str, int]:
    fn = {"fast": dedekind_fast, "direct": dedekind_direct, "roots": dedekind_root_identity}[args.method]
    value = str(fn(args.a, args.b))
    payload = {"a": args.a, "b": args.b, "method": args.method, "value": value}
    return _emit(args.format, [value], payload, [["a", "b", "method", "value"], [args.a, args.b, args.method, value]]), 0


def cmd_coeff(args) -> tuple[str, int]:
    s = SimplexSpec(args.legs)
    if args.method == "g":
        value = coefficient_via_g(s, args.m)
    elif args.method == "dedekind":
        if args.m != s.n - 2:
            raise PreconditionError(f"the codimension-two formula gives c_(n-2) = c_{s.n - 2} only, not c_{args.m}")
        value = codim2_closed_form(s)
    elif args.method == "interpolation":
        value = Fraction(ehrhart_interpolated(s)[args.m])
    else:
        value = Fraction(ehrhart_closed_residue(s)[0].closed[args.m])
    payload = {"a": list(s.a), "m": args.m, "method": args.method, "value": str(value)}
    rows = [["a", "m", "method", "value"], [" ".join(map(str, s.a)), args.m, args.method, str(value)]]
    return _emit(args.format, [str(value)], payload, rows), 0


def cmd_polytope(args) -> tuple[str, int]:
    h = HPolytopeSpec(args.rows)
    if args.pad:
        h = h.padded()
    results = {}
    if args.method in ("enum", "both"):
        results["enum"] = count_hpolytope(h, args.t)
    if args.method in ("series", "both"):
        results["series"] = hpolytope_count_series(h, args.t)
    status = 0
    if len(set(results.values())) > 1:
        status = 1
    payload = {"a": [list(r) for r in h.a], "counts": results, "t": args.t}
    plain = [str(v) for v in results.values()] if len(results) == 1 else [f"{k}: {v}" for k, v in results.items()]
    if status:
        plain.append("MISMATCH between enumeration and series extraction")
    rows = [["method", "t", "count"]] + [[k, args.t, v] for k, v in results.items()]
    return _emit(args.format, plain, payload, rows), status


# --------------------------------------------------------------------------
# verification suites


def _legs_family(max_n: int, max_a: int, max_volume: int = MAX_VOLUME):
    for n in range(1, max_n + 1):
        for a in itertools.combinations_with_replacement(range(1, max_a + 1), n):
            if prod(a) <= max_volume:
                yield a


def _coprime_family(max_n: int, max_a: int, max_volume: int = MAX_VOLUME):
    for n in range(3, max_n + 1):
        for a in itertools.combinations(range(2, max_a + 1), n):
            if prod(a) <= max_volume and all(gcd(x, y) == 1 for x, y in itertools.combinations(a, 2)):
                yield a


def _hpolytope_family(max_n: int, max_a: int, cases: int, seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(1000 * cases):
        if len(out) == cases:
            break
        n = rng.randint(1, max_n)
        q = rng.randint(1, max_n)
        rows = tuple(tuple(rng.randint(1, max_a) for _ in range(n)) for _ in range(q))
        if rows not in out:
            out.append(rows)
    return out


def _label(a) -> str:
    return "(" + ",".join(map(str, a)) + ")"


def _case_oracle(a):
    ep, _ = ehrhart_closed_residue(a)
    ref = ehrhart_interpolated(a)
    if ep.closed != ref:
        return False, f"residue {_coeffs(ep.closed)} != interpolated {_coeffs(ref)}"
    return True, ""


def _case_reciprocity(a):
    s = SimplexSpec(a)
    ep, _ = ehrhart_closed_residue(s)  # construction checks open(t) = (-1)^n closed(-t)
    for t in (1, 2, 3):
        if ep.open(t) != count_open_simplex(s, t):
            return False, f"open polynomial at t={t} disagrees with enumeration"
    return True, ""


def _case_lemma4(a, budget):
    s = SimplexSpec(a)
    closed = ehrhart_closed_residue(s)[0].closed
    for k in range(1, s.n + 1):
        for t in (1, 2, 3):
            lemma4_residue_at_zero(s, k, t, closed, budget)
        if coefficient_via_g(s, k) != closed[k]:
            return False, f"coefficient via g_{k} differs from c_{k}"
    return True, ""


def _case_theorem7(a):
    s = SimplexSpec(a)
    got = codim2_closed_form(s)
    ref = Fraction(ehrhart_interpolated(s)[s.n - 2])
    return got == ref, "" if got == ref else f"closed form {got} != interpolated {ref}"


def _case_theorem8(rows):
    h = HPolytopeSpec(rows)
    for t in (1, 2, 3):
        e, s = count_hpolytope(h, t), hpolytope_count_series(h, t)
        if e != s:
            return False, f"t={t}: enumeration {e} != series {s}"
    return True, ""


def _case_dedekind(ab):
    a, b = ab
    d = dedekind_direct(a, b)
    if dedekind_fast(a, b) != d:
        return False, "fast != direct"
    if dedekind_root_identity(a, b) != d:
        return False, "root identity != direct"
    if d + dedekind_direct(b, a) != dedekind_reciprocity_rhs(a, b):
        return False, "reciprocity law fails"
    return True, ""


_CASES = {
    "oracle": _case_oracle,
    "reciprocity": _case_reciprocity,
    "theorem7": _case_theorem7,
    "theorem8": _case_theorem8,
    "dedekind-identities": _case_dedekind,
}


def _run_case(task):
    suite, params, budget = task
    try:
        if suite == "lemma4":
            ok, detail = _case_lemma4(params, budget)
        else:
            ok, detail = _CASES[suite](params)
    except (IdentityViolation, PreconditionError, BudgetExceeded, AssertionError) as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return ok, detail


def _suite_params(args) -> list:
    if args.suite in ("oracle", "reciprocity", "lemma4"):
        return list(_legs_family(args.max_n, args.max_a))
    if args.suite == "theorem7":
        return list(_coprime_family(args.max_n, args.max_a))
    if args.suite == "theorem8":
        return _hpolytope_family(args.max_n, args.max_a, args.cases, args.seed)
    return [(a, b) for b in range(2, args.max_b + 1) for a in range(1, b) if gcd(a, b) == 1]


def _case_label(suite: str, params) -> str:
    if suite == "theorem8":
        return "a=" + ";".join(",".join(map(str, r)) for r in params)
    if suite == "dedekind-identities":
        return f"(a,b)=({params[0]},{params[1]})"
    return "a=" + _label(params)


def cmd_verify(args) -> tuple[str, int]:
    params = _suite_params(args)
    tasks = [(args.suite, p, args.budget) for p in params]
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(_run_case, tasks, chunksize=4))
    else:
        results = [_run_case(t) for t in tasks]
    passed = sum(ok for ok, _ in results)
    plain, cases, rows = [], [], [["suite", "case", "status", "detail"]]
    for p, (ok, detail) in zip(params, results):
        label = _case_label(args.suite, p)
        status = "PASS" if ok else "FAIL"
        plain.append(f"{status} {args.suite} {label}" + (f": {detail}" if detail else ""))
        cases.append({"case": label, "detail": detail, "status": status})
        rows.append([args.suite, label, status, detail])
    plain.append(f"{args.suite}: {passed}/{len(results)} passed")
    payload = {"cases": cases, "failed": len(results) - passed, "passed": passed, "suite": args.suite}
    return _emit(args.format, plain, payload, rows), 0 if passed == len(results) else 1


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_argument_group("output")
    g.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    g.add_argument("--json", dest="format", action="store_const", const="json", help="shorthand for --format json")
    g.add_argument("--csv", dest="format", action="store_const", const="csv", help="shorthand for --format csv")

    p = argparse.ArgumentParser(
        prog="ehrhart-residue",
        description="Exact Ehrhart polynomials via residues. Polynomial coefficients are listed "
        "in ascending order (c_0 first); rationals print as p or p/q.",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("ehrhart", parents=[fmt], help="closed/open Ehrhart polynomials and residue breakdown")
    sp.add_argument("--legs", type=_int_list, required=True, help="leg lengths a_1,...,a_n")
    sp.add_argument("--no-check", action="store_true", help="skip the explicit Galois-orbit rationality check")
    sp.set_defaults(func=cmd_ehrhart)

    sp = sub.add_parser("count", parents=[fmt], help="brute-force lattice-point count of the t-dilate")
    sp.add_argument("--legs", type=_int_list, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--open", action="store_true", help="count interior points")
    sp.add_argument("--method", choices=("enum", "denumerant"), default="enum")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("dedekind", parents=[fmt], help="Dedekind sum s(a, b)")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--method", choices=("fast", "direct", "roots"), default="fast")
    sp.set_defaults(func=cmd_dedekind)

    sp = sub.add_parser("coeff", parents=[fmt], help="a single Ehrhart coefficient c_m")
    sp.add_argument("--legs", type=_int_list, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--method", choices=("g", "dedekind", "interpolation", "residue"), default="g",
                    help="dedekind: closed form for c_(n-2) on pairwise coprime legs")
    sp.set_defaults(func=cmd_coeff)

    sp = sub.add_parser("polytope", parents=[fmt], help="lattice points of an H-polytope t-dilate")
    sp.add_argument("--rows", type=_matrix, required=True, help="rows a_j1,...,a_jn separated by ';'")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--method", choices=("enum", "series", "both"), default="both")
    sp.add_argument("--pad", action="store_true", help="add the redundant row x_1+...+x_n <= t*P_0")
    sp.set_defaults(func=cmd_polytope)

    sp = sub.add_parser("verify", parents=[fmt], help="run a verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--max-a", type=int, default=5)
    sp.add_argument("--max-b", type=int, default=30, help="dedekind-identities: largest b")
    sp.add_argument("--cases", type=int, default=12, help="theorem8: number of random H-polytopes")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--budget", type=int, default=DEFAULT_MAX_ITERATIONS,
                    help="lemma4: iteration budget of each brute-force count")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        text, status = args.func(args)
    except (PreconditionError, BudgetExceeded, IdentityViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out.write(text)
    return status


def main() -> None:
    sys.exit(run())
