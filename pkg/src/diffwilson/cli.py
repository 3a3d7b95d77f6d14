"""Command-line surface for the identity and congruence checks.

Usage:
    diffwilson identity --n 3 --x 7
    diffwilson identity --n 5 --trials 10 --seed 42 --symbolic
    diffwilson lower-power --n 3 --j 1 --x 2
    diffwilson wilson 97
    diffwilson wilson-range 2 100
    diffwilson congruence binom 5
    diffwilson difftable --degree 2 --points 5

Every subcommand accepts --json; range sweeps stream line-delimited JSON,
one object per n, in ascending order.  Numeric parameters are exact
integers or num/den rationals; floating-point literals are rejected.
Integers serialize as decimal strings and rationals as "num/den" strings,
so values survive any JSON consumer losslessly.

Exit codes: 0 all checks hold; 1 a mathematically guaranteed identity
failed, which signals an implementation bug, never a usage problem;
2 usage error.  (A "status": "error" payload value is reserved; usage
errors are reported on stderr instead.)
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from .exact import factorial, format_poly, format_rational, parse_rational, poly_const
from .identity import (
    difference_table,
    sample_rationals,
    symbolic_difference_poly,
    symbolic_lower_power_poly,
    verify_difference_sum,
    verify_lower_power_sum,
)
from .modular import (
    alternating_power_sum_at_zero,
    binomial_row_mod,
    fermat_check,
    identity_at_zero_mod,
    power_sum_mod,
    wilson_test,
)

SCHEMA_VERSION = "1"
DEFAULT_TRIALS = 10
DEFAULT_MAX_WILSON = 10**7


class UsageError(Exception):
    """Bad request parameters; reported on stderr with exit code 2."""


def rational(text: str) -> Fraction:
    """argparse converter for exact 'num/den' or integer literals."""
    return parse_rational(text)


def _b(value: bool) -> str:
    return "true" if value else "false"


def _status(holds: bool) -> str:
    return "holds" if holds else "violated"


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _pick_points(args: argparse.Namespace, params: dict) -> list[Fraction]:
    """Single --x point, or --trials seeded random rationals with the seed echoed."""
    if args.x is not None:
        params["x"] = format_rational(args.x)
        return [args.x]
    if args.trials < 1:
        raise UsageError(f"--trials must be at least 1, got {args.trials}")
    seed = args.seed
    if seed is None:
        seed = random.SystemRandom().randrange(2**64)
    elif not 0 <= seed < 2**64:
        raise UsageError("--seed must fit in an unsigned 64-bit integer")
    params["trials"] = str(args.trials)
    params["seed"] = str(seed)
    return sample_rationals(random.Random(seed), args.trials)


def _cmd_identity(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError(f"--n must be non-negative, got {args.n}")
    params = {"n": str(args.n)}
    points = _pick_points(args, params)
    results = [verify_difference_sum(args.n, x) for x in points]
    holds = all(r.holds for r in results)

    payload = {"schema_version": SCHEMA_VERSION, "check": "identity", "params": params}
    payload["results"] = [
        {
            "x": format_rational(r.x),
            "lhs": format_rational(r.lhs),
            "rhs": format_rational(r.rhs),
            "holds": r.holds,
        }
        for r in results
    ]
    if len(results) == 1:
        payload["lhs"] = format_rational(results[0].lhs)
    payload["rhs"] = format_rational(results[0].rhs)

    header = f"identity n={args.n}"
    if "seed" in params:
        header += f" trials={params['trials']} seed={params['seed']}"
    lines = [header]
    lines += [
        f"x={format_rational(r.x)}: lhs={format_rational(r.lhs)}"
        f" rhs={format_rational(r.rhs)} holds={_b(r.holds)}"
        for r in results
    ]

    if args.symbolic:
        poly = symbolic_difference_poly(args.n)
        sym_holds = poly == poly_const(factorial(args.n))
        holds = holds and sym_holds
        payload["symbolic"] = {"coefficients": format_poly(poly), "holds": sym_holds}
        lines.append(
            f"symbolic: coefficients=[{', '.join(format_poly(poly))}] holds={_b(sym_holds)}"
        )

    payload["holds"] = holds
    payload["status"] = _status(holds)
    lines.append(f"status: {_status(holds)}")
    _emit(args, payload, lines)
    return 0 if holds else 1


def _cmd_lower_power(args: argparse.Namespace) -> int:
    if args.n < 1 or not 1 <= args.j <= args.n:
        raise UsageError(f"need 1 <= j <= n, got j={args.j} with n={args.n}")
    params = {"n": str(args.n), "j": str(args.j)}
    points = _pick_points(args, params)
    results = [verify_lower_power_sum(args.n, args.j, x) for x in points]
    holds = all(r.holds for r in results)

    payload = {"schema_version": SCHEMA_VERSION, "check": "lower-power", "params": params}
    payload["results"] = [
        {
            "x": format_rational(r.x),
            "lhs": format_rational(r.lhs),
            "rhs": format_rational(r.rhs),
            "holds": r.holds,
        }
        for r in results
    ]
    if len(results) == 1:
        payload["lhs"] = format_rational(results[0].lhs)
    payload["rhs"] = format_rational(results[0].rhs)

    header = f"lower-power n={args.n} j={args.j}"
    if "seed" in params:
        header += f" trials={params['trials']} seed={params['seed']}"
    lines = [header]
    lines += [
        f"x={format_rational(r.x)}: lhs={format_rational(r.lhs)}"
        f" rhs={format_rational(r.rhs)} holds={_b(r.holds)}"
        for r in results
    ]

    if args.symbolic:
        poly = symbolic_lower_power_poly(args.n, args.j)
        sym_holds = poly == ()
        holds = holds and sym_holds
        payload["symbolic"] = {"coefficients": format_poly(poly), "holds": sym_holds}
        lines.append(
            f"symbolic: coefficients=[{', '.join(format_poly(poly))}] holds={_b(sym_holds)}"
        )

    payload["holds"] = holds
    payload["status"] = _status(holds)
    lines.append(f"status: {_status(holds)}")
    _emit(args, payload, lines)
    return 0 if holds else 1


def _check_wilson_bound(n: int, bound: int) -> None:
    if n > bound:
        raise UsageError(
            f"n={n} exceeds --max-wilson={bound}: the factorial residue costs O(n)"
            " multiplications; raise the bound explicitly if you mean it"
        )


def _cmd_wilson(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise UsageError(f"n must be at least 2, got {args.n}")
    _check_wilson_bound(args.n, args.max_wilson)
    v = wilson_test(args.n)
    holds = v.oracle_agrees
    payload = {
        "schema_version": SCHEMA_VERSION,
        "check": "wilson",
        "params": {"n": str(args.n)},
        "n": str(v.n),
        "residue": str(v.wilson_residue),
        "is_prime": v.is_prime,
        "oracle_agrees": v.oracle_agrees,
        "holds": holds,
        "status": _status(holds),
    }
    lines = [
        f"wilson n={v.n}: residue={v.wilson_residue}"
        f" is_prime={_b(v.is_prime)} oracle_agrees={_b(v.oracle_agrees)}",
        f"status: {_status(holds)}",
    ]
    _emit(args, payload, lines)
    return 0 if holds else 1


def _cmd_wilson_range(args: argparse.Namespace) -> int:
    lo, hi = args.lo, args.hi
    if lo < 2:
        raise UsageError(f"range must start at 2 or above, got {lo}")
    if hi < lo:
        raise UsageError(f"empty range: {lo}..{hi}")
    _check_wilson_bound(hi, args.max_wilson)
    primes = 0
    all_agree = True
    for n in range(lo, hi + 1):
        v = wilson_test(n)
        primes += v.is_prime
        all_agree = all_agree and v.oracle_agrees
        if args.json:
            print(
                json.dumps(
                    {
                        "schema_version": SCHEMA_VERSION,
                        "check": "wilson",
                        "n": str(v.n),
                        "residue": str(v.wilson_residue),
                        "is_prime": v.is_prime,
                        "oracle_agrees": v.oracle_agrees,
                    }
                )
            )
        else:
            print(
                f"n={v.n}: residue={v.wilson_residue}"
                f" is_prime={_b(v.is_prime)} oracle_agrees={_b(v.oracle_agrees)}"
            )
    if not args.json:
        print(
            f"primes={primes} composites={hi - lo + 1 - primes}"
            f" oracle_agrees={'all' if all_agree else 'MISMATCH'}"
        )
        print(f"status: {_status(all_agree)}")
    return 0 if all_agree else 1


_CONGRUENCE_KINDS = {
    "binom": binomial_row_mod,
    "fermat": fermat_check,
    "power-sum": power_sum_mod,
    "eq1": identity_at_zero_mod,
}


def _cmd_congruence(args: argparse.Namespace) -> int:
    p = args.p
    if p < 2:
        raise UsageError(f"p must be at least 2, got {p}")
    try:
        report = _CONGRUENCE_KINDS[args.kind](p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    holds = report.holds

    payload = {
        "schema_version": SCHEMA_VERSION,
        "check": f"congruence-{args.kind}",
        "params": {"kind": args.kind, "p": str(p)},
        "modulus": str(report.modulus),
    }
    lines = [f"congruence {args.kind} p={p} modulus={report.modulus}"]

    if args.kind == "eq1":
        exact_lhs = alternating_power_sum_at_zero(p)
        exact_expected = factorial(p - 1)
        payload["exact_lhs"] = str(exact_lhs)
        payload["exact_expected"] = str(exact_expected)
        payload["exact_equal"] = exact_lhs == exact_expected
        lines.append(
            f"exact: lhs={exact_lhs} expected={exact_expected}"
            f" equal={_b(exact_lhs == exact_expected)}"
        )

    payload["entries"] = [
        {"index": str(e.index), "residue": str(e.residue), "expected": str(e.expected)}
        for e in report.entries
    ]
    payload["holds"] = holds
    payload["status"] = _status(holds)
    lines += [
        f"i={e.index}: residue={e.residue} expected={e.expected}" for e in report.entries
    ]
    lines.append(f"status: {_status(holds)}")
    _emit(args, payload, lines)
    return 0 if holds else 1


def _cmd_difftable(args: argparse.Namespace) -> int:
    degree, points = args.degree, args.points
    if degree < 0:
        raise UsageError(f"--degree must be non-negative, got {degree}")
    if points <= degree:
        raise UsageError(
            f"--points must be at least degree+1, got points={points} for degree={degree}"
        )
    cols = difference_table(degree, points)
    expected = factorial(degree)
    holds = all(v == expected for v in cols[degree])

    payload = {
        "schema_version": SCHEMA_VERSION,
        "check": "difftable",
        "params": {"degree": str(degree), "points": str(points)},
        "columns": [[str(v) for v in col] for col in cols],
        "constant_column": str(degree),
        "constant_value": str(expected),
        "holds": holds,
        "status": _status(holds),
    }
    lines = [f"difftable degree={degree} points={points}"]
    for x in range(points):
        row = " ".join(str(cols[m][x - m]) for m in range(min(x, degree) + 1))
        lines.append(f"x={x}: {row}")
    lines.append(f"column {degree}: expected={expected} holds={_b(holds)}")
    lines.append(f"status: {_status(holds)}")
    _emit(args, payload, lines)
    return 0 if holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffwilson",
        description="Exact checks of alternating difference-sum identities"
        " and the Wilson congruence chain.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        metavar="U64",
        help="seed for randomized evaluation points (reproduces a run exactly)",
    )
    common.add_argument(
        "--trials",
        type=int,
        default=DEFAULT_TRIALS,
        metavar="K",
        help=f"randomized points when --x is omitted (default {DEFAULT_TRIALS})",
    )
    common.add_argument(
        "--max-wilson",
        type=int,
        default=DEFAULT_MAX_WILSON,
        metavar="BOUND",
        dest="max_wilson",
        help=f"refuse wilson checks above this n (default {DEFAULT_MAX_WILSON})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "identity",
        parents=[common],
        help="alternating difference sum against the factorial constant",
    )
    p.add_argument("--n", type=int, required=True, help="sum order (non-negative)")
    p.add_argument(
        "--x",
        type=rational,
        default=None,
        help="exact evaluation point, integer or num/den; omitted -> seeded random points",
    )
    p.add_argument(
        "--symbolic", action="store_true", help="also check the symbolic collapse"
    )
    p.set_defaults(handler=_cmd_identity)

    p = sub.add_parser(
        "lower-power",
        parents=[common],
        help="lowered-exponent alternating sum against zero",
    )
    p.add_argument("--n", type=int, required=True, help="sum order (positive)")
    p.add_argument("--j", type=int, required=True, help="exponent drop, 1 <= j <= n")
    p.add_argument("--x", type=rational, default=None, help="exact evaluation point")
    p.add_argument(
        "--symbolic", action="store_true", help="also check the symbolic collapse"
    )
    p.set_defaults(handler=_cmd_lower_power)

    p = sub.add_parser(
        "wilson", parents=[common], help="factorial-residue primality verdict for one n"
    )
    p.add_argument("n", type=int, help="integer to test, n >= 2")
    p.set_defaults(handler=_cmd_wilson)

    p = sub.add_parser(
        "wilson-range",
        parents=[common],
        help="stream factorial-residue verdicts for lo..hi inclusive",
    )
    p.add_argument("lo", type=int, help="first n (>= 2)")
    p.add_argument("hi", type=int, help="last n (inclusive)")
    p.set_defaults(handler=_cmd_wilson_range)

    p = sub.add_parser(
        "congruence", parents=[common], help="per-index congruence report mod a prime"
    )
    p.add_argument(
        "kind",
        choices=sorted(_CONGRUENCE_KINDS),
        help="binom: binomial row vs alternating pattern; fermat: (p-1)-th powers;"
        " power-sum: power sum vs factorial; eq1: the identity at x=0 reduced mod p",
    )
    p.add_argument("p", type=int, help="prime modulus (odd for power-sum and eq1)")
    p.set_defaults(handler=_cmd_congruence)

    p = sub.add_parser(
        "difftable",
        parents=[common],
        help="difference table of x**degree with its constant column",
    )
    p.add_argument("--degree", type=int, required=True, help="monomial degree")
    p.add_argument(
        "--points", type=int, required=True, help="sample count, at least degree+1"
    )
    p.set_defaults(handler=_cmd_difftable)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
