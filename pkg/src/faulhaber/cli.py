"""Command-line front end.

Subcommands:

    coeffs     print a coefficient row (plain, json, or latex)
    eval       evaluate the power sum f_p(n) exactly via the coefficients
    verify     cross-check all computation paths, op counts, and identities
    bench      measured vs predicted operation counts on a geometric schedule
    bernoulli  print a Bernoulli-number table in either sign convention

Results go to stdout, diagnostics to stderr.  Exit statuses are a stable
scripting contract: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bernoulli import (
    bernoulli_numbers,
    check_difference_identity,
    check_integral_identity,
    check_power_sum_identity,
    faulhaber_via_bernoulli,
)
from .direct import CoefficientRow, direct_coefficients
from .integration import integration_coefficients
from .oracle import evaluate_row, power_sum_bruteforce
from .rationals import OpCounter, Rational, format_rational

__all__ = [
    "METHODS",
    "format_plain",
    "format_json",
    "format_latex",
    "Mismatch",
    "VerifyReport",
    "run_verification",
    "bench_schedule",
    "main",
]

# Coefficient paths selectable with --method.  verify compares every pair;
# tests inject faults by swapping an entry.
METHODS: dict[str, Callable[[int], CoefficientRow]] = {
    "direct": direct_coefficients,
    "lemma": integration_coefficients,
    "bernoulli": faulhaber_via_bernoulli,
}

# Anything above this is almost certainly an accidental runaway job, but it
# is allowed: the guard only warns.
SOFT_DEGREE_LIMIT = 10000

# Fixed default ranges for the identity checks run by `verify`.
POWER_SUM_IDENTITY_RANGE = (range(1, 31), range(1, 21))  # p, n
INTEGRAL_IDENTITY_INDICES = range(0, 31)
INTEGRAL_IDENTITY_ENDPOINTS = (
    Fraction(0),
    Fraction(1),
    Fraction(1, 2),
    Fraction(-1),
    Fraction(2),
)
DIFFERENCE_IDENTITY_RANGE = (range(2, 31), range(0, 21))  # i, n


def predicted_additions(p: int) -> int:
    return p * (p + 1) // 2 + p


def predicted_multiplications(p: int) -> int:
    return p * (p + 1) // 2


# ---------------------------------------------------------------------------
# Output formats


def format_plain(row: CoefficientRow) -> str:
    return " ".join(
        f"a_{j}={format_rational(c)}" for j, c in enumerate(row.coefficients, start=1)
    )


def format_json(row: CoefficientRow) -> str:
    # Rationals travel as strings so no JSON consumer can lose exactness.
    payload = {
        "p": row.degree,
        "coefficients": [format_rational(c) for c in row.coefficients],
    }
    return json.dumps(payload, separators=(",", ":"))


def _latex_magnitude(value: Rational) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return rf"\frac{{{value.numerator}}}{{{value.denominator}}}"


def format_latex(row: CoefficientRow) -> str:
    """Render descending by power, omitting zero terms and unit coefficients."""
    parts: list[tuple[str, str]] = []
    for power in range(row.degree + 1, 0, -1):
        c = row.coefficient(power)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        variable = "n" if power == 1 else f"n^{{{power}}}"
        body = variable if magnitude == 1 else _latex_magnitude(magnitude) + variable
        parts.append((sign, body))
    rendered = []
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            rendered.append(body if sign == "+" else "-" + body)
        else:
            rendered.append(sign + body)
    return "".join(rendered)


FORMATTERS: dict[str, Callable[[CoefficientRow], str]] = {
    "plain": format_plain,
    "json": format_json,
    "latex": format_latex,
}


# ---------------------------------------------------------------------------
# Cross-verification


@dataclass(frozen=True)
class Mismatch:
    """First point of disagreement between two paths at one degree."""

    p: int
    pair: str
    power: int  # 1-based power j whose coefficient a_j differs first


@dataclass
class VerifyReport:
    p_max: int
    paths_compared: tuple[str, ...]
    mismatches: tuple[Mismatch, ...]
    op_count_ok: tuple[bool, ...]  # indexed by p = 0..p_max
    identity_tallies: dict[str, tuple[int, int]]  # label -> (checked, failed)

    @property
    def passed(self) -> bool:
        return (
            not self.mismatches
            and all(self.op_count_ok)
            and all(failed == 0 for _, failed in self.identity_tallies.values())
        )

    def render(self) -> str:
        lines = ["cross-verification report"]
        lines.append(f"  degrees:      p = 0..{self.p_max}")
        lines.append(f"  paths:        {', '.join(self.paths_compared)}")
        pairs = len(self.paths_compared) * (len(self.paths_compared) - 1) // 2
        if self.mismatches:
            lines.append(f"  row equality: {len(self.mismatches)} mismatch(es)")
            for m in self.mismatches:
                lines.append(
                    f"    p={m.p} {m.pair}: coefficients differ first at a_{m.power}"
                )
        else:
            lines.append(
                f"  row equality: OK ({self.p_max + 1} degrees, {pairs} path pairs)"
            )
        bad_counts = [p for p, ok in enumerate(self.op_count_ok) if not ok]
        if bad_counts:
            lines.append(
                "  op counts:    FAIL at p = "
                + ", ".join(str(p) for p in bad_counts)
            )
        else:
            lines.append(
                "  op counts:    OK (additions p(p+1)/2 + p, "
                "multiplications p(p+1)/2)"
            )
        for label, (checked, failed) in self.identity_tallies.items():
            status = "OK" if failed == 0 else "FAIL"
            lines.append(f"  {label + ':':<22}{status} ({checked} checked, {failed} failed)")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _first_difference(a: CoefficientRow, b: CoefficientRow) -> int | None:
    """1-based power of the first differing coefficient, or None if equal."""
    for j, (ca, cb) in enumerate(zip(a.coefficients, b.coefficients), start=1):
        if ca != cb:
            return j
    if len(a.coefficients) != len(b.coefficients):
        return min(len(a.coefficients), len(b.coefficients)) + 1
    return None


def _check_degree(
    p: int, methods: dict[str, Callable[[int], CoefficientRow]]
) -> tuple[list[Mismatch], bool]:
    rows = {name: fn(p) for name, fn in methods.items()}
    mismatches = []
    for name_a, name_b in itertools.combinations(rows, 2):
        power = _first_difference(rows[name_a], rows[name_b])
        if power is not None:
            mismatches.append(Mismatch(p, f"{name_a} vs {name_b}", power))
    counter = OpCounter()
    direct_coefficients(p, counter)
    counts_ok = (
        counter.additions == predicted_additions(p)
        and counter.multiplications == predicted_multiplications(p)
    )
    return mismatches, counts_ok


def _identity_tallies() -> dict[str, tuple[int, int]]:
    checked = failed = 0
    p_range, n_range = POWER_SUM_IDENTITY_RANGE
    for p in p_range:
        for n in n_range:
            checked += 1
            failed += not check_power_sum_identity(p, n)
    tallies = {"power-sum identity": (checked, failed)}

    checked = failed = 0
    for i in INTEGRAL_IDENTITY_INDICES:
        for a in INTEGRAL_IDENTITY_ENDPOINTS:
            for b in INTEGRAL_IDENTITY_ENDPOINTS:
                checked += 1
                failed += not check_integral_identity(i, a, b)
    tallies["integral identity"] = (checked, failed)

    checked = failed = 0
    i_range, n_range = DIFFERENCE_IDENTITY_RANGE
    for i in i_range:
        for n in n_range:
            checked += 1
            failed += not check_difference_identity(i, n)
    tallies["difference identity"] = (checked, failed)
    return tallies


def run_verification(
    p_max: int,
    jobs: int = 1,
    methods: dict[str, Callable[[int], CoefficientRow]] | None = None,
) -> VerifyReport:
    """Compare every path pair for p = 0..p_max, check op counts against the
    quadratic formulas, and run the identity checks over their default
    ranges.

    Degrees are independent, so with jobs > 1 they are fanned out across a
    thread pool; results merge in degree order either way.
    """
    if p_max < 0:
        raise ValueError(f"p_max must be >= 0, got {p_max}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if methods is None:
        methods = dict(METHODS)

    degrees = range(p_max + 1)
    if jobs == 1:
        per_degree = [_check_degree(p, methods) for p in degrees]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_degree = list(pool.map(lambda p: _check_degree(p, methods), degrees))

    mismatches = tuple(m for found, _ in per_degree for m in found)
    op_count_ok = tuple(ok for _, ok in per_degree)
    return VerifyReport(
        p_max=p_max,
        paths_compared=tuple(methods),
        mismatches=mismatches,
        op_count_ok=op_count_ok,
        identity_tallies=_identity_tallies(),
    )


# ---------------------------------------------------------------------------
# Benchmark


def bench_schedule(p_max: int) -> list[int]:
    """0, then powers of two, then p_max itself."""
    points = [0]
    step = 1
    while step < p_max:
        points.append(step)
        step *= 2
    if p_max > 0:
        points.append(p_max)
    return points


# ---------------------------------------------------------------------------
# Argument parsing and handlers


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {value}")
    return value


def _warn_if_huge(p: int) -> None:
    if p > SOFT_DEGREE_LIMIT:
        print(
            f"warning: p = {p} is above {SOFT_DEGREE_LIMIT}; "
            "this may take a very long time",
            file=sys.stderr,
        )


def _cmd_coeffs(args: argparse.Namespace) -> int:
    _warn_if_huge(args.p)
    row = METHODS[args.method](args.p)
    print(FORMATTERS[args.format](row))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    _warn_if_huge(args.p)
    value = evaluate_row(METHODS["direct"](args.p), args.n)
    if value.denominator != 1:
        print(
            f"error: coefficient evaluation produced the non-integer {value}",
            file=sys.stderr,
        )
        return 1
    if args.check and value != power_sum_bruteforce(args.p, args.n):
        print(
            f"error: coefficient value {value} disagrees with the brute-force sum",
            file=sys.stderr,
        )
        return 1
    print(value.numerator)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    _warn_if_huge(args.p_max)
    report = run_verification(args.p_max, jobs=args.jobs)
    print(report.render())
    return 0 if report.passed else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    _warn_if_huge(args.p_max)
    header = (
        f"{'p':>6} {'additions':>12} {'multiplications':>16} "
        f"{'predicted_add':>14} {'predicted_mul':>14} {'seconds':>10}"
    )
    print(header)
    all_match = True
    for p in bench_schedule(args.p_max):
        counter = OpCounter()
        start = time.perf_counter()
        direct_coefficients(p, counter)
        elapsed = time.perf_counter() - start
        expected_add = predicted_additions(p)
        expected_mul = predicted_multiplications(p)
        all_match &= (
            counter.additions == expected_add
            and counter.multiplications == expected_mul
        )
        print(
            f"{p:>6} {counter.additions:>12} {counter.multiplications:>16} "
            f"{expected_add:>14} {expected_mul:>14} {elapsed:>10.6f}"
        )
    if not all_match:
        print("error: measured operation counts deviate from the formulas",
              file=sys.stderr)
        return 1
    return 0


def _cmd_bernoulli(args: argparse.Namespace) -> int:
    table = bernoulli_numbers(args.m)
    values = table.values_plus if args.convention == "plus" else table.values_minus
    for i, value in enumerate(values):
        print(f"{i}: {format_rational(value)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faulhaber",
        description="Exact Faulhaber-formula coefficients, three ways, cross-verified.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("coeffs", help="print the coefficient row for exponent p")
    coeffs.add_argument("p", type=_natural, help="power-sum exponent, >= 0")
    coeffs.add_argument(
        "--method", choices=sorted(METHODS), default="direct",
        help="computation path (default: direct)",
    )
    coeffs.add_argument(
        "--format", choices=sorted(FORMATTERS), default="plain",
        help="output format (default: plain)",
    )
    coeffs.set_defaults(handler=_cmd_coeffs)

    evaluate = sub.add_parser("eval", help="evaluate 1^p + ... + n^p exactly")
    evaluate.add_argument("p", type=_natural, help="power-sum exponent, >= 0")
    evaluate.add_argument("n", type=_positive, help="upper summation limit, >= 1")
    evaluate.add_argument(
        "--check", action="store_true",
        help="cross-check the result against the brute-force sum",
    )
    evaluate.set_defaults(handler=_cmd_eval)

    verify = sub.add_parser(
        "verify", help="cross-check all paths, op counts, and identities"
    )
    verify.add_argument("p_max", type=_natural, help="highest exponent to compare")
    verify.add_argument(
        "--jobs", type=_positive, default=1,
        help="worker threads for the per-degree comparisons (default: 1)",
    )
    verify.set_defaults(handler=_cmd_verify)

    bench = sub.add_parser(
        "bench", help="measured vs predicted operation counts up to p_max"
    )
    bench.add_argument("p_max", type=_natural, help="highest exponent to benchmark")
    bench.set_defaults(handler=_cmd_bench)

    bernoulli = sub.add_parser("bernoulli", help="print Bernoulli numbers b_0..b_m")
    bernoulli.add_argument("m", type=_natural, help="highest index, >= 0")
    bernoulli.add_argument(
        "--convention", choices=("plus", "minus"), default="plus",
        help="sign convention for b_1 (default: plus)",
    )
    bernoulli.set_defaults(handler=_cmd_bernoulli)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
