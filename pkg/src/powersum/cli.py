"""Command-line interface: ``powersum {formula,eval,matrix,genfun,bench,selftest}``.

Exit codes: 0 success, 1 usage, 2 order cap exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from powersum import render
from powersum.closedform import (
    PowerSumFormula,
    eval_power_sum,
    faulhaber_via_bernoulli,
    naive_power_sum,
    power_sum_formula,
)
from powersum.config import ENV_MAX_ORDER, Settings
from powersum.errors import DomainError, IntegralityError, OrderCapError, PowerError
from powersum.genfun import power_genfun, prefix_genfun
from powersum.genmatrix import build_inv_matrix, build_perm_matrix, matrix_to_json
from powersum.selftest import run_all

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3
NAIVE_VERIFY_LIMIT = 10**6
METHODS = ("matrix-pipeline", "bernoulli", "naive-eval")


class UsageError(Exception):
    pass


class VerificationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _check_cap(t: int, settings: Settings) -> None:
    if t > settings.max_order_cap:
        raise OrderCapError(t, settings.max_order_cap)


def derive_formula(t: int, settings: Settings) -> PowerSumFormula:
    if t < 0:
        raise UsageError("power must be >= 0")
    if t == 0:
        # sum of k^0 for k = 1..n; outside the matrix pipeline
        return PowerSumFormula(0, (Fraction(0), Fraction(1)))
    _check_cap(t, settings)
    return power_sum_formula(t, build_inv_matrix(t, max_order=settings.max_order_cap))


def cmd_formula(t: int, fmt: str, settings: Settings) -> str:
    f = derive_formula(t, settings)
    if fmt == "json":
        return dump_json(f.to_json())
    return render.formula_text(f.polynomial, latex=fmt == "latex")


def cmd_eval(t: int, n: int, verify: bool, fmt: str, settings: Settings) -> str:
    if n < 0:
        raise UsageError("n must be >= 0")
    value = eval_power_sum(derive_formula(t, settings), n)
    status = None
    if verify:
        if n <= NAIVE_VERIFY_LIMIT:
            status = "match" if naive_power_sum(t, n) == value else "mismatch"
        else:
            status = "skipped"
    if fmt == "json":
        obj = {"power": t, "n": str(n), "value": str(value)}
        if status:
            obj["verify"] = status
        out = dump_json(obj)
    else:
        out = str(value)
        if status:
            out += f"\nverify: {status}"
    if status == "mismatch":
        raise VerificationError(out)
    return out


def cmd_matrix(n: int, inverse: bool, fmt: str, settings: Settings) -> str:
    if n < 1:
        raise UsageError("matrix order must be >= 1")
    build = build_inv_matrix if inverse else build_perm_matrix
    m = build(n, max_order=settings.max_order_cap)
    if fmt == "json":
        return dump_json(matrix_to_json(m))
    if fmt == "latex":
        return render.matrix_latex(m.dense())
    return render.matrix_text(m.dense())


def cmd_genfun(t: int, fmt: str, settings: Settings) -> str:
    if t < 1:
        raise UsageError("genfun needs a power >= 1")
    _check_cap(t, settings)
    g = power_genfun(t, build_inv_matrix(t, max_order=settings.max_order_cap))
    s = prefix_genfun(g)
    if fmt == "json":
        return dump_json({"power": t, "terms": g.to_json(), "prefix_sum": s.to_json()})
    latex = fmt == "latex"
    lhs_terms, lhs_sums = (f"G\\{{k^{{{t}}}\\}}", f"G\\{{S_{{{t}}}\\}}") if latex else (f"G{{k^{t}}}", f"G{{S_{t}}}")
    return "\n".join([
        f"{lhs_terms} = {render.genfun_text(g.numerator, g.pole_order, latex)}",
        f"{lhs_sums} = {render.genfun_text(s.numerator, s.pole_order, latex)}",
    ])


def digest(value: int) -> Dict[str, object]:
    digits = str(abs(value))
    return {"head": digits[:8], "tail": digits[-8:], "digits": len(digits)}


def _bench_runners(t: int, n: int, settings: Settings) -> Dict[str, Callable[[], int]]:
    return {
        "matrix-pipeline": lambda: eval_power_sum(derive_formula(t, settings), n),
        "bernoulli": lambda: eval_power_sum(faulhaber_via_bernoulli(t), n),
        "naive-eval": lambda: naive_power_sum(t, n),
    }


def cmd_bench(t: int, n: int, methods: Sequence[str], repeats: int, settings: Settings) -> str:
    if repeats < 1:
        raise UsageError("repeats must be >= 1")
    if t < 1 or n < 0:
        raise UsageError("bench needs t >= 1 and n >= 0")
    unknown = [m for m in methods if m not in METHODS]
    if unknown or not methods:
        raise UsageError(f"unknown method(s) {unknown}; choose from {', '.join(METHODS)}")
    _check_cap(t, settings)
    runners = _bench_runners(t, n, settings)
    reports, values = [], []
    for method in methods:
        samples = []
        for _ in range(repeats):
            start = time.perf_counter_ns()
            value = runners[method]()
            samples.append(time.perf_counter_ns() - start)
        values.append(value)
        reports.append({
            "method": method,
            "power": t,
            "n": str(n),
            "digest": digest(value),
            "timing": {"median_ns": int(statistics.median(samples)), "repeats": repeats},
        })
    out = dump_json(reports)
    if any(v != values[0] for v in values):
        raise VerificationError(out)
    return out


def cmd_selftest(max_power: int) -> str:
    if max_power < 1:
        raise UsageError("max-power must be >= 1")
    results = run_all(max_power)
    lines = []
    for name, ok, detail in results:
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
    failed = sum(not ok for _, ok, _ in results)
    lines.append(f"selftest max-power={max_power}: {len(results) - failed} passed, {failed} failed")
    out = "\n".join(lines)
    if failed:
        raise VerificationError(out)
    return out


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument(
        "--max-order-cap",
        type=int,
        default=settings.max_order_cap,
        help=f"largest matrix order allowed (env: {ENV_MAX_ORDER})",
    )
    parser = _Parser(prog="powersum", description="Exact closed forms for sums of powers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("formula", parents=[common], help="closed form of 1^t + ... + n^t")
    p.add_argument("t", type=int)

    p = sub.add_parser("eval", parents=[common], help="exact value of 1^t + ... + n^t")
    p.add_argument("t", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true", help=f"compare with direct summation when n <= {NAIVE_VERIFY_LIMIT}")

    p = sub.add_parser("matrix", parents=[common], help="permutation generation matrix or its inverse")
    p.add_argument("n", type=int)
    p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("genfun", parents=[common], help="generating functions of k^t and its running sums")
    p.add_argument("t", type=int)

    p = sub.add_parser("bench", parents=[common], help="time the derivation methods against each other")
    p.add_argument("t", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--methods", default=",".join(METHODS), help="comma-separated subset of " + ", ".join(METHODS))
    p.add_argument("--repeats", type=int, default=5)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suites")
    p.add_argument("--max-power", type=int, default=12)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    try:
        settings = Settings.from_env()
    except ValueError:
        print(f"powersum: error: {ENV_MAX_ORDER} must be an integer", file=sys.stderr)
        return EXIT_USAGE
    args = build_parser(settings).parse_args(argv)
    settings = Settings(max_order_cap=args.max_order_cap)
    try:
        if args.command == "formula":
            out = cmd_formula(args.t, args.format, settings)
        elif args.command == "eval":
            out = cmd_eval(args.t, args.n, args.verify, args.format, settings)
        elif args.command == "matrix":
            out = cmd_matrix(args.n, args.inverse, args.format, settings)
        elif args.command == "genfun":
            out = cmd_genfun(args.t, args.format, settings)
        elif args.command == "bench":
            methods = [m.strip() for m in args.methods.split(",") if m.strip()]
            out = cmd_bench(args.t, args.n, methods, args.repeats, settings)
        else:
            out = cmd_selftest(args.max_power)
    except OrderCapError as exc:
        print(f"powersum: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, PowerError, DomainError) as exc:
        print(f"powersum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(str(exc))
        print("powersum: verification failed", file=sys.stderr)
        return EXIT_VERIFY
    except IntegralityError as exc:
        print(f"powersum: internal error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    print(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
