#!/usr/bin/env python3
"""Sweep derivation cost over powers t and compare the three methods.

Also times the column-reuse path: one inverse matrix of order T serving
every power 1..T, against building a fresh matrix per power.

    python scripts/bench_sweep.py --powers 10 20 50 100 --n 1000000
"""

import argparse
import statistics
import time

from powersum.closedform import (
    eval_power_sum,
    faulhaber_via_bernoulli,
    naive_power_sum,
    power_sum_formula,
)
from powersum.genmatrix import build_inv_matrix


def median_seconds(fn, repeats):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--powers", type=int, nargs="+", default=[10, 20, 50, 100])
    ap.add_argument("--n", type=int, default=10**6)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--skip-naive", action="store_true", help="naive summation is O(n) per power")
    args = ap.parse_args()

    print(f"{'t':>5} {'pipeline s':>11} {'bernoulli s':>12} {'naive s':>10}  digits")
    for t in args.powers:
        tp, v1 = median_seconds(lambda: eval_power_sum(power_sum_formula(t), args.n), args.repeats)
        tb, v2 = median_seconds(lambda: eval_power_sum(faulhaber_via_bernoulli(t), args.n), args.repeats)
        if args.skip_naive:
            tn, v3 = float("nan"), v1
        else:
            tn, v3 = median_seconds(lambda: naive_power_sum(t, args.n), 1)
        if not v1 == v2 == v3:
            raise SystemExit(f"methods disagree at t={t}")
        print(f"{t:>5} {tp:>11.4f} {tb:>12.4f} {tn:>10.4f}  {len(str(v1))}")

    top = max(args.powers)

    def reuse():
        cache = build_inv_matrix(top)
        return [power_sum_formula(t, cache) for t in range(1, top + 1)]

    def fresh():
        return [power_sum_formula(t) for t in range(1, top + 1)]

    tr, a = median_seconds(reuse, 1)
    tf, b = median_seconds(fresh, 1)
    assert a == b
    print(f"\nall powers 1..{top}: shared inverse {tr:.3f}s, fresh matrix per power {tf:.3f}s")


if __name__ == "__main__":
    main()
