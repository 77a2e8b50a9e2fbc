"""Invariant suites shared by the test suite and ``powersum selftest``.

Each check raises AssertionError on the first violation. Bounds scale with
``max_power`` and saturate at the ranges below, which are all reached at
max_power = 32.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial, gcd, prod
from typing import Callable, List, Tuple

from powersum import golden
from powersum.closedform import (
    bernoulli_numbers,
    eval_power_sum,
    faulhaber_via_bernoulli,
    naive_power_sum,
    power_sum_formula,
)
from powersum.exact_arith import (
    binomial_poly,
    poly,
    poly_add,
    poly_eval,
    poly_mul,
    poly_scale,
    poly_shift,
    poly_sub,
)
from powersum.genfun import (
    GenFun,
    eulerian_row,
    power_genfun,
    prefix_genfun,
    rising_genfun,
    series_coefficient,
)
from powersum.genmatrix import (
    build_inv_matrix,
    build_perm_matrix,
    extend_inv_matrix,
    extend_perm_matrix,
    perm_column_poly,
    verify_inverse,
)

SEED = 20160101


def expand_factored_4() -> Tuple[Fraction, ...]:
    p = (1,)
    for factor in golden.FACTORED_4:
        p = poly_mul(p, factor)
    return tuple(Fraction(c, golden.FACTORED_4_DEN) for c in p)


def check_golden(max_power: int) -> None:
    for n, rows in golden.PERM_MATRICES.items():
        assert build_perm_matrix(n).dense() == rows, f"A_{n}"
    assert build_inv_matrix(4).dense() == golden.INV_MATRIX_4, "A_4^-1"
    assert build_inv_matrix(12).dense() == golden.corrected_inv_matrix_12(), "A_12^-1"
    assert power_genfun(4, build_inv_matrix(4)).numerator == golden.NUMERATOR_4
    assert power_genfun(12, build_inv_matrix(12)).numerator == golden.NUMERATOR_12
    assert power_sum_formula(4).polynomial == expand_factored_4(), "S_4"
    s12 = power_sum_formula(12).polynomial
    expected = poly(golden.SUM_12_TERMS.get(d, Fraction(0)) for d in range(14))
    assert s12 == expected, "S_12"


def check_arith(max_power: int) -> None:
    rng = random.Random(SEED)

    def rpoly():
        return poly(rng.randint(-100, 100) for _ in range(rng.randint(0, 9)))

    for _ in range(50):
        p, q, r = rpoly(), rpoly(), rpoly()
        assert poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r))
        assert poly_mul(p, q) == poly_mul(q, p)
        assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))
    for _ in range(50):
        a, b = rng.randint(-(10**6), 10**6), rng.randint(1, 10**6) * rng.choice((1, -1))
        f = Fraction(a, b)
        assert f.denominator > 0 and gcd(f.numerator, f.denominator) == 1
        assert Fraction(f.numerator, f.denominator) == f
    for d in range(1, 15):
        for shift in range(-d, d + 1):
            bp = binomial_poly(shift, d)
            for n in range(max(0, d - shift), 31):
                assert poly_eval(bp, n) == comb(n + shift, d), (shift, d, n)


def check_inverse_identity(max_power: int) -> None:
    for n in range(1, min(64, 2 * max_power) + 1):
        assert verify_inverse(build_perm_matrix(n), build_inv_matrix(n)), n


def check_rising_factorials(max_power: int) -> None:
    for n in range(1, min(20, max_power) + 1):
        a = build_perm_matrix(n)
        for j in range(1, n + 1):
            p = perm_column_poly(a, j)
            for m in range(1, 11):
                assert poly_eval(p, m) == prod(range(m, m + j)), (n, j, m)


def check_nesting(max_power: int) -> None:
    top = max(2, min(32, max_power))
    for n in range(2, top + 1):
        a, a1 = build_perm_matrix(n).dense(), build_perm_matrix(n - 1).dense()
        assert [row[:-1] for row in a[1:]] == a1, n
        b, b1 = build_inv_matrix(n).dense(), build_inv_matrix(n - 1).dense()
        assert [row[1:] for row in b[:-1]] == b1, n
        assert extend_perm_matrix(build_perm_matrix(n - 1)) == build_perm_matrix(n), n
        assert extend_inv_matrix(build_inv_matrix(n - 1)) == build_inv_matrix(n), n
        assert all(a[n - 1][j - 1] == factorial(j - 1) for j in range(1, n + 1)), n


def check_inverse_signs(max_power: int) -> None:
    for n in range(1, min(16, max_power) + 1):
        b = build_inv_matrix(n)
        for j in range(1, n + 1):
            for i in range(1, n + 2 - j):
                v = b[i, j]
                if v:
                    assert (v > 0) == ((n + 1 - j - i) % 2 == 0), (n, i, j)


def check_numerators(max_power: int) -> None:
    for t in range(1, min(20, max_power) + 1):
        q = power_genfun(t, build_inv_matrix(t)).numerator
        assert list(q) == eulerian_row(t), t
        assert q == q[::-1], t
        assert sum(q) == factorial(t), t
    for t in range(1, min(16, max_power) + 1):
        g = power_genfun(t, build_inv_matrix(t))
        for n in range(t, 17):
            assert power_genfun(t, build_inv_matrix(n)) == g, (t, n)


def check_series(max_power: int) -> None:
    for t in range(1, min(10, max_power) + 1):
        g = power_genfun(t, build_inv_matrix(t))
        s = prefix_genfun(g)
        running = 0
        for m in range(0, 41):
            running += m**t
            assert series_coefficient(g, m) == m**t, (t, m)
            assert series_coefficient(s, m) == running, (t, m)
    rng = random.Random(SEED + 1)
    top = max(2, min(8, max_power))
    for _ in range(20):
        j1, j2 = rng.sample(range(1, top + 1), 2)
        c1, c2 = rng.randint(-50, 50), rng.randint(-50, 50)
        g1, g2 = rising_genfun(j1), rising_genfun(j2)
        p = max(g1.pole_order, g2.pole_order)
        lift = lambda g, c: poly_scale(
            poly_mul(g.numerator, _one_minus_x_pow(p - g.pole_order)), c
        )
        combined = GenFun(poly_add(lift(g1, c1), lift(g2, c2)), p)
        for m in range(31):
            want = c1 * series_coefficient(g1, m) + c2 * series_coefficient(g2, m)
            assert series_coefficient(combined, m) == want, (j1, j2, m)


def _one_minus_x_pow(e: int):
    return poly((-1) ** k * comb(e, k) for k in range(e + 1))


def check_oracle_bernoulli(max_power: int) -> None:
    assert bernoulli_numbers(12)[12] == Fraction(-691, 2730)
    cache = build_inv_matrix(max_power)
    for t in range(1, max_power + 1):
        f = power_sum_formula(t)
        assert f.polynomial == faulhaber_via_bernoulli(t).polynomial, t
        assert power_sum_formula(t, cache) == f, t


def check_oracle_naive(max_power: int) -> None:
    for t in range(1, min(10, max_power) + 1):
        f = power_sum_formula(t)
        for n in range(51):
            assert eval_power_sum(f, n) == naive_power_sum(t, n), (t, n)


def check_telescoping(max_power: int) -> None:
    for t in range(1, min(24, max_power) + 1):
        s = power_sum_formula(t).polynomial
        diff = poly_sub(s, poly_shift(s, -1))
        assert diff == (0,) * t + (1,), t


def check_structure(max_power: int) -> None:
    for t in range(1, max_power + 1):
        p = power_sum_formula(t).polynomial
        assert len(p) == t + 2 and p[0] == 0, t
        assert p[t + 1] == Fraction(1, t + 1) and p[t] == Fraction(1, 2), t
        assert poly_eval(p, 1) == 1, t


def check_integrality(max_power: int) -> None:
    rng = random.Random(SEED + 2)
    for t in range(1, min(16, max_power) + 1):
        p = power_sum_formula(t).polynomial
        for _ in range(200):
            n = rng.randint(0, 10**50)
            assert Fraction(poly_eval(p, n)).denominator == 1, (t, n)


SUITES: List[Tuple[str, Callable[[int], None]]] = [
    ("golden", check_golden),
    ("exact-arith", check_arith),
    ("inverse-identity", check_inverse_identity),
    ("rising-factorials", check_rising_factorials),
    ("nesting-and-extension", check_nesting),
    ("inverse-signs", check_inverse_signs),
    ("numerators", check_numerators),
    ("series", check_series),
    ("oracle-bernoulli", check_oracle_bernoulli),
    ("oracle-naive", check_oracle_naive),
    ("telescoping", check_telescoping),
    ("structure", check_structure),
    ("integrality", check_integrality),
]


def run_all(max_power: int) -> List[Tuple[str, bool, str]]:
    results = []
    for name, check in SUITES:
        try:
            check(max_power)
        except AssertionError as exc:
            results.append((name, False, str(exc)))
        else:
            results.append((name, True, ""))
    return results
