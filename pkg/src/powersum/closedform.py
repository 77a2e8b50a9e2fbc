"""Closed-form power sums S_t(n) = 1^t + 2^t + ... + n^t, plus two oracles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional

from powersum.errors import DomainError, IntegralityError, PowerError
from powersum.exact_arith import Poly, factorial, falling_poly, poly, poly_add, poly_eval, poly_scale
from powersum.genfun import GenFun, power_genfun, prefix_genfun
from powersum.genmatrix import InvPermMatrix, build_inv_matrix


@dataclass(frozen=True)
class PowerSumFormula:
    power: int
    polynomial: Poly  # ascending Fractions in n

    def to_json(self) -> dict:
        return {
            "power": self.power,
            "coefficients": [
                {"degree": d, "num": str(c.numerator), "den": str(c.denominator)}
                for d, c in enumerate(self.polynomial)
                if c != 0
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PowerSumFormula":
        terms = {int(e["degree"]): Fraction(int(e["num"]), int(e["den"])) for e in obj["coefficients"]}
        top = max(terms, default=-1)
        return cls(int(obj["power"]), poly(terms.get(d, Fraction(0)) for d in range(top + 1)))


def extract_coefficient_poly(g: GenFun) -> Poly:
    """Coefficient of x^n in g, as a polynomial in n.

    x^(k+1)/(1-x)^p contributes C(n-1-k + p-1, p-1) to x^n, which with
    t = p-2 is C(n + t - k, t + 1). Each binomial_poly shares the 1/d!
    factor, so the falling products are summed over the integers first.
    """
    d = g.pole_order - 1
    acc: Poly = ()
    for k, q in enumerate(g.numerator):
        if q:
            acc = poly_add(acc, poly_scale(falling_poly(d - 1 - k, d), q))
    den = factorial(d)
    return poly(Fraction(c, den) for c in acc)


def power_sum_formula(t: int, cache: Optional[InvPermMatrix] = None) -> PowerSumFormula:
    """Derive S_t(n) through the matrix / generating-function pipeline.

    ``cache`` may be any inverse matrix of order >= t; one matrix serves all
    smaller powers by column selection. Without it an order-t matrix is built.
    """
    if t < 1:
        raise PowerError(f"power must be >= 1, got {t}")
    if cache is None:
        cache = build_inv_matrix(t)
    elif cache.order < t:
        raise PowerError(f"cached inverse has order {cache.order} < power {t}")
    g = prefix_genfun(power_genfun(t, cache))
    return PowerSumFormula(t, extract_coefficient_poly(g))


def eval_power_sum(f: PowerSumFormula, n: int) -> int:
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    value = Fraction(poly_eval(f.polynomial, n))
    if value.denominator != 1:
        raise IntegralityError(f"S_{f.power}({n}) = {value} is not an integer")
    return value.numerator


def naive_power_sum(t: int, n: int) -> int:
    return sum(k**t for k in range(1, n + 1))


def bernoulli_numbers(upto: int) -> List[Fraction]:
    """B_0..B_upto with B_1 = +1/2, from sum_{j<=m} C(m+1, j) B_j = m + 1."""
    bs: List[Fraction] = []
    for m in range(upto + 1):
        s = sum(comb(m + 1, j) * bs[j] for j in range(m))
        bs.append((Fraction(m + 1) - s) / (m + 1))
    return bs


def faulhaber_via_bernoulli(t: int) -> PowerSumFormula:
    """S_t(n) = 1/(t+1) * sum_k C(t+1, k) B_k n^(t+1-k); no matrices involved."""
    if t < 1:
        raise PowerError(f"power must be >= 1, got {t}")
    bs = bernoulli_numbers(t)
    coeffs = [Fraction(0)] * (t + 2)
    for k in range(t + 1):
        coeffs[t + 1 - k] = comb(t + 1, k) * bs[k] / (t + 1)
    return PowerSumFormula(t, poly(coeffs))
