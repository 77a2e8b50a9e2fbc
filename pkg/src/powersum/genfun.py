"""Ordinary generating functions of the form x * Q(x) / (1 - x)^p.

Convention: G{a_m} = sum_{m >= 1} a_m x^m, so the coefficient of x^m is the
m-th term. The leading factor x is implicit and never stored in Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List

from powersum.errors import PowerError
from powersum.exact_arith import Poly, factorial, poly, poly_add, poly_pow, poly_scale
from powersum.genmatrix import InvPermMatrix

_ONE_MINUS_X: Poly = (1, -1)


@dataclass(frozen=True)
class GenFun:
    numerator: Poly
    pole_order: int

    def to_json(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator],
            "pole_order": self.pole_order,
            "form": "x*Q(x)/(1-x)^p",
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GenFun":
        return cls(poly(int(c) for c in obj["numerator"]), int(obj["pole_order"]))


def rising_genfun(j: int) -> GenFun:
    """G{m(m+1)...(m+j-1)} = j! x / (1-x)^(j+1)."""
    if j < 1:
        raise PowerError(f"rising factorial length must be >= 1, got {j}")
    return GenFun((factorial(j),), j + 1)


def power_genfun(t: int, b: InvPermMatrix) -> GenFun:
    """G{k^t} from column n+1-t of the inverse matrix.

    m^t = sum_j b_{j,c} P_j(m), so by linearity G{k^t} is the same
    combination of the rising-factorial generating functions. Bringing them
    over (1-x)^(t+1) gives the numerator sum_j b_{j,c} j! (1-x)^(t-j).
    """
    n = b.order
    if not 1 <= t <= n:
        raise PowerError(f"power {t} outside 1..{n} for an order-{n} inverse matrix")
    column = b.columns[n - t]  # column c = n+1-t, rows 1..t
    numerator: Poly = ()
    for j, coeff in enumerate(column, start=1):
        block = rising_genfun(j)
        lift = poly_pow(_ONE_MINUS_X, t + 1 - block.pole_order)
        numerator = poly_add(numerator, poly_scale(lift, coeff * block.numerator[0]))
    return GenFun(numerator, t + 1)


def prefix_genfun(g: GenFun) -> GenFun:
    """Running sums: divide by (1 - x)."""
    return GenFun(g.numerator, g.pole_order + 1)


def series_coefficient(g: GenFun, m: int) -> int:
    """Coefficient of x^m in x*Q(x)/(1-x)^p."""
    if m < 0:
        raise ValueError("m must be >= 0")
    p = g.pole_order
    total = 0
    for k, q in enumerate(g.numerator):
        r = m - 1 - k
        if r < 0:
            break
        total += q * comb(r + p - 1, p - 1)
    return total


def eulerian_row(t: int) -> List[int]:
    """Row t of the Eulerian triangle, E(t, 0..t-1)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    row = [1]
    for s in range(2, t + 1):
        prev = row + [0]
        row = [(k + 1) * prev[k] + ((s - k) * prev[k - 1] if k else 0) for k in range(s)]
    return row
