"""Exact closed forms for sums of powers of natural numbers.

The pipeline builds the permutation generation matrix (whose columns are the
expanded rising factorials m(m+1)...(m+j-1)) and its inverse from integer
recurrences, turns a column of the inverse into the generating function of
k^t, divides by (1 - x) to get running sums, and reads off the coefficient of
x^n as a polynomial in n.
"""

from powersum.closedform import (
    PowerSumFormula,
    bernoulli_numbers,
    eval_power_sum,
    extract_coefficient_poly,
    faulhaber_via_bernoulli,
    naive_power_sum,
    power_sum_formula,
)
from powersum.errors import (
    DimensionError,
    DomainError,
    IntegralityError,
    InvalidOrderError,
    OrderCapError,
    PowerError,
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
    InvPermMatrix,
    PermMatrix,
    build_inv_matrix,
    build_perm_matrix,
    extend_inv_matrix,
    extend_perm_matrix,
    perm_column_poly,
    verify_inverse,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "GenFun",
    "IntegralityError",
    "InvPermMatrix",
    "InvalidOrderError",
    "OrderCapError",
    "PermMatrix",
    "PowerError",
    "PowerSumFormula",
    "bernoulli_numbers",
    "build_inv_matrix",
    "build_perm_matrix",
    "eulerian_row",
    "eval_power_sum",
    "extend_inv_matrix",
    "extend_perm_matrix",
    "extract_coefficient_poly",
    "faulhaber_via_bernoulli",
    "naive_power_sum",
    "perm_column_poly",
    "power_genfun",
    "power_sum_formula",
    "prefix_genfun",
    "rising_genfun",
    "series_coefficient",
    "verify_inverse",
]
