from math import factorial, prod

import pytest

from powersum import golden
from powersum.errors import DimensionError, InvalidOrderError, OrderCapError
from powersum.genmatrix import (
    InvPermMatrix,
    build_inv_matrix,
    build_perm_matrix,
    extend_inv_matrix,
    extend_perm_matrix,
    matrix_from_json,
    matrix_to_json,
    perm_column_poly,
    verify_inverse,
)
from powersum.exact_arith import poly_eval


def stirling2(n, k):
    # independent oracle: S(n, k) by inclusion-exclusion
    from math import comb

    return sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1)) // factorial(k)


@pytest.mark.parametrize("n", sorted(golden.PERM_MATRICES))
def test_perm_matrix_matches_displayed(n):
    assert build_perm_matrix(n).dense() == golden.PERM_MATRICES[n]


def test_a6_last_column():
    a = build_perm_matrix(6)
    assert [a[i, 6] for i in range(1, 7)] == [1, 15, 85, 225, 274, 120]


def test_extend_perm_small():
    assert extend_perm_matrix(build_perm_matrix(1)).dense() == [[0, 1], [1, 1]]
    assert [r[-1] for r in extend_perm_matrix(build_perm_matrix(2)).dense()] == [1, 3, 2]
    assert [r[-1] for r in extend_perm_matrix(build_perm_matrix(3)).dense()] == [1, 6, 11, 6]


def test_inverse_order_4():
    assert build_inv_matrix(4).dense() == golden.INV_MATRIX_4


def test_inverse_order_12_first_column():
    b = build_inv_matrix(12)
    assert [b[i, 1] for i in range(1, 13)] == [row[0] for row in golden.INV_MATRIX_12]


def test_inverse_order_12_against_stirling_oracle():
    # column c of A_n^{-1} expands m^(n+1-c) in rising factorials:
    # b_{jc} = (-1)^(k-j) S(k, j) with k = n+1-c
    n = 12
    b = build_inv_matrix(n)
    for c in range(1, n + 1):
        k = n + 1 - c
        for j in range(1, k + 1):
            assert b[j, c] == (-1) ** (k - j) * stirling2(k, j)


def test_displayed_order_12_inverse_has_two_misprints():
    computed = build_inv_matrix(12).dense()
    diffs = {
        (i + 1, j + 1): computed[i][j]
        for i in range(12)
        for j in range(12)
        if computed[i][j] != golden.INV_MATRIX_12[i][j]
    }
    assert diffs == golden.INV_MATRIX_12_ERRATA
    assert computed == golden.corrected_inv_matrix_12()


def test_inverse_order_1():
    assert build_inv_matrix(1).dense() == [[1]]


def test_extend_inverse():
    assert extend_inv_matrix(build_inv_matrix(1)).dense() == [[-1, 1], [1, 0]]
    assert verify_inverse(build_perm_matrix(2), extend_inv_matrix(build_inv_matrix(1)))
    assert extend_inv_matrix(build_inv_matrix(3)).dense() == golden.INV_MATRIX_4
    b12 = extend_inv_matrix(build_inv_matrix(11))
    assert [b12[i, 1] for i in range(1, 13)] == [row[0] for row in golden.INV_MATRIX_12]


@pytest.mark.parametrize("build", [build_perm_matrix, build_inv_matrix])
@pytest.mark.parametrize("n", [0, -3])
def test_invalid_order(build, n):
    with pytest.raises(InvalidOrderError):
        build(n)


def test_order_cap():
    with pytest.raises(OrderCapError):
        build_perm_matrix(11, max_order=10)
    with pytest.raises(OrderCapError):
        extend_inv_matrix(build_inv_matrix(10), max_order=10)


def test_verify_inverse_examples():
    a4 = build_perm_matrix(4)
    b4 = InvPermMatrix(4, tuple(tuple(c) for c in build_inv_matrix(4).columns))
    assert verify_inverse(a4, b4)
    assert verify_inverse(build_perm_matrix(1), build_inv_matrix(1))
    cols = [list(c) for c in b4.columns]
    cols[1][0] += 1
    assert not verify_inverse(a4, InvPermMatrix(4, tuple(map(tuple, cols))))
    with pytest.raises(DimensionError):
        verify_inverse(a4, build_inv_matrix(3))


def test_perm_column_poly_examples():
    assert perm_column_poly(build_perm_matrix(3), 3) == (0, 2, 3, 1)
    assert perm_column_poly(build_perm_matrix(5), 1) == (0, 1)
    assert poly_eval(perm_column_poly(build_perm_matrix(6), 6), 1) == 1 * 2 * 3 * 4 * 5 * 6
    with pytest.raises(IndexError):
        perm_column_poly(build_perm_matrix(3), 4)


@pytest.mark.parametrize("n", range(1, 65))
def test_inverse_identity(n):
    assert verify_inverse(build_perm_matrix(n), build_inv_matrix(n))


@pytest.mark.parametrize("n", range(1, 21))
def test_rising_factorial_reproduction(n):
    a = build_perm_matrix(n)
    for j in range(1, n + 1):
        p = perm_column_poly(a, j)
        for m in range(1, 11):
            assert poly_eval(p, m) == prod(range(m, m + j))


@pytest.mark.parametrize("n", range(2, 33))
def test_nesting_and_extension(n):
    a, a_prev = build_perm_matrix(n), build_perm_matrix(n - 1)
    assert [row[:-1] for row in a.dense()[1:]] == a_prev.dense()
    b, b_prev = build_inv_matrix(n), build_inv_matrix(n - 1)
    assert [row[1:] for row in b.dense()[:-1]] == b_prev.dense()
    assert extend_perm_matrix(a_prev) == a
    assert extend_inv_matrix(b_prev) == b


@pytest.mark.parametrize("n", range(1, 33))
def test_matrix_invariants(n):
    a, b = build_perm_matrix(n), build_inv_matrix(n)
    for j in range(1, n + 1):
        assert a[n, j] == factorial(j - 1)
        assert a[n + 1 - j, j] == 1
        assert b[n + 1 - j, j] == 1
        assert b[1, j] == (-1) ** (j + n)
    assert sum(len(c) for c in a.columns) == n * (n + 1) // 2
    assert sum(len(c) for c in b.columns) == n * (n + 1) // 2


@pytest.mark.parametrize("n", range(1, 17))
def test_inverse_sign_pattern(n):
    b = build_inv_matrix(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = b[i, j]
            if v:
                assert (v > 0) == ((n + 1 - j - i) % 2 == 0)


def test_golden_order_12_sign_pattern():
    # the display's misprints keep the sign, so the pattern holds on it too
    for i, row in enumerate(golden.INV_MATRIX_12, start=1):
        for j, v in enumerate(row, start=1):
            if v:
                assert (v > 0) == ((13 - j - i) % 2 == 0)


@pytest.mark.parametrize("build", [build_perm_matrix, build_inv_matrix])
def test_json_round_trip(build):
    m = build(9)
    obj = matrix_to_json(m)
    assert all(isinstance(x, str) for col in obj["columns"] for x in col)
    assert matrix_from_json(obj) == m
