"""The permutation generation matrix A_n and its inverse, built by recurrence.

Column j of A_n holds the coefficients of the rising factorial
P_j(m) = m(m+1)...(m+j-1) against the descending basis (m^n, ..., m).
A_n is zero above the secondary diagonal and A_n^{-1} is zero below it, so
only the structurally nonzero anti-triangle is stored, one tuple per column:

* ``PermMatrix.columns[j-1]`` holds a_{ij} for rows i = n+1-j .. n
* ``InvPermMatrix.columns[j-1]`` holds b_{ij} for rows i = 1 .. n+1-j

All public indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from powersum.config import DEFAULT_MAX_ORDER
from powersum.errors import DimensionError, InvalidOrderError, OrderCapError
from powersum.exact_arith import Poly, poly

Column = Tuple[int, ...]


def _check_order(n: int, max_order: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidOrderError(f"matrix order must be a positive integer, got {n!r}")
    if n > max_order:
        raise OrderCapError(n, max_order)


@dataclass(frozen=True)
class PermMatrix:
    order: int
    columns: Tuple[Column, ...]

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        n = self.order
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
        top = n + 1 - j
        return self.columns[j - 1][i - top] if i >= top else 0

    def dense(self) -> List[List[int]]:
        n = self.order
        return [[self[i, j] for j in range(1, n + 1)] for i in range(1, n + 1)]


@dataclass(frozen=True)
class InvPermMatrix:
    order: int
    columns: Tuple[Column, ...]

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        n = self.order
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
        return self.columns[j - 1][i - 1] if i + j <= n + 1 else 0

    def dense(self) -> List[List[int]]:
        n = self.order
        return [[self[i, j] for j in range(1, n + 1)] for i in range(1, n + 1)]


def _next_perm_column(prev: Column) -> Column:
    # prev is column j-1 (rows n+2-j..n); returns column j (rows n+1-j..n).
    j = len(prev) + 1
    col = [1]  # secondary diagonal
    for k in range(1, j - 1):
        col.append((j - 1) * prev[k - 1] + prev[k])
    col.append((j - 1) * prev[-1])  # bottom row
    return tuple(col)


def build_perm_matrix(n: int, max_order: int = DEFAULT_MAX_ORDER) -> PermMatrix:
    """Build A_n left to right: each column only needs the one before it."""
    _check_order(n, max_order)
    cols: List[Column] = [(1,)]
    for _ in range(2, n + 1):
        cols.append(_next_perm_column(cols[-1]))
    return PermMatrix(n, tuple(cols))


def extend_perm_matrix(a: PermMatrix, max_order: int = DEFAULT_MAX_ORDER) -> PermMatrix:
    """A_n from A_{n-1}: the old matrix is the lower-left block, so only
    the new last column is computed."""
    _check_order(a.order + 1, max_order)
    return PermMatrix(a.order + 1, a.columns + (_next_perm_column(a.columns[-1]),))


def _next_inv_column(nxt: Column, n: int) -> Column:
    # nxt is column j+1 (rows 1..n-j); returns column j (rows 1..n+1-j).
    length = len(nxt) + 1
    j = n + 1 - length
    col = [(-1) ** ((j + n) & 1)]
    for i in range(2, length):
        col.append(-i * nxt[i - 1] + nxt[i - 2])
    col.append(1)  # secondary diagonal
    return tuple(col)


def build_inv_matrix(n: int, max_order: int = DEFAULT_MAX_ORDER) -> InvPermMatrix:
    """Build A_n^{-1} right to left directly from its recurrence.

    No matrix inversion is performed.
    """
    _check_order(n, max_order)
    cols: List[Column] = [(1,)]
    for _ in range(2, n + 1):
        cols.append(_next_inv_column(cols[-1], n))
    cols.reverse()
    return InvPermMatrix(n, tuple(cols))


def extend_inv_matrix(b: InvPermMatrix, max_order: int = DEFAULT_MAX_ORDER) -> InvPermMatrix:
    """A_n^{-1} from A_{n-1}^{-1}, which is its upper-right block; only the
    new first column is computed."""
    n = b.order + 1
    _check_order(n, max_order)
    return InvPermMatrix(n, (_next_inv_column(b.columns[0], n),) + b.columns)


def verify_inverse(a: PermMatrix, b: InvPermMatrix) -> bool:
    """Check a @ b == I with a full dense integer product."""
    if a.order != b.order:
        raise DimensionError(f"order mismatch: {a.order} vs {b.order}")
    n = a.order
    da, db = a.dense(), b.dense()
    for i in range(n):
        row = da[i]
        for j in range(n):
            s = sum(row[k] * db[k][j] for k in range(n))
            if s != (1 if i == j else 0):
                return False
    return True


def perm_column_poly(a: PermMatrix, j: int) -> Poly:
    """Column j of A_n as an ascending polynomial in m.

    Row i multiplies m^{n+1-i}, so this is the expanded rising factorial
    m(m+1)...(m+j-1).
    """
    if not 1 <= j <= a.order:
        raise IndexError(f"column {j} outside 1..{a.order}")
    col = a.columns[j - 1]
    # packed entry k sits in row n+1-j+k, i.e. multiplies m^(j-k)
    return poly((0,) + tuple(reversed(col)))


def matrix_to_json(m) -> dict:
    kind = "perm" if isinstance(m, PermMatrix) else "inv"
    return {
        "order": m.order,
        "kind": kind,
        "columns": [[str(x) for x in col] for col in m.columns],
    }


def matrix_from_json(obj: dict):
    cls = {"perm": PermMatrix, "inv": InvPermMatrix}[obj["kind"]]
    cols = tuple(tuple(int(x) for x in col) for col in obj["columns"])
    return cls(int(obj["order"]), cols)
