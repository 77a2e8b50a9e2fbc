"""Reference values published for small cases, kept verbatim for regression checks."""

from fractions import Fraction as F

# rows top to bottom
PERM_MATRICES = {
    2: [[0, 1], [1, 1]],
    3: [[0, 0, 1], [0, 1, 3], [1, 1, 2]],
    4: [[0, 0, 0, 1], [0, 0, 1, 6], [0, 1, 3, 11], [1, 1, 2, 6]],
    5: [
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 10],
        [0, 0, 1, 6, 35],
        [0, 1, 3, 11, 50],
        [1, 1, 2, 6, 24],
    ],
    6: [
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 15],
        [0, 0, 0, 1, 10, 85],
        [0, 0, 1, 6, 35, 225],
        [0, 1, 3, 11, 50, 274],
        [1, 1, 2, 6, 24, 120],
    ],
}

INV_MATRIX_4 = [[-1, 1, -1, 1], [7, -3, 1, 0], [-6, 1, 0, 0], [1, 0, 0, 0]]

INV_MATRIX_12 = [
    [-1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1],
    [2047, -1023, 551, -255, 127, -63, 31, -15, 7, -3, 1, 0],
    [-86526, 28510, -9330, 3025, -966, 301, -90, 25, -6, 1, 0, 0],
    [611501, -145750, 34105, -7770, 1701, -350, 65, -10, 1, 0, 0, 0],
    [-1379400, 246730, -42525, 6951, -1050, 140, -15, 1, 0, 0, 0, 0],
    [1323652, -179487, 22827, -2646, 266, -21, 1, 0, 0, 0, 0, 0],
    [-627396, 63987, -5880, 462, -28, 1, 0, 0, 0, 0, 0, 0],
    [159027, -11880, 750, -36, 1, 0, 0, 0, 0, 0, 0, 0],
    [-22275, 1155, -45, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1705, -55, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-66, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

# Entries where the published A_12^{-1} display disagrees with the true inverse
# (A_12 times the display is not the identity). (row, col) -> correct value;
# the values are signed Stirling numbers of the second kind S(10,2), S(11,3).
INV_MATRIX_12_ERRATA = {(2, 3): 511, (3, 2): 28501}


def corrected_inv_matrix_12():
    rows = [list(r) for r in INV_MATRIX_12]
    for (i, j), v in INV_MATRIX_12_ERRATA.items():
        rows[i - 1][j - 1] = v
    return rows


NUMERATOR_4 = (1, 11, 11, 1)
NUMERATOR_12 = (
    1, 4083, 478271, 10187685, 66318474, 162512286,
    162512286, 66318474, 10187685, 478271, 4083, 1,
)

# n(n+1)(2n+1)(3n^2+3n-1)/30, factored form; expanded by the checks
FACTORED_4 = [(0, 1), (1, 1), (1, 2), (-1, 3, 3)]
FACTORED_4_DEN = 30

# degree -> coefficient; every other degree is zero
SUM_12_TERMS = {
    1: F(-691, 2730),
    3: F(5, 3),
    5: F(-33, 10),
    7: F(22, 7),
    9: F(-11, 6),
    11: F(1),
    12: F(1, 2),
    13: F(1, 13),
}
