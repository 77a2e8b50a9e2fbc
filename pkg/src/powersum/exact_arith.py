"""Exact integer/rational helpers and dense univariate polynomials.

Python ``int`` is already unbounded and ``fractions.Fraction`` normalizes on
construction (positive denominator, reduced, zero as 0/1), so they serve as
the big-integer and rational types directly.

Polynomials are tuples of coefficients in ascending degree order: index k is
the coefficient of x^k. A canonical polynomial has a nonzero last entry; the
zero polynomial is the empty tuple. The same functions work for integer and
rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial as _factorial
from typing import Sequence, Tuple, Union

Number = Union[int, Fraction]
Poly = Tuple[Number, ...]

__all__ = [
    "Poly",
    "normalize",
    "poly",
    "degree",
    "poly_add",
    "poly_sub",
    "poly_neg",
    "poly_scale",
    "poly_mul",
    "poly_pow",
    "poly_eval",
    "poly_shift",
    "falling_poly",
    "binomial_poly",
    "factorial",
]


def normalize(num: int, den: int = 1) -> Fraction:
    """Canonical exact fraction num/den."""
    return Fraction(num, den)


def _trim(coeffs: list) -> Poly:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def poly(coeffs: Sequence[Number]) -> Poly:
    """Canonical polynomial from an ascending coefficient sequence."""
    return _trim(list(coeffs))


def degree(p: Poly) -> int:
    # -1 for the zero polynomial; internal use only
    return len(p) - 1


def poly_add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] += c
    return _trim(out)


def poly_neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_neg(q))


def poly_scale(p: Poly, c: Number) -> Poly:
    if c == 0:
        return ()
    return tuple(c * a for a in p)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def poly_pow(p: Poly, e: int) -> Poly:
    if e < 0:
        raise ValueError("negative exponent")
    result: Poly = (1,)
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def poly_eval(p: Poly, x: Number) -> Number:
    """Horner evaluation; exact for int/Fraction inputs."""
    acc: Number = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_shift(p: Poly, h: Number) -> Poly:
    """Return the polynomial q with q(x) = p(x + h)."""
    # Horner with linear factor (x + h)
    out: Poly = ()
    lin = (h, 1)
    for c in reversed(p):
        out = poly_add(poly_mul(out, lin), (c,) if c else ())
    return out


def factorial(j: int) -> int:
    if j < 0:
        raise ValueError("factorial of a negative number")
    return _factorial(j)


def falling_poly(shift: int, d: int) -> Poly:
    """(n+shift)(n+shift-1)...(n+shift-d+1) expanded over the integers."""
    out = [1]
    for i in range(d):
        a = shift - i
        # multiply in place by (n + a)
        out.append(0)
        for k in range(len(out) - 1, 0, -1):
            out[k] = out[k - 1] + a * out[k]
        out[0] *= a
    return _trim(out)


def binomial_poly(shift: int, d: int) -> Poly:
    """C(n + shift, d) as a polynomial in n with rational coefficients."""
    if d < 1:
        raise ValueError("d must be >= 1")
    den = _factorial(d)
    return tuple(Fraction(c, den) for c in falling_poly(shift, d))
