"""Text and LaTeX rendering of formulas, generating functions and matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from powersum.exact_arith import Poly


def _formula_term(c: Fraction, d: int, latex: bool) -> str:
    num, den = abs(c.numerator), c.denominator
    if d == 0:
        mon = ""
    elif d == 1:
        mon = "n"
    else:
        mon = f"n^{{{d}}}" if latex else f"n^{d}"
    body = (str(num) if num != 1 or not mon else "") + mon
    if den == 1:
        return body
    return f"\\frac{{{body}}}{{{den}}}" if latex else f"{body}/{den}"


def _join_signed(terms: Sequence[tuple]) -> str:
    # terms: (is_negative, text) in display order
    out = []
    for idx, (neg, text) in enumerate(terms):
        if idx == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out) if out else "0"


def formula_text(p: Poly, latex: bool = False) -> str:
    """Expanded polynomial in n, highest degree first."""
    terms = [
        (c < 0, _formula_term(Fraction(c), d, latex))
        for d, c in reversed(list(enumerate(p)))
        if c != 0
    ]
    return _join_signed(terms)


def _q_text(q: Poly, latex: bool) -> str:
    parts = []
    for k, c in enumerate(q):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            mon = ""
        elif k == 1:
            mon = "x"
        else:
            mon = f"x^{{{k}}}" if latex else f"x^{k}"
        body = (str(mag) if mag != 1 or not mon else "") + mon
        parts.append((c < 0, body))
    s = []
    for idx, (neg, body) in enumerate(parts):
        s.append(("-" if neg else ("" if idx == 0 else "+")) + body)
    return "".join(s)


def genfun_text(numerator: Poly, pole_order: int, latex: bool = False) -> str:
    """x*Q(x)/(1-x)^p, writing Q inline and dropping it when it is 1."""
    if tuple(numerator) == (1,):
        top = "x"
    elif len(numerator) == 1 and numerator[0] > 0:
        top = f"{numerator[0]}x"
    else:
        top = f"x({_q_text(numerator, latex)})"
    if latex:
        return f"\\frac{{{top}}}{{(1-x)^{{{pole_order}}}}}"
    return f"{top}/(1-x)^{pole_order}"


def matrix_text(rows: List[List[int]]) -> str:
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in rows)


def matrix_latex(rows: List[List[int]]) -> str:
    body = " \\\\\n".join(" & ".join(str(x) for x in row) for row in rows)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"
