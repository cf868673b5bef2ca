import logging
from functools import lru_cache
from typing import List

import sympy
from sympy import Poly, QQ

from satopo.core.polys import X, Y, coefficients_in, in_variable
from satopo.exceptions import DegenerateInputError

logger = logging.getLogger(__name__)


def _other(var: sympy.Symbol) -> sympy.Symbol:
    return Y if var == X else X


def resultant(p: Poly, q: Poly, eliminate: sympy.Symbol) -> Poly:
    """Sylvester resultant of two polynomials in (x, y) with respect to ``eliminate``."""
    if p.is_zero and q.is_zero:
        raise DegenerateInputError("Resultant of two zero polynomials.")
    kept: sympy.Symbol = _other(eliminate)
    if p.is_zero or q.is_zero:
        return Poly(0, kept, domain=QQ)
    res = in_variable(p, eliminate).resultant(in_variable(q, eliminate))

    return Poly(res.as_expr(), kept, domain=QQ)


@lru_cache(maxsize=1024)
def subresultant(p: Poly, q: Poly, j: int, eliminate: sympy.Symbol) -> Poly:
    """
    The j-th subresultant of p and q in ``eliminate`` as a polynomial in (x, y),
    from the determinantal definition. Its coefficient of ``eliminate^j`` is the
    j-th principal subresultant coefficient; the 0-th subresultant is the resultant.
    """
    pc: List[Poly] = coefficients_in(p, eliminate)
    qc: List[Poly] = coefficients_in(q, eliminate)
    d, e = len(pc) - 1, len(qc) - 1
    if j > min(d, e):
        raise DegenerateInputError(f"Subresultant index {j} exceeds the degrees {d}, {e}.")
    if j == min(d, e):
        return q if e <= d else p

    width: int = d + e - j
    rows: List[List[sympy.Expr]] = []
    for shift in range(e - j):
        row = [sympy.Integer(0)] * width
        for k, c in enumerate(pc):
            row[shift + k] = c.as_expr()
        rows.append(row)
    for shift in range(d - j):
        row = [sympy.Integer(0)] * width
        for k, c in enumerate(qc):
            row[shift + k] = c.as_expr()
        rows.append(row)

    n: int = d + e - 2 * j
    total = sympy.Integer(0)
    for power in range(j + 1):
        column: int = width - 1 - power
        matrix = sympy.Matrix([row[: n - 1] + [row[column]] for row in rows])
        total += matrix.det(method="berkowitz") * eliminate ** power

    return Poly(sympy.expand(total), X, Y, domain=QQ)


def leading_coefficient(p: Poly, var: sympy.Symbol) -> Poly:
    """Leading coefficient of p in ``var``, a polynomial in the other variable."""
    return coefficients_in(p, var)[0]


def common_factor(p: Poly, q: Poly) -> Poly:
    return Poly(sympy.gcd(p.as_expr(), q.as_expr()), X, Y, domain=QQ)


def escape_polynomials(p: sympy.Expr, q: sympy.Expr, param: sympy.Symbol) -> List[Poly]:
    """
    For p, q in (x, y, param): polynomials in param whose roots include every value
    at which a common zero of p and q escapes to infinity, one per projection.
    """
    leads: List[Poly] = []
    for eliminate in (Y, X):
        kept: sympy.Symbol = _other(eliminate)
        first: Poly = Poly(p, eliminate, kept, param, domain=QQ)
        second: Poly = Poly(q, eliminate, kept, param, domain=QQ)
        if first.degree() <= 0 and second.degree() <= 0:
            continue
        eliminant: Poly = first.resultant(second)
        if eliminant.is_zero:
            raise DegenerateInputError(
                f"The eliminant of {p} and {q} in {eliminate} vanishes identically."
            )
        split: Poly = Poly(eliminant.as_expr(), kept, param, domain=QQ)
        top: int = split.degree(kept)
        lead = sum(c * param ** m[1] for m, c in split.terms() if m[0] == top)
        leads.append(Poly(lead, param, domain=QQ))

    return leads
