"""
Polynomial helpers shared by every module.

Bivariate polynomials are sympy ``Poly`` objects in ``(x, y)`` over ``QQ`` and
univariate ones are ``Poly`` objects in a single generator. Evaluation at
rational points goes through cached ``Fraction`` coefficient tables.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import sympy
from sympy import Poly, QQ

from satopo.core.rat import sign, to_rat, to_sympy

X, Y = sympy.symbols("x y")
T = sympy.Symbol("t")
V = sympy.Symbol("v")

BPoly = Poly
UPoly = Poly


def bpoly(expr) -> BPoly:
    return Poly(expr, X, Y, domain=QQ)


def upoly(expr, var: sympy.Symbol = X) -> UPoly:
    return Poly(expr, var, domain=QQ)


def as_bpoly(p: Poly) -> BPoly:
    return bpoly(p.as_expr())


def gradient(f: BPoly) -> Tuple[BPoly, BPoly]:
    return f.diff(X), f.diff(Y)


def total_degree(f: BPoly) -> int:
    if f.is_zero:
        return -1
    return f.total_degree()


@lru_cache(maxsize=4096)
def _fraction_terms(f: Poly) -> Tuple[Tuple[Tuple[int, ...], Fraction], ...]:
    return tuple((monom, to_rat(coeff)) for monom, coeff in f.terms())


@lru_cache(maxsize=4096)
def fraction_coeffs(p: UPoly) -> Tuple[Fraction, ...]:
    return tuple(to_rat(c) for c in p.all_coeffs())


def horner(coeffs: Tuple[Fraction, ...], x: Fraction) -> Fraction:
    value: Fraction = Fraction(0)
    for c in coeffs:
        value = value * x + c

    return value


def eval_upoly(p: UPoly, x: Fraction) -> Fraction:
    if p.is_zero:
        return Fraction(0)
    return horner(fraction_coeffs(p), x)


def eval_bpoly(f: BPoly, x: Fraction, y: Fraction) -> Fraction:
    value: Fraction = Fraction(0)
    for (i, j), coeff in _fraction_terms(f):
        value += coeff * x ** i * y ** j

    return value


def sign_bpoly(f: BPoly, x: Fraction, y: Fraction) -> int:
    return sign(eval_bpoly(f, x, y))


def restrict(f: BPoly, var: sympy.Symbol, value: Fraction) -> UPoly:
    """f with ``var`` fixed to a rational value, as a polynomial in the other variable."""
    other: sympy.Symbol = Y if var == X else X
    return Poly(f.as_expr().subs(var, to_sympy(value)), other, domain=QQ)


def shear(f: BPoly, k: Fraction) -> BPoly:
    """f(x + k·y, y)."""
    if k == 0:
        return f
    return bpoly(f.as_expr().subs(X, X + to_sympy(k) * Y))


def transpose(f: BPoly) -> BPoly:
    return bpoly(f.as_expr().subs({X: Y, Y: X}, simultaneous=True))


def top_form_at(f: BPoly, k: Fraction) -> Fraction:
    """Highest homogeneous part of f evaluated at (k, 1)."""
    d: int = total_degree(f)
    value: Fraction = Fraction(0)
    for (i, j), coeff in _fraction_terms(f):
        if i + j == d:
            value += coeff * k ** i

    return value


def in_variable(f: BPoly, var: sympy.Symbol) -> Poly:
    """f viewed as a polynomial in ``var`` with coefficients in the other variable."""
    other: sympy.Symbol = Y if var == X else X
    return Poly(f.as_expr(), var, other, domain=QQ)


def coefficients_in(f: BPoly, var: sympy.Symbol) -> List[UPoly]:
    """Coefficients of f in ``var``, highest degree first, as polynomials in the other variable."""
    other: sympy.Symbol = Y if var == X else X
    p: Poly = Poly(f.as_expr(), var, domain=QQ[other])
    return [Poly(c, other, domain=QQ) for c in p.all_coeffs()]


def monomials(f: BPoly) -> Dict[Tuple[int, int], Fraction]:
    return {monom: coeff for monom, coeff in _fraction_terms(f)}


def coefficient_of(f: BPoly, var: sympy.Symbol, degree: int) -> UPoly:
    """Coefficient of var^degree in f, a polynomial in the other variable."""
    other: sympy.Symbol = Y if var == X else X
    p: Poly = Poly(f.as_expr(), var, domain=QQ[other])
    return Poly(p.nth(degree), other, domain=QQ)
