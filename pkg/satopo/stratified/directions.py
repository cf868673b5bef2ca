"""
Unit directions as rational points of the circle, and the finite set of
directions whose linear functions are not generic on a plane set.

A direction is written through its half-angle parameter s:
v(s) = ((1 - s²) / (1 + s²), 2s / (1 + s²)). The parameter s = ∞ is v = (-1, 0).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import sympy
from sympy import Poly, QQ

from satopo.core.polys import X, Y, bpoly, gradient, total_degree
from satopo.core.rat import to_sympy
from satopo.core.resultants import escape_polynomials
from satopo.core.roots import AlgNumber, algebraic, distinct_sorted
from satopo.exceptions import DegenerateInputError, PreconditionError
from satopo.stratified.sets import PlaneSet

logger = logging.getLogger(__name__)

S = sympy.Symbol("s")


@dataclass(frozen=True)
class Direction:
    parameter: Fraction

    @property
    def v(self) -> Tuple[Fraction, Fraction]:
        s: Fraction = self.parameter
        return (1 - s * s) / (1 + s * s), 2 * s / (1 + s * s)

    def linear(self) -> Poly:
        """v*(x, y) = <v, (x, y)>."""
        v1, v2 = self.v
        return bpoly(to_sympy(v1) * X + to_sympy(v2) * Y)

    def __str__(self) -> str:
        v1, v2 = self.v
        return f"({v1}, {v2})"


def direction_from_vector(v1: Fraction, v2: Fraction) -> Direction:
    if v1 * v1 + v2 * v2 != 1:
        raise PreconditionError(f"({v1}, {v2}) is not a unit vector.")
    if v1 == -1:
        raise PreconditionError("(-1, 0) has no finite half-angle parameter.")
    return Direction(v2 / (1 + v1))


def normal_condition(g: Poly) -> sympy.Expr:
    """Vanishes exactly where ∇g is parallel to v(s)."""
    gx, gy = gradient(g)
    return (1 - S ** 2) * gy.as_expr() - 2 * S * gx.as_expr()


def flex_polynomial(q: Poly) -> Poly:
    """Numerator of the curvature of {q = 0}."""
    qx, qy = gradient(q)
    qxx, qxy = gradient(qx)
    _, qyy = gradient(qy)
    expr = (
        qxx.as_expr() * qy.as_expr() ** 2
        - 2 * qxy.as_expr() * qx.as_expr() * qy.as_expr()
        + qyy.as_expr() * qx.as_expr() ** 2
    )
    return bpoly(expr)


def asymptotic_normals(g: Poly) -> List[AlgNumber]:
    """Parameters of the limits of normal directions along unbounded branches of {g = 0}."""
    values: List[AlgNumber] = []
    for lead in escape_polynomials(g.as_expr(), normal_condition(g), S):
        if lead.degree() > 0:
            values.extend(algebraic(lead))

    return values


def fold_directions(g: Poly) -> List[AlgNumber]:
    """Parameters for which v*|{g = 0} may have a degenerate critical point."""
    values: List[AlgNumber] = []
    _, factors = sympy.factor_list(g.as_expr(), X, Y)
    for factor, _ in factors:
        q: Poly = bpoly(factor)
        if total_degree(q) <= 1:
            continue
        flex: Poly = flex_polynomial(q)
        if flex.is_zero:
            continue
        flexes: Poly = Poly(q.as_expr(), Y, X, domain=QQ).resultant(
            Poly(flex.as_expr(), Y, X, domain=QQ)
        )
        if flexes.is_zero:
            raise DegenerateInputError(f"The flex eliminant of {factor} vanishes identically.")
        if Poly(flexes.as_expr(), X, domain=QQ).degree() <= 0:
            continue
        critical: Poly = Poly(q.as_expr(), Y, X, S, domain=QQ).resultant(
            Poly(normal_condition(q), Y, X, S, domain=QQ)
        )
        eliminant: Poly = Poly(critical.as_expr(), X, S, domain=QQ).resultant(
            Poly(flexes.as_expr(), X, S, domain=QQ)
        )
        if eliminant.is_zero:
            raise DegenerateInputError(f"The fold eliminant of {factor} vanishes identically.")
        fold: Poly = Poly(eliminant.as_expr(), S, domain=QQ)
        if fold.degree() > 0:
            values.extend(algebraic(fold))

    return values


def bad_directions(x_set: PlaneSet) -> List[AlgNumber]:
    """A finite superset of the non-generic direction parameters; s = ∞ is always excluded."""
    values: List[AlgNumber] = distinct_sorted(
        asymptotic_normals(x_set.g) + fold_directions(x_set.g)
    )
    logger.debug(f"{len(values)} bad directions for {x_set}")

    return values
