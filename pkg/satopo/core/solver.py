"""
Certified real solutions of zero-dimensional bivariate systems P = Q = 0.

The system is sheared (x ↦ x + k·y) until both y-leading coefficients are
constants and, above every real root u of the y-eliminant, the first
subresultant not vanishing at u is a pure power ``c·(y - y0)^j``. Then
``y0 = -b(u)/a(u)`` is the only common root above u, so every solution is
carried by one univariate algebraic number plus two polynomials.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import sympy
from sympy import Poly, QQ

from satopo.conf import get_setting
from satopo.core.intervals import Box, IsolInterval, eval_upoly_interval
from satopo.core.polys import (
    X,
    Y,
    bpoly,
    coefficient_of,
    coefficients_in,
    restrict,
    shear,
    top_form_at,
    total_degree,
)
from satopo.core.resultants import common_factor, resultant, subresultant
from satopo.core.roots import (
    AlgNumber,
    Number,
    algebraic,
    bisect,
    distinct_sorted,
    eval_rational_function,
    gap_samples,
    sign_at,
    sqf,
)
from satopo.core.rat import to_sympy
from satopo.exceptions import DegenerateInputError, InfiniteCriticalSetError, InstabilityError

logger = logging.getLogger(__name__)


def shear_candidates() -> Iterator[Fraction]:
    yield Fraction(0)
    i: int = 1
    while True:
        yield Fraction((-1) ** i * (i + 1), i % 3 + 2)
        i += 1


@dataclass(frozen=True)
class SolutionPoint:
    """One real solution: sheared abscissa ``u`` with y = -b(u)/a(u) and x = u + k·y."""

    shear: Fraction
    u: AlgNumber
    a: Poly
    b: Poly

    def _substituted(self, f: Poly) -> Poly:
        """Numerator of f(u + k·y, y) at y = -b/a, cleared by a^deg_y."""
        g: Poly = shear(f, self.shear)
        coeffs: List[Poly] = coefficients_in(g, Y)
        degree: int = len(coeffs) - 1
        a_expr, b_expr = self.a.as_expr(), self.b.as_expr()
        total = 0
        for power, c in enumerate(reversed(coeffs)):
            total += c.as_expr() * (-b_expr) ** power * a_expr ** (degree - power)

        return Poly(total, X, domain=QQ)

    def sign_of(self, f: Poly) -> int:
        """Exact sign of a polynomial in (x, y) at the solution."""
        if f.is_zero:
            return 0
        numerator: Poly = self._substituted(f)
        degree: int = len(coefficients_in(shear(f, self.shear), Y)) - 1
        result: int = sign_at(numerator, self.u)
        if degree % 2 == 1:
            result *= sign_at(self.a, self.u)

        return result

    def value_of(self, f: Poly) -> AlgNumber:
        """Exact value of a polynomial in (x, y) at the solution."""
        numerator: Poly = self._substituted(f)
        degree: int = len(coefficients_in(shear(f, self.shear), Y)) - 1
        return eval_rational_function(self.u, numerator, Poly(self.a ** degree, X, domain=QQ))

    @property
    def y(self) -> AlgNumber:
        return self.value_of(Poly(Y, X, Y, domain=QQ))

    @property
    def x(self) -> AlgNumber:
        return self.value_of(Poly(X, X, Y, domain=QQ))

    def refined(self, width: Fraction) -> "SolutionPoint":
        current: SolutionPoint = self
        while True:
            box: Optional[Box] = current.box()
            if box is not None and box[0].width <= width and box[1].width <= width:
                return current
            current = replace(current, u=bisect(current.u))

    def box(self) -> Optional[Box]:
        """Enclosure of the solution in original coordinates, None when too coarse."""
        ui: IsolInterval = self.u.interval
        ai: IsolInterval = eval_upoly_interval(self.a, ui)
        if ai.contains_zero():
            return None
        yi: IsolInterval = -eval_upoly_interval(self.b, ui) / ai
        xi: IsolInterval = ui + yi.scale(self.shear)

        return xi, yi

    def certain_box(self) -> Box:
        current: SolutionPoint = self
        box: Optional[Box] = current.box()
        while box is None:
            current = replace(current, u=bisect(current.u))
            box = current.box()

        return box

    def __str__(self) -> str:
        xi, yi = self.certain_box()
        return f"({float(xi.midpoint):.6g}, {float(yi.midpoint):.6g})"


def _common_root_above(ps: Poly, qs: Poly, u: AlgNumber) -> Optional[Tuple[Poly, Poly]]:
    """
    (a, b) with y = -b(u)/a(u) the only common root of ps(u, y) and qs(u, y), or
    None when the common roots above u are not a single point.
    """
    top: int = min(ps.degree(Y), qs.degree(Y))
    for j in range(1, top + 1):
        s: Poly = subresultant(ps, qs, j, Y)
        lead: Poly = coefficient_of(s, Y, j)
        if sign_at(lead, u) == 0:
            continue
        below: Poly = coefficient_of(s, Y, j - 1)
        for i in range(j - 1):
            power: int = j - i
            binomial: int = int(sympy.binomial(j, i))
            check: Poly = coefficient_of(s, Y, i) * (lead * j) ** power
            check -= lead * below ** power * binomial
            if sign_at(check, u) != 0:
                return None
        return lead * j, below

    return None


def _isolated_points(r: Poly) -> List[SolutionPoint]:
    """Real points of an irreducible curve {r = 0}, which must be finitely many."""
    k: Fraction = next(k for k in shear_candidates() if top_form_at(r, k) != 0)
    rs: Poly = shear(r, k)
    # constant y-leading coefficient: no vertical asymptotes, so every component of
    # positive dimension projects onto an interval with a gap sample inside it
    turning: List[SolutionPoint] = solve_system(rs, rs.diff(Y))
    abscissas: List[Number] = distinct_sorted([p.u for p in turning])
    for c in gap_samples(abscissas):
        fiber: Poly = restrict(rs, X, c)
        if fiber.is_zero or (fiber.degree() > 0 and algebraic(fiber)):
            raise InfiniteCriticalSetError(
                f"The curve {r.as_expr()} = 0 has infinitely many real points."
            )

    return [replace(p, shear=p.shear + k) for p in turning]


def real_points(d: Poly) -> List[SolutionPoint]:
    """Real points of {d = 0} when there are finitely many."""
    points: List[SolutionPoint] = []
    _, factors = sympy.factor_list(d.as_expr(), X, Y)
    for factor, _ in factors:
        r: Poly = bpoly(factor)
        if total_degree(r) > 0:
            points.extend(_isolated_points(r))

    return points


def solve_system(P: Poly, Q: Poly, shears: Optional[List[Fraction]] = None) -> List[SolutionPoint]:
    """All real solutions of P = Q = 0, which must be finitely many."""
    if P.is_zero or Q.is_zero:
        raise DegenerateInputError("Cannot solve a system containing the zero polynomial.")
    if total_degree(P) == 0 or total_degree(Q) == 0:
        return []
    factor: Poly = common_factor(P, Q)
    if total_degree(factor) > 0:
        logger.info(f"System shares the factor {factor.as_expr()}")
        P1: Poly = bpoly(sympy.quo(P.as_expr(), factor.as_expr(), X, Y))
        Q1: Poly = bpoly(sympy.quo(Q.as_expr(), factor.as_expr(), X, Y))
        found: List[SolutionPoint] = solve_system(P1, Q1, shears)
        for point in real_points(factor):
            if point.sign_of(P1) != 0 or point.sign_of(Q1) != 0:
                found.append(point)
        return found

    retries: int = get_setting("SHEAR_RETRIES")
    candidates = iter(shears) if shears is not None else shear_candidates()
    for attempt, k in zip(range(retries), candidates):
        if top_form_at(P, k) == 0 or top_form_at(Q, k) == 0:
            continue
        ps, qs = shear(P, k), shear(Q, k)
        eliminant: Poly = resultant(ps, qs, Y)
        if eliminant.is_zero:
            raise InfiniteCriticalSetError("The y-eliminant of the system vanishes identically.")
        if eliminant.degree() <= 0:
            return []
        square_free: Poly = sqf(eliminant)
        roots: List[AlgNumber] = algebraic(square_free)
        if not roots:
            return []
        solutions: List[SolutionPoint] = []
        for u in roots:
            pair: Optional[Tuple[Poly, Poly]] = _common_root_above(ps, qs, u)
            if pair is None:
                logger.debug(f"Shear {k}: several solutions above {u}")
                break
            solutions.append(SolutionPoint(k, u, *pair))
        else:
            logger.debug(f"Solved with shear {k} after {attempt + 1} attempts")
            return solutions

    raise InstabilityError(f"No admissible shear found within {retries} attempts.")


def solution_at_rational(x: Fraction, y: Fraction) -> SolutionPoint:
    """A rational point as a solution record."""
    return SolutionPoint(
        Fraction(0),
        AlgNumber.from_rational(x),
        Poly(1, X, domain=QQ),
        Poly(-to_sympy(y), X, domain=QQ),
    )


def box_bound(points: List[SolutionPoint]) -> Fraction:
    """B with |x| + |y| <= B at every point."""
    bound: Fraction = Fraction(0)
    for point in points:
        xi, yi = point.certain_box()
        bound = max(bound, max(-xi.lo, xi.hi) + max(-yi.lo, yi.hi))

    return bound
