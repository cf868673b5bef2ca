"""
Critical points of f restricted to a two-strata plane set, and their indices.

Interior points of a region are ordinary critical points of f. Boundary points
solve f_x·g_y - f_y·g_x = g = 0 and carry the sign of λ, where ∇f = λ·∇g.
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional

from sympy import Poly

from satopo.circle.circles import Circle, CircleProfile, curve_circle_intersections
from satopo.circle.levels import compare_values, value_on_circle
from satopo.circle.winding import separating_circle
from satopo.conf import get_setting
from satopo.core.intervals import Box
from satopo.core.polys import bpoly, gradient
from satopo.core.roots import AlgNumber
from satopo.core.solver import SolutionPoint, solve_system
from satopo.critical.points import find_critical_points
from satopo.exceptions import HypothesisViolation, InfiniteCriticalSetError, InstabilityError
from satopo.stratified.sets import REGION, PlaneSet

logger = logging.getLogger(__name__)

INTERIOR: str = "interior"
BOUNDARY: str = "boundary"


@dataclass(frozen=True)
class StratCriticalPoint:
    solution: SolutionPoint
    stratum: str
    value: AlgNumber
    lambda_sign: Optional[int] = None
    local_degree: int = 0
    index: int = 0
    co_index: int = 0

    @property
    def box(self) -> Box:
        return self.solution.certain_box()

    def __str__(self) -> str:
        return f"{self.stratum} point {self.solution}"


def boundary_system(x_set: PlaneSet, f: Poly) -> Poly:
    fx, fy = gradient(f)
    gx, gy = gradient(x_set.g)
    jacobian: Poly = bpoly(fx.as_expr() * gy.as_expr() - fy.as_expr() * gx.as_expr())
    if jacobian.is_zero:
        raise InfiniteCriticalSetError(
            f"{f.as_expr()} is critical along the whole curve {{{x_set.g.as_expr()} = 0}}."
        )
    return jacobian


def _raw_points(x_set: PlaneSet, f: Poly) -> List[StratCriticalPoint]:
    points: List[StratCriticalPoint] = []
    if x_set.kind == REGION:
        for p in find_critical_points(f):
            if p.solution.sign_of(x_set.g) < 0:
                points.append(
                    StratCriticalPoint(p.solution, INTERIOR, p.value, None, p.local_degree)
                )

    fx, fy = gradient(f)
    gx, gy = gradient(x_set.g)
    inner: Poly = bpoly(fx.as_expr() * gx.as_expr() + fy.as_expr() * gy.as_expr())
    for s in solve_system(boundary_system(x_set, f), x_set.g):
        lambda_sign: int = s.sign_of(inner)
        if lambda_sign == 0 and x_set.kind == REGION:
            raise HypothesisViolation(f"λ vanishes at the boundary critical point {s}.")
        points.append(StratCriticalPoint(s, BOUNDARY, s.value_of(f), lambda_sign))

    return points


def _neighbour_signs(
    x_set: PlaneSet, f: Poly, p: StratCriticalPoint, others: List[StratCriticalPoint]
) -> List[int]:
    """Signs of f - f(p) where the curve leaves a small circle around p, stabilized."""
    circle: Circle = separating_circle(p.solution, [q.solution for q in others])
    solution: SolutionPoint = p.solution
    previous: Optional[List[int]] = None
    for _ in range(get_setting("MAX_DOUBLINGS")):
        profile: CircleProfile = curve_circle_intersections(x_set.g, circle)
        current: Optional[List[int]] = None
        if profile.count == 2 and profile.transverse:
            current = sorted(
                compare_values(value_on_circle(f, circle, q), p.value) for q in profile.points()
            )
        if current is not None and 0 not in current and current == previous:
            return current
        previous = current
        radius: Fraction = circle.radius / 2
        solution = solution.refined(radius / 4)
        xi, yi = solution.certain_box()
        circle = Circle((xi.midpoint, yi.midpoint), radius)

    raise InstabilityError(f"The curve does not settle around {p}.")


def stratified_index(
    x_set: PlaneSet,
    f: Poly,
    p: StratCriticalPoint,
    others: Optional[List[StratCriticalPoint]] = None,
    negate: bool = False,
) -> int:
    """Index of f (or of -f) on the set at p."""
    if p.stratum == INTERIOR:
        return p.local_degree
    lambda_sign: int = -p.lambda_sign if negate else p.lambda_sign
    if x_set.kind == REGION and lambda_sign > 0:
        return 0
    if others is None:
        others = [q for q in _raw_points(x_set, f) if q.solution != p.solution]
    signs: List[int] = _neighbour_signs(x_set, f, p, others)
    lower: int = sum(1 for s in signs if (s > 0 if negate else s < 0))

    return 1 - lower


def stratified_critical_points(x_set: PlaneSet, f: Poly) -> List[StratCriticalPoint]:
    """Critical points of f on both strata, with the indices of f and of -f."""
    raw: List[StratCriticalPoint] = _raw_points(x_set, f)
    points: List[StratCriticalPoint] = []
    for p in raw:
        others: List[StratCriticalPoint] = [q for q in raw if q is not p]
        points.append(
            replace(
                p,
                index=stratified_index(x_set, f, p, others),
                co_index=stratified_index(x_set, f, p, others, negate=True),
            )
        )
    logger.debug(f"{len(points)} critical points of {f.as_expr()} on {x_set}")

    return points
