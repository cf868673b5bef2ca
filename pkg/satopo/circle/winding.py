import logging
from dataclasses import replace
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional

from sympy import Poly

from satopo.circle.circles import (
    Circle,
    CircleProfile,
    arc_samples,
    curve_circle_intersections,
    sign_at_parameter,
    sign_on_circle,
    vanishes_on,
)
from satopo.conf import get_setting
from satopo.core.intervals import Box, IsolInterval
from satopo.core.polys import X, Y, gradient, total_degree
from satopo.core.resultants import resultant
from satopo.core.roots import algebraic, bisect, cauchy_root_bound
from satopo.core.solver import SolutionPoint, box_bound, solve_system
from satopo.exceptions import (
    DegenerateInputError,
    InfiniteCriticalSetError,
    InstabilityError,
    PreconditionError,
    SeparationError,
)

logger = logging.getLogger(__name__)


def crossing_directions(profile: CircleProfile, P: Poly) -> List[int]:
    """
    For every event of P's profile, (sign before - sign after) / 2 along the
    counterclockwise direction: 1 when P turns negative, -1 when it turns
    positive, 0 for a touching zero.
    """
    samples: List[Fraction] = arc_samples(profile.points())
    count: int = profile.count
    directions: List[int] = []
    for i in range(count):
        before: int = sign_at_parameter(P, profile.circle, samples[i - 1])
        after: int = sign_at_parameter(P, profile.circle, samples[i])
        directions.append((before - after) // 2)

    return directions


def winding_number(P: Poly, Q: Poly, c: Circle) -> int:
    """Degree of (P, Q)/|(P, Q)| on the circle, by signed zero crossings of P."""
    if vanishes_on(P, c):
        raise DegenerateInputError(f"{P.as_expr()} vanishes identically on {c}.")
    profile: CircleProfile = curve_circle_intersections(P, c)
    directions: List[int] = crossing_directions(profile, P)
    total: int = 0
    for event, direction in zip(profile.events, directions):
        q_sign: int = sign_on_circle(Q, c, event.point)
        if q_sign == 0:
            raise PreconditionError(f"The vector field has a zero on {c} at {event.point}.")
        total += direction * q_sign

    if total % 2 != 0:
        raise InstabilityError(f"Odd crossing sum {total} on {c}.")

    return total // 2


def _distance_lower_bound_sq(center: Box, box: Box) -> Fraction:
    cx, cy = center[0].lo, center[1].lo
    dx: Fraction = max(box[0].lo - cx, cx - box[0].hi, Fraction(0))
    dy: Fraction = max(box[1].lo - cy, cy - box[1].hi, Fraction(0))

    return dx * dx + dy * dy


def separating_circle(point: SolutionPoint, others: List[SolutionPoint]) -> Circle:
    """A rational circle enclosing the point's box with every other solution outside."""
    exact_radius: Fraction = Fraction(1)
    conflict: Optional[SolutionPoint] = None
    for _ in range(get_setting("MAX_REFINEMENTS")):
        xi, yi = point.certain_box()
        center: Box = (IsolInterval.point(xi.midpoint), IsolInterval.point(yi.midpoint))
        radius: Fraction = xi.width + yi.width
        if radius == 0:
            radius = exact_radius
            exact_radius /= 2
        conflict = next(
            (
                o
                for o in others
                if _distance_lower_bound_sq(center, o.certain_box()) <= radius ** 2
            ),
            None,
        )
        if conflict is None:
            return Circle((xi.midpoint, yi.midpoint), radius)
        point = replace(point, u=bisect(point.u))
        others = [replace(o, u=bisect(o.u)) if o is conflict else o for o in others]

    logger.error(f"No separating circle around {point}")
    raise SeparationError(f"No separating circle around {point}.", conflict=conflict)


def local_degree(f: Poly, point: SolutionPoint, others: List[SolutionPoint]) -> int:
    """Local degree of the gradient of f at an isolated zero."""
    fx, fy = gradient(f)
    circle: Circle = separating_circle(point, others)
    for _ in range(get_setting("MAX_REFINEMENTS")):
        if not vanishes_on(fx, circle):
            return winding_number(fx, fy, circle)
        circle = circle.scaled(Fraction(3, 4))
        logger.debug(f"Gradient component vanishes on the circle, shrinking to {circle}")

    raise InstabilityError(f"No usable circle around {point}.")


@lru_cache(maxsize=256)
def gradient_radius(f: Poly) -> Fraction:
    """A radius beyond which no zero of the gradient lies, for circles centered at 0."""
    fx, fy = gradient(f)
    if fx.is_zero or fy.is_zero:
        return Fraction(1)
    res_x: Poly = resultant(fx, fy, Y)
    res_y: Poly = resultant(fx, fy, X)
    if res_x.is_zero or res_y.is_zero:
        return box_bound(solve_system(fx, fy)) + 1
    return cauchy_root_bound(res_x) + cauchy_root_bound(res_y) + 1


def degree_at_infinity(f: Poly) -> int:
    """Degree of grad f / |grad f| on a circle enclosing every zero of the gradient."""
    if total_degree(f) <= 0:
        raise DegenerateInputError("A constant function has no gradient degree at infinity.")
    fx, fy = gradient(f)
    if fx.is_zero or fy.is_zero:
        gradient_zeros(f)
        return 0
    solve_system(fx, fy)

    radius: Fraction = gradient_radius(f)
    circle: Circle = Circle((Fraction(0), Fraction(0)), radius)
    while vanishes_on(fx, circle):
        circle = Circle(circle.center, circle.radius + 1)

    return winding_number(fx, fy, circle)


def gradient_zeros(f: Poly) -> List[SolutionPoint]:
    """The zeros of the gradient of f, which must be isolated."""
    if total_degree(f) <= 0:
        raise InfiniteCriticalSetError("A constant function is critical everywhere.")
    fx, fy = gradient(f)
    for partial, other, var in ((fx, fy, Y), (fy, fx, X)):
        if partial.is_zero:
            if total_degree(other) > 0 and algebraic(Poly(other.as_expr(), var)):
                logger.warning(f"Critical lines for {f.as_expr()}")
                raise InfiniteCriticalSetError(
                    f"The gradient of {f.as_expr()} vanishes along whole lines."
                )
            return []

    return solve_system(fx, fy)
