"""
Links at infinity: the trace of a semi-algebraic set on a large circle around a
base point, measured on a certified radius and confirmed over radius doublings.
"""

import logging
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from sympy import Poly

from satopo.circle.circles import (
    Circle,
    CirclePoint,
    arc_samples,
    curve_circle_intersections,
    point_order,
    sign_at_parameter,
    sign_on_circle,
)
from satopo.circle.levels import EQ, GE, LE, sublevel_chi
from satopo.conf import get_setting
from satopo.core.polys import total_degree
from satopo.core.rat import to_sympy
from satopo.core.roots import AlgNumber, Number
from satopo.exceptions import DegenerateInputError, InstabilityError
from satopo.infinity.gamma import (
    BasePoint,
    admissible_basepoint,
    aligned_radius,
    basepoint_candidates,
    common_zero_bound,
    tangency_bound,
)

logger = logging.getLogger(__name__)

Result = TypeVar("Result")

Condition = Tuple[Poly, str]


def stabilize(compute: Callable[[Circle], Optional[Result]], circle: Circle, label: str) -> Result:
    """Value of compute on doubled circles once two consecutive radii agree."""
    previous: Optional[Result] = compute(circle)
    for _ in range(get_setting("MAX_DOUBLINGS")):
        circle = circle.scaled(Fraction(2))
        current: Optional[Result] = compute(circle)
        if current is not None and current == previous:
            logger.debug(f"{label} stable at radius {circle.radius}")
            return current
        previous = current

    logger.error(f"{label} did not stabilize")
    raise InstabilityError(
        f"{label} did not stabilize within {get_setting('MAX_DOUBLINGS')} radius doublings."
    )


def default_basepoint(
    f: Poly, extra: Sequence[Poly] = (), seed: Optional[int] = None
) -> BasePoint:
    if seed is None:
        seed = get_setting("SATOPO_SEED")
    retries: int = get_setting("BASEPOINT_RETRIES")
    for _, a in zip(range(retries), basepoint_candidates(seed)):
        if admissible_basepoint(f, a, extra):
            return a

    raise DegenerateInputError(f"No admissible base point for {f.as_expr()} in {retries} draws.")


def rational_level(alpha: Number) -> Optional[Fraction]:
    if isinstance(alpha, AlgNumber):
        return alpha.rational_value()
    return Fraction(alpha)


def link_chi(
    f: Poly,
    alpha: Number,
    flavor: str,
    a: Optional[BasePoint] = None,
    side: int = 0,
) -> int:
    """Euler characteristic of the link at infinity of {f flavor alpha + side·δ}."""
    level: Optional[Fraction] = rational_level(alpha)
    extra: List[Poly] = [f - to_sympy(level)] if level is not None and side == 0 else []
    if a is None:
        a = default_basepoint(f, extra)
    radius: Fraction = aligned_radius(f, a, extra)

    return stabilize(
        lambda c: sublevel_chi(f, c, alpha, flavor, side),
        Circle(a, radius),
        f"Link of {{{f.as_expr()} {flavor} {alpha}}}",
    )


def half_branches(g: Poly, a: Optional[BasePoint] = None) -> int:
    """Number of points where {g = 0} crosses a large circle."""
    count: int = link_chi(g, Fraction(0), EQ, a)
    if count % 2 != 0:
        raise InstabilityError(
            f"Odd half-branch count {count} for {g.as_expr()}; the radius is not certified."
        )
    return count


def r_infinity(g: Poly, a: Optional[BasePoint] = None) -> int:
    return half_branches(g, a) // 2


def satisfies(signs: List[int], conditions: Sequence[Condition]) -> bool:
    for s, (_, flavor) in zip(signs, conditions):
        if flavor == LE and s > 0:
            return False
        if flavor == GE and s < 0:
            return False
        if flavor == EQ and s != 0:
            return False
    return True


def _trace(conditions: Sequence[Condition], c: Circle) -> List[bool]:
    """Membership of the event points and of the arcs between them, in circular order."""
    points: List[CirclePoint] = []
    for p, _ in conditions:
        if total_degree(p) > 0:
            points.extend(curve_circle_intersections(p, c).points())
    points.sort(key=cmp_to_key(point_order))
    distinct: List[CirclePoint] = []
    for point in points:
        if not distinct or point_order(distinct[-1], point) != 0:
            distinct.append(point)

    samples: List[Fraction] = arc_samples(distinct)
    inside: List[bool] = []
    for point, t in zip(distinct, samples):
        inside.append(satisfies([sign_on_circle(p, c, point) for p, _ in conditions], conditions))
        inside.append(satisfies([sign_at_parameter(p, c, t) for p, _ in conditions], conditions))
    if not distinct:
        inside.append(
            satisfies([sign_at_parameter(p, c, samples[0]) for p, _ in conditions], conditions)
        )

    return inside


def set_on_circle(conditions: Sequence[Condition], c: Circle) -> int:
    """Euler characteristic of {p_i flavor_i 0 for all i} on the circle."""
    inside: List[bool] = _trace(conditions, c)
    if all(inside) or not any(inside):
        return 0

    return sum(1 for i in range(len(inside)) if inside[i] and not inside[i - 1])


def set_radius(conditions: Sequence[Condition], a: BasePoint) -> Fraction:
    polys: List[Poly] = [p for p, _ in conditions if total_degree(p) > 0]
    bounds: List[Fraction] = [Fraction(0)]
    bounds.extend(tangency_bound(p, a) for p in polys)
    for i, p in enumerate(polys):
        for q in polys[i + 1 :]:
            bounds.append(common_zero_bound(p, q))

    return abs(a[0]) + abs(a[1]) + max(bounds) + 1


def _on_large_circles(
    conditions: Sequence[Condition],
    compute: Callable[[Circle], Optional[Result]],
    label: str,
    seed: Optional[int],
) -> Result:
    if seed is None:
        seed = get_setting("SATOPO_SEED")
    retries: int = get_setting("BASEPOINT_RETRIES")
    for _, a in zip(range(retries), basepoint_candidates(seed)):
        try:
            radius: Fraction = set_radius(conditions, a)
        except DegenerateInputError as exc:
            logger.debug(f"Base point {a} rejected: {exc}")
            continue
        return stabilize(compute, Circle(a, radius), label)

    raise DegenerateInputError(f"No admissible base point for the set in {retries} draws.")


def set_link_chi(conditions: Sequence[Condition], seed: Optional[int] = None) -> int:
    """Euler characteristic of the link at infinity of a set given by sign conditions."""
    return _on_large_circles(
        conditions, lambda c: set_on_circle(conditions, c), "Link of a set", seed
    )


def set_is_bounded(conditions: Sequence[Condition], seed: Optional[int] = None) -> bool:
    """Whether the set misses every large circle."""
    return _on_large_circles(
        conditions, lambda c: not any(_trace(conditions, c)), "Boundedness of a set", seed
    )
