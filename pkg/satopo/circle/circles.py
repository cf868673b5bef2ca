"""
Circles with rational center and radius, and the points where curves meet them.

A circle is parametrized by the tangent half-angle
``x = a1 + R(1 - t²)/(1 + t²)``, ``y = a2 + 2Rt/(1 + t²)``. Increasing ``t`` runs
counterclockwise from just after the antipode ``(a1 - R, a2)``; the antipode
itself corresponds to ``t = ∞`` and is always the last point of a profile.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from sympy import Poly, QQ

from satopo.core.polys import T, eval_bpoly, eval_upoly, monomials, total_degree
from satopo.core.rat import sign, to_sympy
from satopo.core.roots import (
    AlgNumber,
    Number,
    algebraic,
    compare,
    rational_above,
    rational_below,
    separating_rational,
    sign_at,
)
from satopo.exceptions import DegenerateInputError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Circle:
    center: Tuple[Fraction, Fraction]
    radius: Fraction

    def __post_init__(self):
        if self.radius <= 0:
            raise PreconditionError(f"Circle radius must be positive, got {self.radius}.")

    @property
    def antipode(self) -> Tuple[Fraction, Fraction]:
        return self.center[0] - self.radius, self.center[1]

    def point_at(self, t: Fraction) -> Tuple[Fraction, Fraction]:
        w: Fraction = 1 + t * t
        return (
            self.center[0] + self.radius * (1 - t * t) / w,
            self.center[1] + 2 * self.radius * t / w,
        )

    def scaled(self, factor: Fraction) -> "Circle":
        return Circle(self.center, self.radius * factor)

    def __str__(self) -> str:
        return f"S({self.center[0]}, {self.center[1]}; {self.radius})"


@dataclass(frozen=True)
class CirclePoint:
    """A point of a circle: a half-angle parameter, or the antipode when None."""

    parameter: Optional[AlgNumber] = None

    @property
    def is_antipode(self) -> bool:
        return self.parameter is None

    def __str__(self) -> str:
        return "antipode" if self.parameter is None else f"t = {self.parameter}"


ANTIPODE: CirclePoint = CirclePoint(None)


@dataclass(frozen=True)
class CircleEvent:
    point: CirclePoint
    multiplicity: int = 1
    payload: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def transverse(self) -> bool:
        return self.multiplicity == 1


@dataclass(frozen=True)
class CircleProfile:
    circle: Circle
    events: Tuple[CircleEvent, ...]

    @property
    def count(self) -> int:
        return len(self.events)

    @property
    def transverse(self) -> bool:
        return all(event.transverse for event in self.events)

    def points(self) -> List[CirclePoint]:
        return [event.point for event in self.events]


@lru_cache(maxsize=1024)
def _substitute(g: Poly, center: Tuple[Fraction, Fraction], radius: Fraction) -> Poly:
    a1, a2, r = to_sympy(center[0]), to_sympy(center[1]), to_sympy(radius)
    w: Poly = Poly(1 + T ** 2, T, domain=QQ)
    xn: Poly = Poly(a1 * (1 + T ** 2) + r * (1 - T ** 2), T, domain=QQ)
    yn: Poly = Poly(a2 * (1 + T ** 2) + 2 * r * T, T, domain=QQ)
    d: int = total_degree(g)
    result: Poly = Poly(0, T, domain=QQ)
    for (i, j), coeff in monomials(g).items():
        result += xn ** i * yn ** j * w ** (d - i - j) * to_sympy(coeff)

    return result


def substitute(g: Poly, c: Circle) -> Poly:
    """g on the circle as a polynomial in t, cleared by (1 + t²)^deg g."""
    return _substitute(g, c.center, c.radius)


def antipode_multiplicity(g: Poly, c: Circle) -> int:
    restricted: Poly = substitute(g, c)
    if restricted.is_zero:
        raise DegenerateInputError(f"{g.as_expr()} vanishes identically on {c}.")
    return 2 * total_degree(g) - restricted.degree()


def vanishes_on(g: Poly, c: Circle) -> bool:
    return substitute(g, c).is_zero


def point_order(p: CirclePoint, q: CirclePoint) -> int:
    if p.is_antipode and q.is_antipode:
        return 0
    if p.is_antipode:
        return 1
    if q.is_antipode:
        return -1
    return compare(p.parameter, q.parameter)


def curve_circle_intersections(g: Poly, c: Circle) -> CircleProfile:
    """All points of {g = 0} on the circle, in counterclockwise order, antipode last."""
    restricted: Poly = substitute(g, c)
    if restricted.is_zero:
        logger.warning(f"{g.as_expr()} vanishes on {c}")
        raise DegenerateInputError(f"{g.as_expr()} vanishes identically on {c}.")

    events: List[CircleEvent] = []
    if restricted.degree() > 0:
        _, factors = restricted.sqf_list()
        for factor, multiplicity in factors:
            for root in algebraic(factor):
                events.append(CircleEvent(CirclePoint(root), multiplicity))
    events.sort(key=lambda e: float(e.point.parameter))
    _exact_sort(events)
    at_antipode: int = 2 * total_degree(g) - restricted.degree()
    if at_antipode > 0:
        events.append(CircleEvent(ANTIPODE, at_antipode))

    return CircleProfile(c, tuple(events))


def _exact_sort(events: List[CircleEvent]) -> None:
    for i in range(1, len(events)):
        j: int = i
        while j > 0 and point_order(events[j - 1].point, events[j].point) > 0:
            events[j - 1], events[j] = events[j], events[j - 1]
            j -= 1


def arc_samples(points: List[CirclePoint]) -> List[Fraction]:
    """
    A rational parameter on each arc following the given ordered points.

    ``samples[i]`` lies on the open arc from ``points[i]`` to the next point
    (cyclically). With no points, a single sample covers the whole circle.
    """
    finite: List[Number] = [p.parameter for p in points if not p.is_antipode]
    if not finite:
        return [Fraction(0)] * max(len(points), 1)

    samples: List[Fraction] = []
    for left, right in zip(finite, finite[1:]):
        samples.append(separating_rational(left, right))
    has_antipode: bool = len(finite) < len(points)
    samples.append(rational_above(finite[-1]))
    if has_antipode:
        samples.append(rational_below(finite[0]))

    return samples


def sign_on_circle(g: Poly, c: Circle, point: CirclePoint) -> int:
    """Exact sign of g at a circle point."""
    if point.is_antipode:
        return sign(eval_bpoly(g, *c.antipode))
    return sign_at(substitute(g, c), point.parameter)


def sign_at_parameter(g: Poly, c: Circle, t: Fraction) -> int:
    return sign(eval_upoly(substitute(g, c), t))
