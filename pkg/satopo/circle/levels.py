"""
Level sets of a function restricted to a circle.

Between two consecutive critical points of f on a circle, f is strictly
monotone. Knowing the critical points in circular order together with their
values is therefore enough to count the points of {f = level}, and the arcs
of {f <= level} or {f >= level}, for any real level. Levels may be shifted by
an infinitesimal amount (``side`` -1 or 1) to describe nearby fibers.

Values are kept as enclosures refined on demand; the exact algebraic number of
a value is only computed when two enclosures cannot be told apart.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from sympy import Poly, QQ

from satopo.circle.circles import (
    Circle,
    CirclePoint,
    CircleProfile,
    curve_circle_intersections,
    substitute,
    vanishes_on,
)
from satopo.conf import get_setting
from satopo.core.intervals import IsolInterval, eval_upoly_interval
from satopo.core.polys import T, X, Y, eval_bpoly, gradient, total_degree
from satopo.core.rat import sign, to_sympy
from satopo.core.roots import (
    AlgNumber,
    Number,
    as_alg,
    bisect,
    compare,
    eval_rational_function,
)
from satopo.exceptions import DegenerateInputError

logger = logging.getLogger(__name__)

LE: str = "le"
EQ: str = "eq"
GE: str = "ge"
FLAVORS: Tuple[str, str, str] = (LE, EQ, GE)


class CircleValue:
    """num(t) / den(t) at an algebraic parameter t, or a known number."""

    def __init__(
        self, parameter: AlgNumber, num: Poly, den: Poly, exact: Optional[AlgNumber] = None
    ):
        self.parameter: AlgNumber = parameter
        self.num: Poly = num
        self.den: Poly = den
        self._exact: Optional[AlgNumber] = exact

    @classmethod
    def of(cls, value: Number) -> "CircleValue":
        known: AlgNumber = as_alg(value)
        return cls(known, Poly(T, T, domain=QQ), Poly(1, T, domain=QQ), known)

    def enclosure(self) -> Optional[IsolInterval]:
        if self._exact is not None:
            return self._exact.interval
        den: IsolInterval = eval_upoly_interval(self.den, self.parameter.interval)
        if den.contains_zero():
            return None
        return eval_upoly_interval(self.num, self.parameter.interval) / den

    def refine(self) -> bool:
        """Bisect the enclosure; False when it is already a point."""
        if self._exact is not None:
            if self._exact.interval.is_point:
                return False
            self._exact = bisect(self._exact)
            return True
        if self.parameter.interval.is_point:
            return False
        self.parameter = bisect(self.parameter)
        return True

    def exact(self) -> AlgNumber:
        if self._exact is None:
            self._exact = eval_rational_function(self.parameter, self.num, self.den)
        return self._exact

    def __str__(self) -> str:
        return str(self.exact())


def compare_values(value: CircleValue, other: Union[Number, CircleValue]) -> int:
    """Exact sign of value - other."""
    right: CircleValue = other if isinstance(other, CircleValue) else CircleValue.of(other)
    for _ in range(get_setting("VALUE_REFINEMENTS")):
        left_iv, right_iv = value.enclosure(), right.enclosure()
        if left_iv is not None and right_iv is not None:
            if left_iv.hi < right_iv.lo:
                return -1
            if right_iv.hi < left_iv.lo:
                return 1
            if left_iv.is_point and right_iv.is_point:
                return sign(left_iv.lo - right_iv.lo)
        wider: CircleValue = right
        if right_iv is not None and (left_iv is None or left_iv.width >= right_iv.width):
            wider = value
        if not wider.refine():
            break

    return compare(value.exact(), right.exact())


@dataclass(frozen=True)
class CircleCritical:
    point: CirclePoint
    level: CircleValue = field(compare=False, hash=False)
    multiplicity: int
    circle_index: int

    @property
    def value(self) -> AlgNumber:
        return self.level.exact()


def tangency_polynomial(f: Poly, center: Tuple[Fraction, Fraction]) -> Poly:
    """(x - a1)·f_y - (y - a2)·f_x, the derivative of f along circles around the center."""
    fx, fy = gradient(f)
    a1, a2 = to_sympy(center[0]), to_sympy(center[1])
    return Poly((X - a1) * fy.as_expr() - (Y - a2) * fx.as_expr(), X, Y, domain=QQ)


def value_on_circle(f: Poly, c: Circle, point: CirclePoint) -> CircleValue:
    if point.is_antipode:
        return CircleValue.of(eval_bpoly(f, *c.antipode))
    d: int = total_degree(f)
    return CircleValue(point.parameter, substitute(f, c), Poly((1 + T ** 2) ** d, T, domain=QQ))


@lru_cache(maxsize=256)
def circle_critical_points(f: Poly, c: Circle) -> Tuple[CircleCritical, ...]:
    """Critical points of f restricted to the circle, in circular order, with their values."""
    h: Poly = tangency_polynomial(f, c.center)
    if h.is_zero or vanishes_on(h, c):
        raise DegenerateInputError(f"{f.as_expr()} is constant on {c}.")
    profile: CircleProfile = curve_circle_intersections(h, c)
    values: List[CircleValue] = [value_on_circle(f, c, e.point) for e in profile.events]
    count: int = len(values)
    critical: List[CircleCritical] = []
    for i, event in enumerate(profile.events):
        before: int = compare_values(values[i - 1], values[i]) if count > 1 else 0
        after: int = compare_values(values[(i + 1) % count], values[i]) if count > 1 else 0
        index: int = 0
        if before > 0 and after > 0:
            index = 1
        elif before < 0 and after < 0:
            index = -1
        critical.append(CircleCritical(event.point, values[i], event.multiplicity, index))

    return tuple(critical)


def _relation(value: CircleValue, level: Number, side: int) -> int:
    """Sign of value - (level + side·δ) for an infinitesimal δ > 0."""
    cmp: int = compare_values(value, level)
    if side == 0 or cmp != 0:
        return cmp
    return -side


def _atoms(f: Poly, c: Circle, level: Number, side: int) -> List[int]:
    """
    The circle cut at the critical points of f and at the level points, in
    circular order, each piece tagged with the sign of f - level on it.
    """
    critical: Tuple[CircleCritical, ...] = circle_critical_points(f, c)
    relations: List[int] = [_relation(q.level, level, side) for q in critical]
    atoms: List[int] = []
    count: int = len(critical)
    for i in range(count):
        start, end = relations[i], relations[(i + 1) % count]
        atoms.append(start)
        if count == 1:
            atoms.append(-start if start != 0 else 1)
        elif start != end and start != 0 and end != 0:
            atoms.extend([start, 0, end])
        elif start != 0:
            atoms.append(start)
        elif end != 0:
            atoms.append(end)
        else:
            atoms.append(compare_values(critical[(i + 1) % count].level, critical[i].level))

    return atoms


def level_points(f: Poly, c: Circle, level: Number, side: int = 0) -> int:
    """Number of points of {f = level + side·δ} on the circle."""
    return sum(1 for atom in _atoms(f, c, level, side) if atom == 0)


def sublevel_chi(f: Poly, c: Circle, level: Number, flavor: str, side: int = 0) -> int:
    """Euler characteristic of {f flavor level + side·δ} on the circle."""
    if flavor == EQ:
        return level_points(f, c, level, side)
    inside: List[bool] = [
        (atom <= 0) if flavor == LE else (atom >= 0) for atom in _atoms(f, c, level, side)
    ]
    if all(inside) or not any(inside):
        return 0
    runs: int = sum(1 for i in range(len(inside)) if inside[i] and not inside[i - 1])

    return runs
