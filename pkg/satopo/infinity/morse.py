import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from sympy import Poly, QQ

from satopo.circle.circles import Circle, CirclePoint, sign_on_circle
from satopo.circle.levels import CircleValue, circle_critical_points, compare_values
from satopo.core.intervals import IsolInterval
from satopo.core.polys import X, Y, gradient
from satopo.core.rat import to_sympy
from satopo.core.roots import AlgNumber, Number
from satopo.exceptions import PreconditionError
from satopo.infinity.gamma import BasePoint, aligned_radius
from satopo.infinity.links import rational_level, stabilize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CircleCritPoint:
    point: CirclePoint
    mu_sign: int
    level: CircleValue = field(compare=False, hash=False)
    circle_index: int

    @property
    def value(self) -> AlgNumber:
        return self.level.exact()

    @property
    def f_interval(self) -> IsolInterval:
        enclosure: Optional[IsolInterval] = self.level.enclosure()
        return enclosure if enclosure is not None else self.value.interval


def radial_polynomial(f: Poly, a: BasePoint) -> Poly:
    """(x - a1)·f_x + (y - a2)·f_y, the derivative of f away from the base point."""
    fx, fy = gradient(f)
    a1, a2 = to_sympy(a[0]), to_sympy(a[1])
    return Poly((X - a1) * fx.as_expr() + (Y - a2) * fy.as_expr(), X, Y, domain=QQ)


def circle_morse_data(f: Poly, a: BasePoint, radius: Fraction) -> List[CircleCritPoint]:
    c: Circle = Circle(a, radius)
    radial: Poly = radial_polynomial(f, a)
    data: List[CircleCritPoint] = []
    for q in circle_critical_points(f, c):
        mu_sign: int = sign_on_circle(radial, c, q.point)
        if mu_sign == 0:
            raise PreconditionError(
                f"Radius {radius} is not certified for {f.as_expr()}: "
                f"the gradient vanishes on the circle."
            )
        data.append(CircleCritPoint(q.point, mu_sign, q.level, q.circle_index))

    return data


def _sums(data: List[CircleCritPoint], alpha: Number) -> Optional[Tuple[int, int, int]]:
    lam, mu, nu = 0, 0, 0
    for q in data:
        position: int = compare_values(q.level, alpha)
        if position == 0:
            return None
        if position > 0 and q.mu_sign < 0:
            lam += q.circle_index
        if position < 0 and q.mu_sign > 0:
            mu += q.circle_index
        if position < 0 and q.mu_sign < 0:
            nu += q.circle_index

    return lam, mu, nu


def lambda_mu_nu(f: Poly, a: BasePoint, alpha: Number) -> Tuple[int, int, int]:
    """Index sums over the critical points of f on large circles, split by alpha."""
    level: Optional[Fraction] = rational_level(alpha)
    extra: List[Poly] = [f - to_sympy(level)] if level is not None else []
    radius: Fraction = aligned_radius(f, a, extra)

    return stabilize(
        lambda c: _sums(circle_morse_data(f, a, c.radius), alpha),
        Circle(a, radius),
        f"Correction terms of {f.as_expr()} at {alpha}",
    )
