"""
Critical points of a polynomial function on the plane.

Indices are local degrees of the gradient. The Milnor data around a critical
point (numbers of points of nearby fibers on a small circle) gives an
independent route to the same integers and feeds the local formula identities.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympy import Poly

from satopo.circle.circles import Circle
from satopo.circle.levels import EQ, GE, LE, level_points, sublevel_chi
from satopo.circle.winding import gradient_zeros, local_degree, separating_circle
from satopo.conf import get_setting
from satopo.core.intervals import Box
from satopo.core.roots import AlgNumber, distinct_sorted
from satopo.core.solver import SolutionPoint
from satopo.exceptions import InstabilityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CriticalPoint:
    solution: SolutionPoint
    local_degree: int
    value: AlgNumber
    ind_f: int
    ind_neg_f: int

    @property
    def box(self) -> Box:
        return self.solution.certain_box()

    def __str__(self) -> str:
        return f"{self.solution} deg {self.local_degree} value {self.value}"


@dataclass(frozen=True)
class LocalCounts:
    """Milnor data of a critical point on a small certified circle."""

    circle: Circle = field(compare=False)
    below: int
    at: int
    above: int
    sublevel: int
    superlevel: int
    witnesses: Dict[str, str] = field(default_factory=dict, compare=False, hash=False)

    @property
    def fiber_chi_below(self) -> int:
        return self.below // 2

    @property
    def fiber_chi_above(self) -> int:
        return self.above // 2


def find_critical_points(f: Poly) -> List[CriticalPoint]:
    solutions: List[SolutionPoint] = gradient_zeros(f)
    points: List[CriticalPoint] = []
    for solution in solutions:
        others: List[SolutionPoint] = [s for s in solutions if s is not solution]
        degree: int = local_degree(f, solution, others)
        points.append(CriticalPoint(solution, degree, solution.value_of(f), degree, degree))
    logger.debug(f"{len(points)} critical points for {f.as_expr()}")

    return points


def index(f: Poly, p: CriticalPoint) -> int:
    return p.ind_f


def critical_values(f: Poly) -> List[AlgNumber]:
    return distinct_sorted([p.value for p in find_critical_points(f)])


def _counts_on(f: Poly, c: Circle, value: AlgNumber) -> LocalCounts:
    return LocalCounts(
        circle=c,
        below=level_points(f, c, value, -1),
        at=level_points(f, c, value, 0),
        above=level_points(f, c, value, 1),
        sublevel=sublevel_chi(f, c, value, LE, -1),
        superlevel=sublevel_chi(f, c, value, GE, 1),
    )


def _offset_circle(solution: SolutionPoint, radius: Fraction) -> Tuple[SolutionPoint, Circle]:
    """
    A circle of the given radius around the point, centered radius/7 to the right
    of its box so a function symmetric about the point is not constant on it.
    """
    solution = solution.refined(radius / 8)
    xi, yi = solution.certain_box()
    return solution, Circle((xi.midpoint + radius / 7, yi.midpoint), radius)


def local_counts(
    f: Poly, p: CriticalPoint, others: Optional[List[CriticalPoint]] = None
) -> LocalCounts:
    """
    Crossings of the fibers just below, at and just above f(p) with a small
    circle around p, stabilized over halving radii.
    """
    if others is None:
        others = [q for q in find_critical_points(f) if q.solution != p.solution]
    separating: Circle = separating_circle(p.solution, [q.solution for q in others])
    # every other critical point is at least half the separating radius away from p
    radius: Fraction = separating.radius / 4
    solution, circle = _offset_circle(p.solution, radius)
    previous: LocalCounts = _counts_on(f, circle, p.value)
    for _ in range(get_setting("MAX_DOUBLINGS")):
        radius /= 2
        solution, circle = _offset_circle(solution, radius)
        current: LocalCounts = _counts_on(f, circle, p.value)
        if current == previous:
            logger.debug(f"Local counts stable at {circle}")
            return current
        previous = current

    raise InstabilityError(f"Local counts around {p} did not stabilize.")


def arc_index(f: Poly, p: CriticalPoint) -> int:
    """1 minus the number of arcs of the lower fiber inside a small disk."""
    return 1 - local_counts(f, p).fiber_chi_below


def milnor_index_check(f: Poly, p: CriticalPoint) -> bool:
    return arc_index(f, p) == index(f, p)


def flavored(counts: LocalCounts, flavor: str) -> int:
    return {LE: counts.sublevel, EQ: counts.at, GE: counts.superlevel}[flavor]
