"""
Generic linear functions on a plane set: how the Euler characteristics of the
slices X ∩ {v* σ α} and of their links at infinity follow from the critical
points of v* and -v* on X.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from sympy import Poly

from satopo.circle.levels import EQ, GE, LE
from satopo.core.roots import AlgNumber, compare
from satopo.euler.engine import chi_of_set
from satopo.exceptions import HypothesisViolation, PreconditionError
from satopo.infinity.links import set_link_chi
from satopo.stratified.critical import StratCriticalPoint, stratified_critical_points
from satopo.stratified.directions import Direction, bad_directions
from satopo.stratified.sets import PlaneSet

logger = logging.getLogger(__name__)

Identity = Tuple[str, int, int]


@dataclass(frozen=True)
class LinearMorseSummary:
    direction: Direction
    alpha: Fraction
    points: Tuple[StratCriticalPoint, ...]
    above: int
    below: int
    total: int
    co_total: int
    chi_x: int
    chi_le: int
    chi_eq: int
    chi_ge: int
    link_x: int
    link_le: int
    link_eq: int
    link_ge: int

    def slice_identities(self) -> List[Identity]:
        return [
            ("ge - eq", self.chi_ge - self.chi_eq, self.above),
            ("le - eq", self.chi_le - self.chi_eq, self.below),
            ("eq", self.chi_eq, self.chi_x - self.above - self.below),
            ("ge - le", self.chi_ge - self.chi_le, self.above - self.below),
        ]

    def link_identities(self) -> List[Identity]:
        return [
            ("link le", self.link_le, self.chi_x - self.total),
            ("link ge", self.link_ge, self.chi_x - self.co_total),
            ("link eq", self.link_eq, 2 * self.chi_x - self.link_x - self.total - self.co_total),
        ]

    def check(self) -> None:
        for name, lhs, rhs in self.slice_identities() + self.link_identities():
            if lhs != rhs:
                raise HypothesisViolation(
                    f"{name} fails for {self.direction} at {self.alpha}: {lhs} != {rhs}."
                )


def require_generic(x_set: PlaneSet, direction: Direction) -> None:
    bad: List[AlgNumber] = bad_directions(x_set)
    if any(compare(b, direction.parameter) == 0 for b in bad):
        raise PreconditionError(f"Direction {direction} is not generic for {x_set}.")


def linear_morse_summary(
    x_set: PlaneSet, direction: Direction, alpha: Fraction = Fraction(0)
) -> LinearMorseSummary:
    require_generic(x_set, direction)
    v: Poly = direction.linear()
    points: List[StratCriticalPoint] = stratified_critical_points(x_set, v)
    above: int = sum(p.index for p in points if compare(p.value, alpha) > 0)
    below: int = sum(p.co_index for p in points if compare(p.value, alpha) < 0)
    summary: LinearMorseSummary = LinearMorseSummary(
        direction=direction,
        alpha=alpha,
        points=tuple(points),
        above=above,
        below=below,
        total=sum(p.index for p in points),
        co_total=sum(p.co_index for p in points),
        chi_x=x_set.chi(),
        chi_le=chi_of_set(x_set.cut(v, alpha, LE)),
        chi_eq=chi_of_set(x_set.cut(v, alpha, EQ)),
        chi_ge=chi_of_set(x_set.cut(v, alpha, GE)),
        link_x=x_set.link_chi(),
        link_le=set_link_chi(x_set.cut(v, alpha, LE)),
        link_eq=set_link_chi(x_set.cut(v, alpha, EQ)),
        link_ge=set_link_chi(x_set.cut(v, alpha, GE)),
    )
    logger.debug(f"Linear summary of {x_set} along {direction}: {len(points)} critical points")

    return summary


def direction_index_sum(x_set: PlaneSet, direction: Direction, negate: bool = False) -> int:
    """Σ ind(±v*, X, x) over the critical points of v* on X."""
    points: List[StratCriticalPoint] = stratified_critical_points(x_set, direction.linear())
    return sum(p.co_index if negate else p.index for p in points)
