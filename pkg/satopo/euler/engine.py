"""
Euler characteristics of {f <= α}, {f = α} and {f >= α}.

χ_c comes from the cylindrical sweep at rational levels and from a graph count
at algebraic ones; χ adds the Euler characteristic of the link at infinity.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import Poly

from satopo.circle.levels import EQ, GE, LE
from satopo.core.polys import bpoly, total_degree
from satopo.core.rat import to_rat, to_sympy
from satopo.core.roots import (
    AlgNumber,
    Number,
    compare,
    distinct_sorted,
    gap_samples,
    rational_above,
    rational_below,
    separating_rational,
)
from satopo.critical.points import (
    CriticalPoint,
    critical_values,
    find_critical_points,
    local_counts,
)
from satopo.euler.sweep import chi_c_of_set
from satopo.exceptions import DegenerateInputError, HypothesisViolation, InstabilityError
from satopo.infinity.asymptotic import generic_basepoint, jump_sets, lambda_set
from satopo.infinity.gamma import BasePoint
from satopo.infinity.links import Condition, link_chi, rational_level, set_link_chi

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberProfile:
    """χ of the fibers {f = t}: one value per breakpoint and one per open gap."""

    breakpoints: Tuple[AlgNumber, ...]
    at_breakpoints: Tuple[int, ...]
    plateaus: Tuple[int, ...]

    def value_at(self, t: Number) -> int:
        for i, b in enumerate(self.breakpoints):
            position: int = compare(t, b)
            if position == 0:
                return self.at_breakpoints[i]
            if position < 0:
                return self.plateaus[i]
        return self.plateaus[-1]


def level_conditions(f: Poly, alpha: Fraction, flavor: str) -> List[Condition]:
    g: Poly = bpoly(f.as_expr() - to_sympy(alpha))
    if g.is_zero:
        raise DegenerateInputError(
            f"{f.as_expr()} is identically {alpha}; every level set is full."
        )
    return [(g, flavor)]


def breakpoints(f: Poly, a: Optional[BasePoint] = None) -> List[AlgNumber]:
    """Critical values together with the asymptotic values of f."""
    if a is None:
        a = generic_basepoint(f)
    return distinct_sorted(critical_values(f) + list(lambda_set(f, a).values))


def _level_chi_c(f: Poly, gamma: AlgNumber) -> int:
    """χ_c of {f = γ} as a graph: critical points are vertices, the rest are open edges."""
    points: List[CriticalPoint] = find_critical_points(f)
    on_level: List[CriticalPoint] = [p for p in points if compare(p.value, gamma) == 0]
    ends: int = link_chi(f, gamma, EQ)
    for p in on_level:
        ends += local_counts(f, p, [q for q in points if q is not p]).at
    if ends % 2 != 0:
        raise InstabilityError(f"Odd number {ends} of edge ends on {{{f.as_expr()} = {gamma}}}.")

    return len(on_level) - ends // 2


def _algebraic_chi_c(f: Poly, gamma: AlgNumber, flavor: str) -> int:
    level: int = _level_chi_c(f, gamma)
    if flavor == EQ:
        return level
    values: List[AlgNumber] = breakpoints(f)
    if flavor == LE:
        below: List[AlgNumber] = [b for b in values if compare(b, gamma) < 0]
        c: Fraction = separating_rational(below[-1], gamma) if below else rational_below(gamma)
    else:
        above: List[AlgNumber] = [b for b in values if compare(b, gamma) > 0]
        c = separating_rational(gamma, above[0]) if above else rational_above(gamma)

    return chi_c(f, c, flavor) - chi_c(f, c, EQ) + level


def _constant_chi(f: Poly, alpha: Number, flavor: str) -> int:
    """Level sets of a constant are empty or the whole plane."""
    position: int = compare(to_rat(f.as_expr()), alpha)
    if position == 0:
        raise DegenerateInputError(
            f"{f.as_expr()} is identically {alpha}; every level set is full."
        )
    inside: bool = (flavor == LE and position < 0) or (flavor == GE and position > 0)
    return 1 if inside else 0


def chi_c(f: Poly, alpha: Number, flavor: str) -> int:
    """Euler characteristic with compact supports of {f flavor alpha}."""
    if total_degree(f) <= 0:
        return _constant_chi(f, alpha, flavor)
    level: Optional[Fraction] = rational_level(alpha)
    if level is None:
        return _algebraic_chi_c(f, alpha, flavor)
    return chi_c_of_set(level_conditions(f, level, flavor))


def chi(f: Poly, alpha: Number, flavor: str) -> int:
    """Euler characteristic of {f flavor alpha}, as χ_c plus the link at infinity."""
    if total_degree(f) <= 0:
        return _constant_chi(f, alpha, flavor)
    value: int = chi_c(f, alpha, flavor) + link_chi(f, alpha, flavor)
    logger.debug(f"χ({{{f.as_expr()} {flavor} {alpha}}}) = {value}")

    return value


def chi_of_set(conditions: Sequence[Condition]) -> int:
    return chi_c_of_set(conditions) + set_link_chi(conditions)


def chi_of_plane(f: Poly, alpha: Fraction = Fraction(0)) -> int:
    """χ(R²) glued from {f <= α} and {f >= α} along {f = α}."""
    return chi(f, alpha, LE) + chi(f, alpha, GE) - chi(f, alpha, EQ)


def plateau_neighbours(values: List[AlgNumber], samples: List[Fraction], i: int) -> List[Fraction]:
    """Two more rationals in the gap of samples[i], one on each side of it."""
    sample: Fraction = samples[i]
    left: Fraction = sample - 1 if i == 0 else separating_rational(values[i - 1], sample)
    right: Fraction = sample + 1 if i == len(values) else separating_rational(sample, values[i])

    return [left, right]


def fiber_profile(f: Poly, a: Optional[BasePoint] = None) -> FiberProfile:
    """χ({f = t}) as a step function of t, checked for constancy on every gap."""
    if a is None:
        a = generic_basepoint(f)
    le, _, ge = jump_sets(f, a)
    values: List[AlgNumber] = distinct_sorted(
        critical_values(f) + list(le.values) + list(ge.values)
    )
    samples: List[Fraction] = gap_samples(values)
    plateaus: List[int] = []
    for i, sample in enumerate(samples):
        plateau: int = chi(f, sample, EQ)
        for t in plateau_neighbours(values, samples, i):
            if chi(f, t, EQ) != plateau:
                raise HypothesisViolation(
                    f"χ of the fibers of {f.as_expr()} changes between {sample} and {t}."
                )
        plateaus.append(plateau)
    at_breakpoints: List[int] = [chi(f, b, EQ) for b in values]
    logger.info(f"Fiber profile of {f.as_expr()}: {len(values)} breakpoints")

    return FiberProfile(tuple(values), tuple(at_breakpoints), tuple(plateaus))
