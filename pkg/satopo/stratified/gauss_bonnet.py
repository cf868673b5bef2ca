"""
The Gauss-Bonnet measure of a plane set: the average over unit directions v of
the index sum of v* on the set.

The index sum is constant between consecutive bad directions, so the exact mode
weighs one value per arc by the arc length, with arc ends enclosed by interval
arithmetic. The sampled mode averages equally spaced directions.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import mpmath
from mpmath import iv

from satopo.circle.levels import EQ
from satopo.conf import get_setting
from satopo.core.roots import AlgNumber, compare, gap_samples, refine, separating_rational
from satopo.exceptions import (
    DegenerateInputError,
    HypothesisViolation,
    InstabilityError,
    PreconditionError,
)
from satopo.infinity.links import set_link_chi
from satopo.stratified.directions import Direction, bad_directions
from satopo.stratified.linear import direction_index_sum
from satopo.stratified.sets import PlaneSet

logger = logging.getLogger(__name__)

EXACT: str = "exact"
SAMPLED: str = "sampled"
MODES: List[str] = [EXACT, SAMPLED]

Integrand = Callable[[Direction], int]


@dataclass(frozen=True)
class Arc:
    """Open arc of directions between two bad parameters; None stands for s = ∓∞."""

    lo: Optional[AlgNumber]
    hi: Optional[AlgNumber]
    samples: Tuple[Fraction, Fraction]
    value: int


@dataclass(frozen=True)
class GaussBonnetResult:
    value: Fraction
    bound: Fraction
    mode: str

    def agrees_with(self, other: "GaussBonnetResult") -> bool:
        return abs(self.value - other.value) <= self.bound + other.bound

    def __str__(self) -> str:
        return f"{float(self.value):.6g} ± {float(self.bound):.2g} ({self.mode})"


def _rational(q: Fraction):
    return iv.mpf(q.numerator) / q.denominator


def _angle(s: Optional[AlgNumber], end: int, width: Fraction):
    """Enclosure of 2·atan(s); s = None is the antipodal direction at angle end·π."""
    if s is None:
        return end * iv.pi
    s = refine(s, width)
    enclosure = iv.mpf([_rational(s.interval.lo), _rational(s.interval.hi)])
    return 2 * iv.atan2(enclosure, iv.mpf(1))


def _evaluate(
    integrand: Integrand, sample: Fraction, hi: Optional[AlgNumber], step: Fraction
) -> int:
    """integrand at sample, moving towards hi when the direction is degenerate."""
    retries: int = get_setting("GAUSS_BONNET_RETRIES")
    for _ in range(retries):
        try:
            return integrand(Direction(sample))
        except (DegenerateInputError, InstabilityError, PreconditionError) as exc:
            logger.warning(f"Direction parameter {sample} rejected: {exc}")
            sample = separating_rational(sample, hi) if hi is not None else sample + step

    raise InstabilityError(f"No usable direction found near {sample} in {retries} attempts.")


def direction_arcs(x_set: PlaneSet, integrand: Integrand) -> List[Arc]:
    """The integrand on every arc between bad directions, checked at two samples per arc."""
    bad: List[AlgNumber] = bad_directions(x_set)
    arcs: List[Arc] = []
    for i, sample in enumerate(gap_samples(bad)):
        lo: Optional[AlgNumber] = bad[i - 1] if i > 0 else None
        hi: Optional[AlgNumber] = bad[i] if i < len(bad) else None
        second: Fraction = separating_rational(sample, hi) if hi is not None else sample + 1
        first_value: int = _evaluate(integrand, sample, hi, Fraction(1))
        second_value: int = _evaluate(integrand, second, hi, Fraction(1))
        if first_value != second_value:
            raise HypothesisViolation(
                f"The integrand changes inside the arc ({lo}, {hi}): "
                f"{first_value} != {second_value}."
            )
        arcs.append(Arc(lo, hi, (sample, second), first_value))

    return arcs


def exact_average(
    x_set: PlaneSet, integrand: Integrand, width: Optional[Fraction] = None
) -> GaussBonnetResult:
    if width is None:
        width = get_setting("GAUSS_BONNET_TOL")
    total = iv.mpf(0)
    for arc in direction_arcs(x_set, integrand):
        length = _angle(arc.hi, 1, width) - _angle(arc.lo, -1, width)
        total += arc.value * length
    total /= 2 * iv.pi
    # mid is rounded to the working precision
    bound: Fraction = Fraction(float(total.delta)) / 2 + Fraction(1, 2 ** 50)

    return GaussBonnetResult(Fraction(float(total.mid)), bound, EXACT)


def sampled_average(
    x_set: PlaneSet, integrand: Integrand, count: Optional[int] = None
) -> GaussBonnetResult:
    if count is None:
        count = get_setting("GAUSS_BONNET_SAMPLES")
    bad: List[AlgNumber] = bad_directions(x_set)
    step: Fraction = Fraction(1, 10 ** 6)
    values: List[int] = []
    for j in range(count):
        theta = -mpmath.pi + 2 * mpmath.pi * (j + mpmath.mpf(1) / 2) / count
        s: Fraction = Fraction(mpmath.nstr(mpmath.tan(theta / 2), 15)).limit_denominator(10 ** 6)
        while any(compare(b, s) == 0 for b in bad):
            s += step
        values.append(_evaluate(integrand, s, None, step))
    largest: int = max((abs(v) for v in values), default=0)

    return GaussBonnetResult(
        Fraction(sum(values), count), Fraction(2 * largest * (len(bad) + 1), count), SAMPLED
    )


def average(
    x_set: PlaneSet,
    integrand: Integrand,
    mode: str = EXACT,
    count: Optional[int] = None,
    width: Optional[Fraction] = None,
) -> GaussBonnetResult:
    if mode not in MODES:
        raise PreconditionError(f"Unknown Gauss-Bonnet mode {mode!r}; expected one of {MODES}.")
    if mode == EXACT:
        return exact_average(x_set, integrand, width)
    return sampled_average(x_set, integrand, count)


def gauss_bonnet(
    x_set: PlaneSet,
    mode: str = EXACT,
    count: Optional[int] = None,
    width: Optional[Fraction] = None,
) -> GaussBonnetResult:
    """Average over unit directions v of Σ ind(v*, X, x)."""
    result: GaussBonnetResult = average(
        x_set, lambda d: direction_index_sum(x_set, d), mode, count, width
    )
    logger.info(f"Gauss-Bonnet measure of {x_set}: {result}")

    return result


def gauss_bonnet_rhs(
    x_set: PlaneSet,
    mode: str = EXACT,
    count: Optional[int] = None,
    width: Optional[Fraction] = None,
) -> GaussBonnetResult:
    """χ(X) - χ(Lk(X))/2 - (average over v of χ(Lk(X ∩ {v* = 0})))/2."""
    sections: GaussBonnetResult = average(
        x_set,
        lambda d: set_link_chi(x_set.cut(d.linear(), Fraction(0), EQ)),
        mode,
        count,
        width,
    )
    value: Fraction = x_set.chi() - Fraction(x_set.link_chi(), 2) - sections.value / 2

    return GaussBonnetResult(value, sections.bound / 2, sections.mode)
