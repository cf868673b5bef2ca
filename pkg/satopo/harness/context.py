"""
Per-input quantities consumed by the identities, each computed once.

A context stands for a closed set X and a function f on it: the whole plane with
a polynomial, or a plane set with a polynomial restricted to it. The Euler
characteristics of the slices come from the sweep, the index sums from the
critical point solvers and the correction terms from large circles. Every value
computed is recorded as a witness.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

from sympy import Poly

from satopo.circle.levels import EQ, GE, LE
from satopo.circle.winding import degree_at_infinity
from satopo.core.polys import bpoly
from satopo.core.roots import AlgNumber, Number, compare, distinct_sorted, gap_samples
from satopo.critical.points import CriticalPoint, LocalCounts, find_critical_points, local_counts
from satopo.euler.engine import chi, chi_of_plane, chi_of_set
from satopo.infinity.asymptotic import JumpSet, generic_basepoint, is_proper, jump_sets
from satopo.infinity.gamma import BasePoint
from satopo.infinity.links import link_chi, rational_level, set_link_chi
from satopo.infinity.morse import lambda_mu_nu
from satopo.stratified.critical import stratified_critical_points
from satopo.stratified.directions import Direction
from satopo.stratified.linear import LinearMorseSummary, linear_morse_summary
from satopo.stratified.sets import PlaneSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexedPoint:
    value: AlgNumber
    index: int
    co_index: int
    label: str


def sample_levels(breakpoints: List[AlgNumber]) -> List[Fraction]:
    """Rational levels below, between and above the breakpoints, plus the rational ones."""
    samples: List[Fraction] = gap_samples(breakpoints)
    if len(samples) == 1:
        picked: List[Fraction] = [samples[0] - 1, samples[0], samples[0] + 1]
    else:
        picked = [samples[0], samples[len(samples) // 2], samples[-1]]
    for b in breakpoints:
        level: Optional[Fraction] = rational_level(b)
        if level is not None:
            picked.append(level)

    return sorted(set(picked))


class Context:
    description: str = ""

    def __init__(self, alpha: Optional[Fraction] = None):
        self.input_alpha: Optional[Fraction] = alpha
        self.witnesses: Dict[str, Any] = {}
        self._memo: Dict[Tuple[str, ...], Any] = {}

    def _remember(self, key: Tuple[str, ...], compute) -> Any:
        if key not in self._memo:
            value = compute()
            self._memo[key] = value
            self.witnesses[" ".join(key)] = value
        return self._memo[key]

    @property
    def points(self) -> List[IndexedPoint]:
        raise NotImplementedError

    @property
    def breakpoints(self) -> List[AlgNumber]:
        raise NotImplementedError

    def compute_chi(self, alpha: Number, flavor: str) -> int:
        raise NotImplementedError

    def compute_link(self, alpha: Number, flavor: str) -> int:
        raise NotImplementedError

    def compute_chi_x(self) -> int:
        raise NotImplementedError

    def compute_link_x(self) -> int:
        raise NotImplementedError

    def compute_proper(self) -> bool:
        raise NotImplementedError

    def chi(self, alpha: Number, flavor: str) -> int:
        return self._remember(("chi", flavor, str(alpha)), lambda: self.compute_chi(alpha, flavor))

    def link(self, alpha: Number, flavor: str) -> int:
        return self._remember(
            ("link", flavor, str(alpha)), lambda: self.compute_link(alpha, flavor)
        )

    @property
    def chi_x(self) -> int:
        return self._remember(("chi", "X"), self.compute_chi_x)

    @property
    def link_x(self) -> int:
        return self._remember(("link", "X"), self.compute_link_x)

    @property
    def proper(self) -> bool:
        return self._remember(("proper",), self.compute_proper)

    @cached_property
    def alphas(self) -> List[Fraction]:
        if self.input_alpha is not None:
            return [self.input_alpha]
        return sample_levels(self.breakpoints)

    @cached_property
    def gamma_samples(self) -> List[Fraction]:
        return gap_samples(self.breakpoints)

    def total(self, negate: bool = False) -> int:
        return sum(p.co_index if negate else p.index for p in self.points)

    def above(self, alpha: Number, negate: bool = False) -> int:
        return sum(
            p.co_index if negate else p.index for p in self.points if compare(p.value, alpha) > 0
        )

    def below(self, alpha: Number, negate: bool = False) -> int:
        return sum(
            p.co_index if negate else p.index for p in self.points if compare(p.value, alpha) < 0
        )


class PlaneContext(Context):
    """f on the whole plane: indices are local degrees of the gradient."""

    def __init__(self, f: Poly, alpha: Optional[Fraction] = None, seed: Optional[int] = None):
        super().__init__(alpha)
        self.f: Poly = f
        self.seed: Optional[int] = seed
        self.description = f"poly: {f.as_expr()}"

    @cached_property
    def basepoint(self) -> BasePoint:
        a: BasePoint = generic_basepoint(self.f, self.seed)
        self.witnesses["base point"] = a
        return a

    @cached_property
    def critical_points(self) -> List[CriticalPoint]:
        return find_critical_points(self.f)

    @cached_property
    def points(self) -> List[IndexedPoint]:
        indexed: List[IndexedPoint] = [
            IndexedPoint(p.value, p.ind_f, p.ind_neg_f, str(p.solution))
            for p in self.critical_points
        ]
        self.witnesses["critical points"] = [
            {"point": p.label, "value": p.value, "degree": p.index} for p in indexed
        ]
        return indexed

    @cached_property
    def jumps(self) -> Tuple[JumpSet, JumpSet, JumpSet]:
        sets: Tuple[JumpSet, JumpSet, JumpSet] = jump_sets(self.f, self.basepoint)
        for jump_set in sets:
            self.witnesses[f"jumps {jump_set.flavor}"] = list(jump_set.values)
        return sets

    def jump_set(self, flavor: str) -> List[AlgNumber]:
        le, eq, ge = self.jumps
        return list({LE: le, EQ: eq, GE: ge}[flavor].values)

    @cached_property
    def breakpoints(self) -> List[AlgNumber]:
        le, _, ge = self.jumps
        values: List[AlgNumber] = distinct_sorted(
            [p.value for p in self.points] + list(le.values) + list(ge.values)
        )
        self.witnesses["breakpoints"] = values
        return values

    @property
    def degree_at_infinity(self) -> int:
        return self._remember(("degree at infinity",), lambda: degree_at_infinity(self.f))

    def lambda_mu_nu(self, alpha: Number) -> Tuple[int, int, int]:
        return self._remember(
            ("lambda mu nu", str(alpha)), lambda: lambda_mu_nu(self.f, self.basepoint, alpha)
        )

    def co_lambda_mu_nu(self, alpha: Number) -> Tuple[int, int, int]:
        """The correction terms of -f at -alpha."""
        return self._remember(
            ("lambda mu nu of -f", str(alpha)),
            lambda: lambda_mu_nu(bpoly(-self.f.as_expr()), self.basepoint, -alpha),
        )

    def local_counts(self, p: CriticalPoint) -> LocalCounts:
        others: List[CriticalPoint] = [q for q in self.critical_points if q is not p]
        return local_counts(self.f, p, others)

    def compute_chi(self, alpha: Number, flavor: str) -> int:
        return chi(self.f, alpha, flavor)

    def compute_link(self, alpha: Number, flavor: str) -> int:
        return link_chi(self.f, alpha, flavor, self.basepoint)

    def compute_chi_x(self) -> int:
        return chi_of_plane(self.f)

    def compute_link_x(self) -> int:
        return set_link_chi([])

    def compute_proper(self) -> bool:
        return is_proper(self.f, self.basepoint)


class SetContext(Context):
    """f restricted to a plane set with its two strata."""

    def __init__(
        self,
        x_set: PlaneSet,
        f: Poly,
        alpha: Optional[Fraction] = None,
        direction: Optional[Direction] = None,
        samples: Optional[int] = None,
    ):
        super().__init__(alpha)
        self.x_set: PlaneSet = x_set
        self.f: Poly = f
        self.direction: Optional[Direction] = direction
        self.samples: Optional[int] = samples
        self.description = f"{x_set} with f = {f.as_expr()}"
        self._summaries: Dict[Fraction, LinearMorseSummary] = {}

    def summary(self, direction: Direction) -> LinearMorseSummary:
        """The linear Morse data along a generic direction at the input level, or at 0."""
        if direction.parameter not in self._summaries:
            alpha: Fraction = Fraction(0) if self.input_alpha is None else self.input_alpha
            self._summaries[direction.parameter] = linear_morse_summary(
                self.x_set, direction, alpha
            )
        return self._summaries[direction.parameter]

    @cached_property
    def points(self) -> List[IndexedPoint]:
        indexed: List[IndexedPoint] = [
            IndexedPoint(p.value, p.index, p.co_index, str(p))
            for p in stratified_critical_points(self.x_set, self.f)
        ]
        self.witnesses["critical points"] = [
            {"point": p.label, "value": p.value, "index": p.index, "co-index": p.co_index}
            for p in indexed
        ]
        return indexed

    @cached_property
    def breakpoints(self) -> List[AlgNumber]:
        return distinct_sorted([p.value for p in self.points])

    def compute_chi(self, alpha: Number, flavor: str) -> int:
        return chi_of_set(self.x_set.cut(self.f, Fraction(alpha), flavor))

    def compute_link(self, alpha: Number, flavor: str) -> int:
        return set_link_chi(self.x_set.cut(self.f, Fraction(alpha), flavor))

    def compute_chi_x(self) -> int:
        return self.x_set.chi()

    def compute_link_x(self) -> int:
        return self.x_set.link_chi()

    def compute_proper(self) -> bool:
        return self.x_set.is_compact()
