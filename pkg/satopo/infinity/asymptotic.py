"""
Asymptotic critical values of f and the jump sets of its links at infinity.

Candidates are the finite values of f at which a branch of the polar curve can
escape to infinity: roots of the leading coefficients of the eliminants of
(h, f - t). A candidate is kept when one of the three links at infinity jumps
there, or when a branch of the polar curve is certified to tend to it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy import Poly

from satopo.circle.circles import Circle
from satopo.circle.levels import (
    EQ,
    FLAVORS,
    GE,
    LE,
    CircleCritical,
    circle_critical_points,
    compare_values,
)
from satopo.conf import get_setting
from satopo.core.polys import T
from satopo.core.rat import to_sympy
from satopo.core.resultants import escape_polynomials
from satopo.core.roots import (
    AlgNumber,
    Number,
    algebraic,
    compare,
    distinct_sorted,
    gap_samples,
)
from satopo.exceptions import DegenerateInputError
from satopo.infinity.gamma import (
    BasePoint,
    admissible_basepoint,
    aligned_radius,
    basepoint_candidates,
    gamma_polynomial,
)
from satopo.infinity.links import link_chi

logger = logging.getLogger(__name__)

LAMBDA: str = "lambda"


@dataclass(frozen=True)
class JumpSet:
    values: Tuple[AlgNumber, ...]
    flavor: str

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def contains(self, value: Number) -> bool:
        return any(compare(v, value) == 0 for v in self.values)

    def union(self, other: "JumpSet") -> List[AlgNumber]:
        return distinct_sorted(list(self.values) + list(other.values))


@dataclass(frozen=True)
class LinkTable:
    """Links at infinity at each candidate and at a rational sample in every gap."""

    candidates: Tuple[AlgNumber, ...]
    samples: Tuple[Fraction, ...]
    at_candidates: Dict[str, Tuple[int, ...]]
    at_samples: Dict[str, Tuple[int, ...]]

    def jumps(self, i: int, flavor: str) -> bool:
        value: int = self.at_candidates[flavor][i]
        return value != self.at_samples[flavor][i] or value != self.at_samples[flavor][i + 1]


def asymptotic_candidates(f: Poly, a: BasePoint) -> List[AlgNumber]:
    h: Poly = gamma_polynomial(f, a).h
    candidates: List[AlgNumber] = []
    try:
        leads: List[Poly] = escape_polynomials(h.as_expr(), f.as_expr() - T, T)
    except DegenerateInputError as exc:
        raise DegenerateInputError(
            f"The polar curve of {f.as_expr()} at ({a[0]}, {a[1]}) contains a level curve."
        ) from exc
    for lead in leads:
        if lead.degree() > 0:
            candidates.extend(algebraic(lead))

    return distinct_sorted(candidates)


@lru_cache(maxsize=64)
def link_table(f: Poly, a: BasePoint) -> LinkTable:
    candidates: List[AlgNumber] = asymptotic_candidates(f, a)
    samples: List[Fraction] = gap_samples(candidates)
    at_candidates: Dict[str, Tuple[int, ...]] = {}
    at_samples: Dict[str, Tuple[int, ...]] = {}
    for flavor in FLAVORS:
        at_candidates[flavor] = tuple(link_chi(f, c, flavor, a) for c in candidates)
        at_samples[flavor] = tuple(link_chi(f, s, flavor, a) for s in samples)

    return LinkTable(tuple(candidates), tuple(samples), at_candidates, at_samples)


def has_bounded_branch(f: Poly, a: BasePoint, table: LinkTable, i: int) -> bool:
    """
    Whether a branch of the polar curve tends to candidate i. Past the radius
    certified for the two gap samples around it, the polar curve crosses circles
    transversally and never meets those levels, so a polar point strictly between
    them lies on an unbounded branch that stays in the strip. Its limit is a
    candidate in the strip, hence candidate i.
    """
    lo, hi = table.samples[i], table.samples[i + 1]
    radius: Fraction = aligned_radius(f, a, [f - to_sympy(lo), f - to_sympy(hi)])
    c: Circle = Circle(a, radius)
    inside: List[CircleCritical] = [
        q
        for q in circle_critical_points(f, c)
        if compare_values(q.level, lo) > 0 and compare_values(q.level, hi) < 0
    ]
    logger.debug(f"{len(inside)} polar points in ({lo}, {hi}) on {c}")

    return bool(inside)


def lambda_set(f: Poly, a: BasePoint) -> JumpSet:
    table: LinkTable = link_table(f, a)
    kept: List[AlgNumber] = []
    for i, candidate in enumerate(table.candidates):
        if any(table.jumps(i, flavor) for flavor in FLAVORS) or has_bounded_branch(f, a, table, i):
            kept.append(candidate)
        else:
            logger.debug(f"Candidate {candidate} discarded for {f.as_expr()}")

    return JumpSet(tuple(kept), LAMBDA)


def jump_sets(f: Poly, a: BasePoint) -> Tuple[JumpSet, JumpSet, JumpSet]:
    """The values of the asymptotic set where the links of {f <= t}, {f = t}, {f >= t} jump."""
    table: LinkTable = link_table(f, a)
    members: JumpSet = lambda_set(f, a)
    sets: Dict[str, List[AlgNumber]] = {flavor: [] for flavor in FLAVORS}
    for i, candidate in enumerate(table.candidates):
        if not members.contains(candidate):
            continue
        for flavor in FLAVORS:
            if table.jumps(i, flavor):
                sets[flavor].append(candidate)

    return (
        JumpSet(tuple(sets[LE]), LE),
        JumpSet(tuple(sets[EQ]), EQ),
        JumpSet(tuple(sets[GE]), GE),
    )


def _same_values(left: JumpSet, right: JumpSet) -> bool:
    return len(left) == len(right) and all(
        compare(u, v) == 0 for u, v in zip(left.values, right.values)
    )


def generic_basepoint(f: Poly, seed: Optional[int] = None) -> BasePoint:
    """A base point whose polar curve is usable and whose asymptotic set is reproducible."""
    if seed is None:
        seed = get_setting("SATOPO_SEED")
    retries: int = get_setting("BASEPOINT_RETRIES")
    check: bool = get_setting("CHECK_INDEPENDENCE")
    witnesses: int = get_setting("INDEPENDENCE_SEEDS") - 1
    admissible: List[BasePoint] = []
    for _, a in zip(range(retries), basepoint_candidates(seed)):
        if not admissible_basepoint(f, a):
            continue
        admissible.append(a)
        if not check:
            return a
        if len(admissible) <= witnesses:
            continue
        reference: JumpSet = lambda_set(f, admissible[-witnesses - 1])
        if all(_same_values(reference, lambda_set(f, b)) for b in admissible[-witnesses:]):
            return admissible[-witnesses - 1]
        logger.warning(f"Asymptotic set of {f.as_expr()} depends on the base point")

    raise DegenerateInputError(f"No generic base point for {f.as_expr()} in {retries} draws.")


def is_proper(f: Poly, a: Optional[BasePoint] = None) -> bool:
    if a is None:
        a = generic_basepoint(f)
    return len(lambda_set(f, a)) == 0 and link_chi(f, Fraction(0), EQ, a) == 0


def sekalski_sum(f: Poly, a: Optional[BasePoint] = None) -> int:
    """1 + sum of r(f - λ) over asymptotic values minus sum of r at the gap samples."""
    if a is None:
        a = generic_basepoint(f)
    values: List[AlgNumber] = list(lambda_set(f, a).values)
    total: int = 1
    for value in values:
        total += link_chi(f, value, EQ, a) // 2
    for sample in gap_samples(values):
        total -= link_chi(f, sample, EQ, a) // 2

    return total


def jump_unions_agree(f: Poly, a: BasePoint) -> bool:
    le, eq, ge = jump_sets(f, a)
    union_le_ge: List[AlgNumber] = le.union(ge)
    union_le_eq: List[AlgNumber] = le.union(eq)
    union_eq_ge: List[AlgNumber] = eq.union(ge)
    return _equal_lists(union_le_ge, union_le_eq) and _equal_lists(union_le_ge, union_eq_ge)


def _equal_lists(left: List[AlgNumber], right: List[AlgNumber]) -> bool:
    return len(left) == len(right) and all(compare(u, v) == 0 for u, v in zip(left, right))
