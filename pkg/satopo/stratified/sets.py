"""
Closed plane sets with two strata: a region {g <= 0} with its boundary curve, or
a smooth curve {g = 0} alone.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from sympy import Poly

from satopo.circle.levels import EQ, LE
from satopo.circle.winding import gradient_zeros
from satopo.core.polys import bpoly, total_degree
from satopo.core.rat import to_sympy
from satopo.core.solver import SolutionPoint
from satopo.euler.engine import chi_of_set
from satopo.euler.sweep import sweep
from satopo.exceptions import DegenerateInputError
from satopo.infinity.links import Condition, set_is_bounded, set_link_chi

logger = logging.getLogger(__name__)

REGION: str = "region"
CURVE: str = "curve"
KINDS: List[str] = [REGION, CURVE]


@dataclass(frozen=True)
class PlaneSet:
    g: Poly
    kind: str

    @property
    def conditions(self) -> List[Condition]:
        return [(self.g, LE if self.kind == REGION else EQ)]

    def cut(self, f: Poly, alpha: Fraction, flavor: str) -> List[Condition]:
        """Conditions of X ∩ {f flavor alpha}."""
        return self.conditions + [(bpoly(f.as_expr() - to_sympy(alpha)), flavor)]

    def chi(self) -> int:
        return chi_of_set(self.conditions)

    def link_chi(self) -> int:
        return set_link_chi(self.conditions)

    def is_compact(self) -> bool:
        return set_is_bounded(self.conditions)

    def __str__(self) -> str:
        relation: str = "<=" if self.kind == REGION else "="
        return f"{{{self.g.as_expr()} {relation} 0}}"


def plane_set(g: Poly, kind: str = REGION) -> PlaneSet:
    """A PlaneSet after certifying that {g = 0} is a smooth curve."""
    if kind not in KINDS:
        raise DegenerateInputError(f"Unknown set kind {kind!r}; expected one of {KINDS}.")
    if total_degree(g) <= 0:
        raise DegenerateInputError(f"{g.as_expr()} does not define a curve.")
    try:
        singular: List[SolutionPoint] = [s for s in gradient_zeros(g) if s.sign_of(g) == 0]
    except DegenerateInputError as exc:
        raise DegenerateInputError(f"{{{g.as_expr()} = 0}} is not a smooth curve: {exc}") from exc
    if singular:
        raise DegenerateInputError(
            f"{{{g.as_expr()} = 0}} is singular at {', '.join(str(s) for s in singular)}."
        )
    if kind == REGION and sweep([(g, LE)]).faces == 0:
        raise DegenerateInputError(f"{{{g.as_expr()} < 0}} is empty.")
    logger.debug(f"Plane set {{{g.as_expr()}}} of kind {kind} certified smooth")

    return PlaneSet(g, kind)
