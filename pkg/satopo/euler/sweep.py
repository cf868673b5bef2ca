"""
Cylindrical sweep of a set given by sign conditions on polynomials in (x, y).

The zero set of all the condition polynomials is sheared until its y-leading
coefficient is constant. The plane then splits into open strips over the gaps
between the discriminant roots and vertical fibers over those roots. Every
cell is classified by the sign vector of the conditions at one sample point.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import List, Sequence, Tuple

from sympy import Poly, QQ

from satopo.conf import get_setting
from satopo.core.polys import X, Y, bpoly, restrict, shear, sign_bpoly, top_form_at, total_degree
from satopo.core.polys import transpose as transpose_poly
from satopo.core.rat import to_sympy
from satopo.core.resultants import resultant
from satopo.core.roots import AlgNumber, algebraic, compare, gap_samples, sign_at, sqf
from satopo.core.solver import SolutionPoint, shear_candidates, solve_system
from satopo.exceptions import InstabilityError
from satopo.infinity.links import Condition, satisfies

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CellComplexSummary:
    """Open cells of the sweep lying inside the set, by dimension."""

    vertices: int
    edges: int
    faces: int
    abscissas: Tuple[AlgNumber, ...] = ()

    @property
    def chi_c(self) -> int:
        return self.vertices - self.edges + self.faces

    def __add__(self, other: "CellComplexSummary") -> "CellComplexSummary":
        return CellComplexSummary(
            self.vertices + other.vertices,
            self.edges + other.edges,
            self.faces + other.faces,
            self.abscissas + other.abscissas,
        )


def zero_set(polys: Sequence[Poly]) -> Poly:
    """Square-free product of the nonconstant polynomials."""
    product: Poly = bpoly(1)
    for p in polys:
        if total_degree(p) > 0:
            product = product * p
    if total_degree(product) <= 0:
        return product

    return bpoly(product.sqf_part().as_expr())


def vertical_shear(curve: Poly) -> Fraction:
    retries: int = get_setting("SHEAR_RETRIES")
    for _, k in zip(range(retries), shear_candidates()):
        if top_form_at(curve, k) != 0:
            return k

    raise InstabilityError(
        f"No shear makes {curve.as_expr()} monic in y within {retries} attempts."
    )


def _strip(polys: List[Poly], conditions: Sequence[Condition], curve: Poly, x0: Fraction):
    """Cells over an open x-interval, sampled at the rational abscissa x0."""
    ys: List[AlgNumber] = algebraic(restrict(curve, X, x0))
    columns: List[Poly] = [restrict(p, X, x0) for p in polys]
    edges: int = sum(
        1 for y in ys if satisfies([sign_at(column, y) for column in columns], conditions)
    )
    faces: int = sum(
        1
        for r in gap_samples(ys)
        if satisfies([sign_bpoly(p, x0, r) for p in polys], conditions)
    )

    return CellComplexSummary(0, edges, faces)


def fiber_points(curve: Poly, u: AlgNumber) -> List[SolutionPoint]:
    """Points of {curve = 0} on the vertical line x = u, ordered by y."""
    if u.is_rational:
        line: Poly = bpoly(X - to_sympy(u.rational_value()))
    else:
        line = bpoly(u.defining.as_expr().subs(u.defining.gens[0], X))
    points: List[SolutionPoint] = [s for s in solve_system(curve, line) if compare(s.x, u) == 0]

    return sorted(points, key=cmp_to_key(lambda p, q: compare(p.y, q.y)))


def _fiber(polys: List[Poly], conditions: Sequence[Condition], curve: Poly, u: AlgNumber):
    """Cells on the vertical line over the event abscissa u."""
    points: List[SolutionPoint] = fiber_points(curve, u)
    vertices: int = sum(
        1 for s in points if satisfies([s.sign_of(p) for p in polys], conditions)
    )
    edges: int = sum(
        1
        for r in gap_samples([s.y for s in points])
        if satisfies([sign_at(restrict(p, Y, r), u) for p in polys], conditions)
    )

    return CellComplexSummary(vertices, edges, 0, (u,))


def sweep(conditions: Sequence[Condition], transposed: bool = False) -> CellComplexSummary:
    """Cell counts of {p_i flavor_i 0 for all i}, sweeping along x or along y."""
    polys: List[Poly] = [transpose_poly(p) if transposed else p for p, _ in conditions]
    curve: Poly = zero_set(polys)
    if total_degree(curve) <= 0:
        signs: List[int] = [sign_bpoly(p, Fraction(0), Fraction(0)) for p in polys]
        inside: bool = satisfies(signs, conditions)
        return CellComplexSummary(0, 0, 1 if inside else 0)

    k: Fraction = vertical_shear(curve)
    curve = shear(curve, k)
    polys = [shear(p, k) for p in polys]
    discriminant: Poly = resultant(curve, Poly(curve.diff(Y), X, Y, domain=QQ), Y)
    events: List[AlgNumber] = []
    if discriminant.degree() > 0:
        events = algebraic(sqf(discriminant))
    logger.debug(f"Sweep of {curve.as_expr()} with shear {k}: {len(events)} events")

    summary: CellComplexSummary = CellComplexSummary(0, 0, 0)
    for x0 in gap_samples(events):
        summary += _strip(polys, conditions, curve, x0)
    for u in events:
        summary += _fiber(polys, conditions, curve, u)

    return summary


def chi_c_of_set(conditions: Sequence[Condition], transposed: bool = False) -> int:
    return sweep(conditions, transposed).chi_c
