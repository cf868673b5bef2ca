"""
The polar curve Γ of f with respect to a base point, and radii beyond which
circles around the base point see only the behavior of f at infinity.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from sympy import Poly

from satopo.circle.levels import tangency_polynomial
from satopo.circle.winding import gradient_radius
from satopo.core.polys import X, Y, total_degree
from satopo.core.resultants import resultant
from satopo.core.roots import cauchy_root_bound
from satopo.core.solver import box_bound, solve_system
from satopo.exceptions import DegenerateInputError, InfiniteCriticalSetError

logger = logging.getLogger(__name__)

BasePoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class GammaCurve:
    h: Poly
    base: BasePoint


def gamma_polynomial(f: Poly, a: BasePoint) -> GammaCurve:
    h: Poly = tangency_polynomial(f, a)
    if h.is_zero:
        raise DegenerateInputError(
            f"The polar curve of {f.as_expr()} at ({a[0]}, {a[1]}) vanishes identically."
        )
    return GammaCurve(h, a)


def common_zero_bound(p: Poly, q: Poly) -> Fraction:
    """B such that every common real zero of p and q has |x| + |y| <= B."""
    if total_degree(p) <= 0 or total_degree(q) <= 0:
        return Fraction(0)
    res_x: Poly = resultant(p, q, Y)
    res_y: Poly = resultant(p, q, X)
    if res_x.is_zero or res_y.is_zero:
        try:
            return box_bound(solve_system(p, q))
        except InfiniteCriticalSetError as exc:
            raise DegenerateInputError(
                f"{p.as_expr()} and {q.as_expr()} share a curve; choose another base point."
            ) from exc
    return cauchy_root_bound(res_x) + cauchy_root_bound(res_y)


@lru_cache(maxsize=1024)
def tangency_bound(curve: Poly, a: BasePoint) -> Fraction:
    """Bound on the points where {curve = 0} is tangent to a circle around a."""
    if total_degree(curve) <= 0:
        return Fraction(0)
    return common_zero_bound(curve, tangency_polynomial(curve, a))


@lru_cache(maxsize=256)
def _base_bound(f: Poly, a: BasePoint) -> Fraction:
    gamma: GammaCurve = gamma_polynomial(f, a)
    return max(
        gradient_radius(f) if total_degree(f) > 1 else Fraction(0),
        tangency_bound(gamma.h, a),
    )


def certified_radius(f: Poly, a: BasePoint, extra: Sequence[Poly] = ()) -> Fraction:
    bounds: List[Fraction] = [_base_bound(f, a)]
    bounds.extend(tangency_bound(curve, a) for curve in extra)
    radius: Fraction = abs(a[0]) + abs(a[1]) + max(bounds) + 1
    logger.debug(f"Certified radius {radius} for {f.as_expr()} at {a}")

    return radius


def aligned_radius(f: Poly, a: BasePoint, extra: Sequence[Poly] = ()) -> Fraction:
    """
    A certified radius of the form certified_radius(f, a)·2^k, so that the circles
    used for every level of f around a belong to one doubling sequence.
    """
    radius: Fraction = certified_radius(f, a)
    needed: Fraction = certified_radius(f, a, extra)
    while radius < needed:
        radius *= 2

    return radius


def basepoint_candidates(seed: int) -> Iterator[BasePoint]:
    """Small random rational points, deterministic for a given seed."""
    rng: random.Random = random.Random(seed)
    while True:
        yield (
            Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
        )


def admissible_basepoint(f: Poly, a: BasePoint, extra: Sequence[Poly] = ()) -> bool:
    try:
        certified_radius(f, a, extra)
    except DegenerateInputError as exc:
        logger.debug(f"Base point {a} rejected: {exc}")
        return False

    return True
