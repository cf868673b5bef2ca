"""
Sturm sequences, certified real root isolation and real algebraic numbers.

Every real algebraic number is a square-free defining polynomial together with an
isolating interval. Interval endpoints are never roots of the defining polynomial
unless the interval has collapsed onto an exact rational root.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import List, Optional, Tuple, Union

import sympy
from sympy import Poly, QQ

from satopo.conf import get_setting
from satopo.core.intervals import IsolInterval, eval_upoly_interval
from satopo.core.polys import V, eval_upoly, fraction_coeffs
from satopo.core.rat import sign, to_rat, to_sympy
from satopo.exceptions import (
    DegenerateInputError,
    EndpointRootError,
    InstabilityError,
    PreconditionError,
)

logger = logging.getLogger(__name__)


def sqf(p: Poly) -> Poly:
    """Monic square-free part."""
    if p.is_zero:
        raise DegenerateInputError("Square-free part of the zero polynomial.")
    if p.degree() <= 0:
        return Poly(1, *p.gens, domain=QQ)
    return p.sqf_part().monic()


@lru_cache(maxsize=2048)
def _sturm_chain(p: Poly) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(fraction_coeffs(q) for q in p.sturm())


def _sign_variations(p: Poly, x: Fraction) -> int:
    signs: List[int] = []
    for coeffs in _sturm_chain(p):
        value: Fraction = Fraction(0)
        for c in coeffs:
            value = value * x + c
        if value != 0:
            signs.append(sign(value))

    return sum(1 for left, right in zip(signs, signs[1:]) if left != right)


def sturm_count(p: Poly, interval: IsolInterval) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    if p.is_zero:
        raise DegenerateInputError("Sturm count of the zero polynomial.")
    if eval_upoly(p, interval.lo) == 0:
        raise EndpointRootError(f"Lower endpoint {interval.lo} is a root.", "lo")
    if eval_upoly(p, interval.hi) == 0:
        raise EndpointRootError(f"Upper endpoint {interval.hi} is a root.", "hi")
    if interval.is_point or p.degree() <= 0:
        return 0

    return _sign_variations(p, interval.lo) - _sign_variations(p, interval.hi)


def cauchy_root_bound(p: Poly) -> Fraction:
    if p.is_zero:
        raise DegenerateInputError("Root bound of the zero polynomial.")
    coeffs: Tuple[Fraction, ...] = fraction_coeffs(p)
    if len(coeffs) <= 1:
        return Fraction(0)
    lead: Fraction = coeffs[0]

    return 1 + max(abs(c / lead) for c in coeffs[1:])


def _nonroot_split(p: Poly, lo: Fraction, hi: Fraction) -> Fraction:
    mid: Fraction = (lo + hi) / 2
    step: Fraction = (hi - lo) / 4
    while eval_upoly(p, mid) == 0:
        mid += step
        step /= 2

    return mid


def isolate_roots(p: Poly) -> List[IsolInterval]:
    """Disjoint isolating intervals for the distinct real roots of p, ascending."""
    if p.is_zero:
        raise DegenerateInputError("Root isolation of the zero polynomial.")
    q: Poly = sqf(p)
    if q.degree() <= 0:
        return []
    bound: Fraction = cauchy_root_bound(q) + 1
    found: List[IsolInterval] = []
    pending: List[Tuple[Fraction, Fraction]] = [(-bound, bound)]
    while pending:
        lo, hi = pending.pop()
        count: int = sturm_count(q, IsolInterval(lo, hi))
        if count == 0:
            continue
        if count == 1:
            found.append(IsolInterval(lo, hi))
            continue
        mid: Fraction = _nonroot_split(q, lo, hi)
        pending.append((lo, mid))
        pending.append((mid, hi))

    return sorted(found, key=lambda iv: iv.lo)


@dataclass(frozen=True)
class AlgNumber:
    defining: Poly
    interval: IsolInterval

    @classmethod
    def from_rational(cls, value: Fraction) -> "AlgNumber":
        value = to_rat(value)
        return cls(Poly(V - to_sympy(value), V, domain=QQ), IsolInterval.point(value))

    @property
    def is_rational(self) -> bool:
        return self.interval.is_point or self.defining.degree() == 1

    def rational_value(self) -> Optional[Fraction]:
        if self.interval.is_point:
            return self.interval.lo
        if self.defining.degree() == 1:
            c1, c0 = fraction_coeffs(self.defining)
            return -c0 / c1
        return None

    def __float__(self) -> float:
        value: Optional[Fraction] = self.rational_value()
        if value is not None:
            return float(value)
        return float(refine(self, Fraction(1, 2 ** 48)).interval.midpoint)

    def __str__(self) -> str:
        value: Optional[Fraction] = self.rational_value()
        if value is not None:
            return f"{value.numerator}/{value.denominator}"
        return (
            f"root of {self.defining.as_expr()} in "
            f"({self.interval.lo}, {self.interval.hi}) ~ {float(self):.6g}"
        )


Number = Union[Fraction, AlgNumber]


def algebraic(p: Poly) -> List[AlgNumber]:
    """All real roots of p as algebraic numbers, ascending."""
    q: Poly = sqf(p)
    return [AlgNumber(q, iv) for iv in isolate_roots(q)]


def as_alg(value: Number) -> AlgNumber:
    if isinstance(value, AlgNumber):
        return value
    return AlgNumber.from_rational(to_rat(value))


def bisect(a: AlgNumber) -> AlgNumber:
    """Halve the isolating interval, collapsing onto an exact rational root when hit."""
    if a.interval.is_point:
        return a
    lo, hi = a.interval.lo, a.interval.hi
    mid: Fraction = (lo + hi) / 2
    value: Fraction = eval_upoly(a.defining, mid)
    if value == 0:
        return AlgNumber(a.defining, IsolInterval.point(mid))
    if sign(value) == sign(eval_upoly(a.defining, lo)):
        return AlgNumber(a.defining, IsolInterval(mid, hi))

    return AlgNumber(a.defining, IsolInterval(lo, mid))


def refine(a: AlgNumber, width: Fraction) -> AlgNumber:
    if width <= 0:
        raise PreconditionError(f"Refinement width must be positive, got {width}.")
    while a.interval.width > width:
        a = bisect(a)

    return a


def compare(a: Number, b: Number) -> int:
    """Exact sign of a - b."""
    if not isinstance(a, AlgNumber) and not isinstance(b, AlgNumber):
        return sign(to_rat(a) - to_rat(b))
    if not isinstance(a, AlgNumber):
        return -compare(b, a)
    if not isinstance(b, AlgNumber):
        return _compare_rational(a, to_rat(b))

    max_refinements: int = get_setting("MAX_REFINEMENTS")
    for _ in range(max_refinements):
        if a.interval.is_point:
            return -_compare_rational(b, a.interval.lo)
        if b.interval.is_point:
            return _compare_rational(a, b.interval.lo)
        if a.interval.hi <= b.interval.lo:
            return -1
        if b.interval.hi <= a.interval.lo:
            return 1
        if _same_root(a, b):
            return 0
        a, b = bisect(a), bisect(b)

    logger.error(f"Could not separate {a} and {b}")
    raise InstabilityError(f"Could not compare {a} and {b} within {max_refinements} bisections.")


def _compare_rational(a: AlgNumber, q: Fraction) -> int:
    lo, hi = a.interval.lo, a.interval.hi
    if a.interval.is_point:
        return sign(lo - q)
    if q <= lo:
        return 1
    if q >= hi:
        return -1
    value: Fraction = eval_upoly(a.defining, q)
    if value == 0:
        return 0
    if sign(value) == sign(eval_upoly(a.defining, lo)):
        return 1

    return -1


def _same_root(a: AlgNumber, b: AlgNumber) -> bool:
    g: Poly = sympy.gcd(a.defining, b.defining)
    if g.degree() <= 0:
        return False
    hull: IsolInterval = a.interval.hull(b.interval)

    return (
        sturm_count(g, hull) == 1
        and sturm_count(g, a.interval) == 1
        and sturm_count(g, b.interval) == 1
    )


def equal(a: Number, b: Number) -> bool:
    return compare(a, b) == 0


def sort_numbers(values: List[Number]) -> List[Number]:
    return sorted(values, key=cmp_to_key(compare))


def distinct_sorted(values: List[Number]) -> List[Number]:
    result: List[Number] = []
    for value in sort_numbers(values):
        if not result or compare(result[-1], value) != 0:
            result.append(value)

    return result


def _upper(a: AlgNumber) -> Fraction:
    return a.interval.hi


def _lower(a: AlgNumber) -> Fraction:
    return a.interval.lo


def separating_rational(a: Number, b: Number) -> Fraction:
    """A rational strictly between a < b."""
    if compare(a, b) >= 0:
        raise PreconditionError(f"Cannot separate {a} from {b}: not strictly increasing.")
    left, right = as_alg(a), as_alg(b)
    while True:
        upper, lower = _upper(left), _lower(right)
        if upper < lower:
            return (upper + lower) / 2
        if upper == lower and not left.interval.is_point and not right.interval.is_point:
            return upper
        left, right = bisect(left), bisect(right)


def rational_below(a: Number) -> Fraction:
    return _lower(as_alg(a)) - 1


def rational_above(a: Number) -> Fraction:
    return _upper(as_alg(a)) + 1


def sign_at(q: Poly, a: Number) -> int:
    """Exact sign of the univariate polynomial q at a."""
    if not isinstance(a, AlgNumber):
        return sign(eval_upoly(q, to_rat(a)))
    if q.is_zero:
        return 0
    if a.interval.is_point:
        return sign(eval_upoly(q, a.interval.lo))
    q = Poly(q.as_expr().subs(q.gens[0], a.defining.gens[0]), a.defining.gens[0], domain=QQ)
    if q.degree() <= 0:
        return sign(eval_upoly(q, Fraction(0)))
    g: Poly = sympy.gcd(q, a.defining)
    if g.degree() > 0 and sturm_count(g, a.interval) == 1:
        return 0
    max_refinements: int = get_setting("MAX_REFINEMENTS")
    for _ in range(max_refinements):
        if a.interval.is_point:
            return sign(eval_upoly(q, a.interval.lo))
        enclosure: IsolInterval = eval_upoly_interval(q, a.interval)
        if enclosure.sign() != 0:
            return enclosure.sign()
        a = bisect(a)

    raise InstabilityError(f"Sign of {q.as_expr()} at {a} not resolved.")


def eval_rational_function(a: Number, num: Poly, den: Poly) -> AlgNumber:
    """num(a) / den(a) as an algebraic number; den(a) must not vanish."""
    if not isinstance(a, AlgNumber) or a.interval.is_point:
        x: Fraction = to_rat(a) if not isinstance(a, AlgNumber) else a.interval.lo
        den_value: Fraction = eval_upoly(den, x)
        if den_value == 0:
            raise PreconditionError(f"Denominator vanishes at {x}.")
        return AlgNumber.from_rational(eval_upoly(num, x) / den_value)
    if sign_at(den, a) == 0:
        raise PreconditionError(f"Denominator vanishes at {a}.")

    var = a.defining.gens[0]
    num_expr = num.as_expr().subs(num.gens[0], var)
    den_expr = den.as_expr().subs(den.gens[0], var)
    if a.defining.degree() == 1:
        value: Fraction = a.rational_value()
        return AlgNumber.from_rational(eval_upoly(num, value) / eval_upoly(den, value))
    w = sympy.Dummy("w")
    norm: Poly = Poly(a.defining.as_expr(), var, w, domain=QQ).resultant(
        Poly(den_expr * w - num_expr, var, w, domain=QQ)
    )
    norm = Poly(norm.as_expr().subs(w, V), V, domain=QQ)
    candidates: List[AlgNumber] = algebraic(norm)
    num_p: Poly = Poly(num_expr, var, domain=QQ)
    den_p: Poly = Poly(den_expr, var, domain=QQ)
    max_refinements: int = get_setting("MAX_REFINEMENTS")
    for _ in range(max_refinements):
        den_enclosure: IsolInterval = eval_upoly_interval(den_p, a.interval)
        if not den_enclosure.contains_zero():
            enclosure: IsolInterval = eval_upoly_interval(num_p, a.interval) / den_enclosure
            hits: List[AlgNumber] = [c for c in candidates if c.interval.overlaps(enclosure)]
            if len(hits) == 1:
                return hits[0]
            if not hits:
                raise InstabilityError(f"Lost the value of a rational function at {a}.")
        a = bisect(a)
        if a.interval.is_point:
            return eval_rational_function(a, num_p, den_p)

    raise InstabilityError(f"Value of a rational function at {a} not identified.")


def roots_in(p: Poly, lo: Number, hi: Number) -> List[AlgNumber]:
    """Real roots of p strictly between lo and hi."""
    return [r for r in algebraic(p) if compare(r, lo) > 0 and compare(r, hi) < 0]


def gap_samples(values: List[Number]) -> List[Fraction]:
    """One rational below, between each consecutive pair, and above sorted distinct values."""
    if not values:
        return [Fraction(0)]
    samples: List[Fraction] = [rational_below(values[0])]
    for left, right in zip(values, values[1:]):
        samples.append(separating_rational(left, right))
    samples.append(rational_above(values[-1]))

    return samples
