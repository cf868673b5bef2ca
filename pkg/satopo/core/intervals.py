"""
Closed rational intervals with sound arithmetic.

``IsolInterval`` doubles as the isolating interval of a real root and as an
enclosure produced by interval evaluation of polynomials over rational boxes.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from sympy import Poly

from satopo.core.polys import X, Y, fraction_coeffs, monomials


@dataclass(frozen=True)
class IsolInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise Exception(f"Interval lower end {self.lo} exceeds upper end {self.hi}.")

    @classmethod
    def point(cls, value: Fraction) -> "IsolInterval":
        return cls(Fraction(value), Fraction(value))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def overlaps(self, other: "IsolInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def sign(self) -> int:
        """1 or -1 when the interval is strictly on one side of zero, else 0."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def __add__(self, other: "IsolInterval") -> "IsolInterval":
        return IsolInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "IsolInterval":
        return IsolInterval(-self.hi, -self.lo)

    def __sub__(self, other: "IsolInterval") -> "IsolInterval":
        return self + (-other)

    def __mul__(self, other: "IsolInterval") -> "IsolInterval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return IsolInterval(min(products), max(products))

    def scale(self, factor: Fraction) -> "IsolInterval":
        if factor >= 0:
            return IsolInterval(self.lo * factor, self.hi * factor)
        return IsolInterval(self.hi * factor, self.lo * factor)

    def __pow__(self, exponent: int) -> "IsolInterval":
        if exponent == 0:
            return IsolInterval.point(Fraction(1))
        lo, hi = self.lo ** exponent, self.hi ** exponent
        if exponent % 2 == 1:
            return IsolInterval(lo, hi)
        if self.contains_zero():
            return IsolInterval(Fraction(0), max(lo, hi))
        return IsolInterval(min(lo, hi), max(lo, hi))

    def __truediv__(self, other: "IsolInterval") -> "IsolInterval":
        if other.contains_zero():
            raise ZeroDivisionError("Interval division by an interval containing zero.")
        return self * IsolInterval(1 / other.hi, 1 / other.lo)

    def hull(self, other: "IsolInterval") -> "IsolInterval":
        return IsolInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


Box = Tuple[IsolInterval, IsolInterval]


def eval_upoly_interval(p: Poly, iv: IsolInterval) -> IsolInterval:
    """Horner enclosure of p over iv."""
    if p.is_zero:
        return IsolInterval.point(Fraction(0))
    result: IsolInterval = IsolInterval.point(Fraction(0))
    for c in fraction_coeffs(p):
        result = result * iv + IsolInterval.point(c)

    return result


def eval_bpoly_box(f: Poly, box: Box) -> IsolInterval:
    """Enclosure of a polynomial in (x, y) over a rational box."""
    if f.gens != (X, Y):
        raise Exception(f"Expected a polynomial in (x, y), got generators {f.gens}.")
    xi, yi = box
    result: IsolInterval = IsolInterval.point(Fraction(0))
    for (i, j), coeff in monomials(f).items():
        result = result + (xi ** i * yi ** j).scale(coeff)

    return result


def box_str(box: Box) -> str:
    xi, yi = box
    return f"{xi} x {yi}"
