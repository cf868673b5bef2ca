from fractions import Fraction
from typing import Union

import sympy

Rat = Fraction

RatLike = Union[Fraction, int, str, sympy.Rational]


def to_rat(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise Exception(f"{value} is not a rational number.")
        return Fraction(int(value.p), int(value.q))

    return Fraction(value)


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def rat_str(value: Fraction) -> str:
    value = to_rat(value)
    return f"{value.numerator}/{value.denominator}"


def sign(value: Fraction) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0
