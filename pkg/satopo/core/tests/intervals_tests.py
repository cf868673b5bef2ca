from fractions import Fraction

import pytest

from satopo.core.intervals import IsolInterval, eval_bpoly_box, eval_upoly_interval
from satopo.core.polys import X, Y, bpoly, upoly


def iv(lo, hi) -> IsolInterval:
    return IsolInterval(Fraction(lo), Fraction(hi))


class TestIsolInterval:
    def test_raises_when_reversed(self) -> None:
        with pytest.raises(Exception) as exc:
            iv(2, 1)

        assert str(exc.value) == "Interval lower end 2 exceeds upper end 1."

    def test_even_power_through_zero(self) -> None:
        assert iv(-2, 1) ** 2 == iv(0, 4)

    def test_division_by_interval_containing_zero(self) -> None:
        with pytest.raises(ZeroDivisionError):
            iv(1, 2) / iv(-1, 1)

    def test_sign(self) -> None:
        assert iv(1, 2).sign() == 1
        assert iv(-2, -1).sign() == -1
        assert iv(-1, 1).sign() == 0


def test_upoly_enclosure_contains_values() -> None:
    enclosure = eval_upoly_interval(upoly(X ** 3 - 2 * X + 1), iv(0, 1))

    for k in range(11):
        t = Fraction(k, 10)
        assert enclosure.contains(t ** 3 - 2 * t + 1)


def test_bpoly_enclosure_is_exact_on_points() -> None:
    point = (IsolInterval.point(Fraction(1, 2)), IsolInterval.point(Fraction(3)))

    assert eval_bpoly_box(bpoly(X * Y ** 2 - X), point) == IsolInterval.point(Fraction(4))
