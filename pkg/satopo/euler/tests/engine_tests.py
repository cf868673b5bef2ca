from fractions import Fraction

import pytest

from satopo.circle.levels import EQ, GE, LE
from satopo.core.polys import X, upoly
from satopo.core.roots import AlgNumber, algebraic
from satopo.euler.engine import (
    FiberProfile,
    breakpoints,
    chi,
    chi_c,
    chi_of_plane,
    chi_of_set,
    fiber_profile,
)
from satopo.exceptions import DegenerateInputError
from satopo.tests.test_utils import BROUGHTON, PARABOLOID, RANDOM_SAMPLE, poly

BASE = (Fraction(1, 3), Fraction(1, 5))
SQRT2: AlgNumber = algebraic(upoly(X ** 2 - 2))[1]


class TestChi:
    @pytest.mark.parametrize(
        "text, alpha, flavor, expected_c, expected",
        [
            (PARABOLOID, Fraction(1), LE, 1, 1),
            ("x", Fraction(0), LE, 0, 1),
            ("x*y", Fraction(0), EQ, -3, 1),
            (BROUGHTON, Fraction(0), EQ, -3, 3),
            (BROUGHTON, Fraction(1), EQ, -2, 2),
            (PARABOLOID, Fraction(-1), EQ, 0, 0),
        ],
    )
    def test_rational_levels(
        self, text: str, alpha: Fraction, flavor: str, expected_c: int, expected: int
    ) -> None:
        f = poly(text)

        assert chi_c(f, alpha, flavor) == expected_c
        assert chi(f, alpha, flavor) == expected

    @pytest.mark.parametrize(
        "text, flavor, expected_c, expected",
        [
            (PARABOLOID, EQ, 0, 0),
            (PARABOLOID, LE, 1, 1),
            (PARABOLOID, GE, 0, 0),
            ("x", EQ, -1, 1),
            ("x", LE, 0, 1),
        ],
    )
    def test_algebraic_levels(
        self, text: str, flavor: str, expected_c: int, expected: int
    ) -> None:
        f = poly(text)

        assert chi_c(f, SQRT2, flavor) == expected_c
        assert chi(f, SQRT2, flavor) == expected

    @pytest.mark.parametrize("text", RANDOM_SAMPLE)
    def test_compact_support_additivity(self, text: str) -> None:
        f = poly(text)
        alpha = Fraction(1, 3)

        assert chi_c(f, alpha, LE) + chi_c(f, alpha, GE) - chi_c(f, alpha, EQ) == 1

    @pytest.mark.parametrize("text", [PARABOLOID, "x", BROUGHTON, "x^2 - y^2"])
    def test_chi_of_plane(self, text: str) -> None:
        assert chi_of_plane(poly(text)) == 1

    def test_constant_function(self) -> None:
        assert chi(poly("2"), Fraction(1), GE) == 1
        assert chi(poly("2"), Fraction(1), LE) == 0

    def test_raises_when_level_is_everything(self) -> None:
        with pytest.raises(DegenerateInputError) as exc:
            chi_c(poly("1"), Fraction(1), EQ)

        assert str(exc.value) == "1 is identically 1; every level set is full."

    def test_set_of_conditions(self) -> None:
        assert chi_of_set([(poly("x"), GE), (poly("y"), GE)]) == 1


class TestFiberProfile:
    def test_paraboloid(self) -> None:
        profile = fiber_profile(poly(PARABOLOID), BASE)

        assert [float(b) for b in profile.breakpoints] == pytest.approx([0])
        assert profile.plateaus == (0, 0)
        assert profile.at_breakpoints == (1,)

    def test_broughton(self) -> None:
        profile = fiber_profile(poly(BROUGHTON), BASE)

        assert [float(b) for b in profile.breakpoints] == pytest.approx([0])
        assert profile.plateaus == (2, 2)
        assert profile.at_breakpoints == (3,)

    def test_linear_function(self) -> None:
        profile = fiber_profile(poly("x"), BASE)

        assert profile.breakpoints == ()
        assert profile.plateaus == (1,)

    def test_value_at(self) -> None:
        zero = AlgNumber.from_rational(Fraction(0))
        profile = FiberProfile((zero,), (3,), (2, 2))

        assert profile.value_at(Fraction(-5)) == 2
        assert profile.value_at(Fraction(0)) == 3
        assert profile.value_at(SQRT2) == 2


def test_breakpoints_of_broughton() -> None:
    assert [float(b) for b in breakpoints(poly(BROUGHTON), BASE)] == pytest.approx([0])
