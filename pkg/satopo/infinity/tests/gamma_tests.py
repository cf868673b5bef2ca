from fractions import Fraction
from itertools import islice

import pytest

from satopo.core.polys import X, Y, bpoly
from satopo.exceptions import DegenerateInputError
from satopo.infinity.gamma import (
    admissible_basepoint,
    basepoint_candidates,
    aligned_radius,
    certified_radius,
    common_zero_bound,
    gamma_polynomial,
)
from satopo.tests.test_utils import BROUGHTON, PARABOLOID, poly

ORIGIN = (Fraction(0), Fraction(0))


class TestGammaPolynomial:
    def test_paraboloid_off_center(self) -> None:
        curve = gamma_polynomial(poly(PARABOLOID), (Fraction(1), Fraction(0)))

        assert curve.h == bpoly(-2 * Y)
        assert curve.base == (Fraction(1), Fraction(0))

    def test_linear_function(self) -> None:
        assert gamma_polynomial(poly("x"), ORIGIN).h == bpoly(-Y)

    def test_raises_for_constant(self) -> None:
        with pytest.raises(DegenerateInputError) as exc:
            gamma_polynomial(poly("3"), ORIGIN)

        assert str(exc.value) == "The polar curve of 3 at (0, 0) vanishes identically."


class TestBounds:
    def test_common_zero_bound_covers_intersection(self) -> None:
        bound = common_zero_bound(poly("x - 2"), poly("y + 3"))

        assert bound >= 5

    def test_common_zero_bound_ignores_constants(self) -> None:
        assert common_zero_bound(poly("1"), poly("x")) == 0

    def test_common_zero_bound_with_a_shared_isolated_point(self) -> None:
        d = "(x^2 + y^2)"

        assert common_zero_bound(poly(f"{d}*(x - 1)"), poly(f"{d}*(y - 2)")) >= 3

    def test_common_zero_bound_raises_on_shared_curve(self) -> None:
        with pytest.raises(DegenerateInputError) as exc:
            common_zero_bound(poly("x*y"), poly("x^2 + x"))

        assert str(exc.value) == "x*y and x**2 + x share a curve; choose another base point."

    def test_certified_radius_exceeds_base_point(self) -> None:
        a = (Fraction(2, 3), Fraction(-1, 5))

        assert certified_radius(poly(BROUGHTON), a) > abs(a[0]) + abs(a[1])

    @pytest.mark.parametrize("level", [0, 7, -40])
    def test_aligned_radius_doubles_the_level_free_radius(self, level: int) -> None:
        f = poly(BROUGHTON)
        a = (Fraction(2, 3), Fraction(-1, 5))
        ratio = aligned_radius(f, a, [f - level]) / certified_radius(f, a)

        assert ratio.denominator == 1
        assert ratio.numerator & (ratio.numerator - 1) == 0
        assert aligned_radius(f, a, [f - level]) >= certified_radius(f, a, [f - level])


class TestBasePoints:
    def test_candidates_are_deterministic(self) -> None:
        first = list(islice(basepoint_candidates(7), 5))
        second = list(islice(basepoint_candidates(7), 5))

        assert first == second

    def test_candidates_are_small(self) -> None:
        for a1, a2 in islice(basepoint_candidates(0), 20):
            assert abs(a1) <= 9 and abs(a2) <= 9

    def test_center_of_paraboloid_is_rejected(self) -> None:
        assert not admissible_basepoint(poly(PARABOLOID), ORIGIN)

    def test_off_center_is_accepted(self) -> None:
        assert admissible_basepoint(poly(PARABOLOID), (Fraction(1), Fraction(0)))

    def test_gamma_of_rotated_paraboloid(self) -> None:
        curve = gamma_polynomial(poly(PARABOLOID), (Fraction(0), Fraction(1)))

        assert curve.h == bpoly(2 * X)
