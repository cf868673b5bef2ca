from fractions import Fraction

import pytest

from satopo.circle.circles import (
    Circle,
    CircleProfile,
    arc_samples,
    curve_circle_intersections,
    substitute,
)
from satopo.core.polys import T
from satopo.exceptions import DegenerateInputError, PreconditionError
from satopo.tests.test_utils import poly

UNIT: Circle = Circle((Fraction(0), Fraction(0)), Fraction(1))


class TestCircle:
    def test_raises_for_nonpositive_radius(self) -> None:
        with pytest.raises(PreconditionError) as exc:
            Circle((Fraction(0), Fraction(0)), Fraction(0))

        assert str(exc.value) == "Circle radius must be positive, got 0."

    def test_points_lie_on_circle(self) -> None:
        c: Circle = Circle((Fraction(1), Fraction(-2)), Fraction(3))
        for t in (Fraction(0), Fraction(1, 3), Fraction(-7, 2)):
            x, y = c.point_at(t)
            assert (x - 1) ** 2 + (y + 2) ** 2 == 9


class TestCurveCircleIntersections:
    def test_vertical_line(self) -> None:
        profile: CircleProfile = curve_circle_intersections(poly("x"), UNIT)

        assert profile.count == 2
        assert [float(p.parameter) for p in profile.points()] == pytest.approx([-1, 1])

    def test_concentric_circle(self) -> None:
        assert curve_circle_intersections(poly("x^2 + y^2 - 1/4"), UNIT).count == 0

    def test_parabola_meets_large_circle_twice(self) -> None:
        c: Circle = Circle((Fraction(0), Fraction(0)), Fraction(2))

        assert curve_circle_intersections(poly("y - x^2"), c).count == 2

    def test_antipode_is_last(self) -> None:
        profile: CircleProfile = curve_circle_intersections(poly("y"), UNIT)

        assert profile.count == 2
        assert profile.events[0].point.parameter.rational_value() == 0
        assert profile.events[-1].point.is_antipode

    def test_tangency_has_even_multiplicity(self) -> None:
        profile: CircleProfile = curve_circle_intersections(poly("x - 1"), UNIT)

        assert profile.count == 1
        assert profile.events[0].multiplicity == 2
        assert not profile.transverse

    @pytest.mark.parametrize(
        "text", ["x*y - 1/3", "x^3 - y", "y^2 - x^3 + x", "x^2 - 2*y^2 + x*y - 1/5"]
    )
    def test_transverse_parity(self, text: str) -> None:
        profile: CircleProfile = curve_circle_intersections(
            poly(text), Circle((Fraction(1, 7), Fraction(-1, 3)), Fraction(5, 2))
        )

        assert profile.transverse
        assert profile.count % 2 == 0

    def test_raises_when_curve_contains_circle(self) -> None:
        with pytest.raises(DegenerateInputError) as exc:
            curve_circle_intersections(poly("x^2 + y^2 - 1"), UNIT)

        assert str(exc.value) == "x**2 + y**2 - 1 vanishes identically on S(0, 0; 1)."


def test_substitute_clears_denominators() -> None:
    assert substitute(poly("x"), UNIT).as_expr() == 1 - T ** 2


def test_arc_samples_cover_every_arc() -> None:
    profile: CircleProfile = curve_circle_intersections(poly("y"), UNIT)
    samples = arc_samples(profile.points())

    assert len(samples) == 2
    assert samples[0] > 0
    assert samples[1] < 0
