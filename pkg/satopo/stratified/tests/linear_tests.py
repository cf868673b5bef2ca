from fractions import Fraction

import pytest

from satopo.exceptions import PreconditionError
from satopo.stratified.directions import Direction
from satopo.stratified.linear import direction_index_sum, linear_morse_summary
from satopo.stratified.sets import CURVE, REGION, plane_set
from satopo.tests.test_utils import DISK, poly

E1 = Direction(Fraction(0))
E2 = Direction(Fraction(1))
GENERIC = Direction(Fraction(1, 3))


class TestLinearMorseSummary:
    def test_disk_along_first_axis(self) -> None:
        summary = linear_morse_summary(plane_set(poly(DISK)), E1)

        assert summary.above == 0
        assert (summary.chi_ge, summary.chi_eq, summary.chi_le) == (1, 1, 1)
        assert (summary.total, summary.co_total) == (1, 1)
        summary.check()

    def test_half_plane(self) -> None:
        summary = linear_morse_summary(plane_set(poly("y"), REGION), GENERIC, Fraction(2))

        assert summary.points == ()
        assert summary.link_le == summary.chi_x == 1
        summary.check()

    def test_circle_along_second_axis(self) -> None:
        summary = linear_morse_summary(plane_set(poly(DISK), CURVE), E2)

        assert summary.above == -1
        assert summary.chi_ge - summary.chi_eq == 1 - 2
        summary.check()

    @pytest.mark.parametrize("alpha", [Fraction(-2), Fraction(1, 2), Fraction(3)])
    def test_identities_hold_for_every_level(self, alpha: Fraction) -> None:
        summary = linear_morse_summary(plane_set(poly("y - x^2")), GENERIC, alpha)

        assert all(lhs == rhs for _, lhs, rhs in summary.slice_identities())
        assert all(lhs == rhs for _, lhs, rhs in summary.link_identities())

    def test_rejects_bad_direction(self) -> None:
        with pytest.raises(PreconditionError) as exc:
            linear_morse_summary(plane_set(poly("y")), E2)

        assert str(exc.value) == "Direction (0, 1) is not generic for {y <= 0}."


def test_direction_index_sum_on_parabola_region() -> None:
    region = plane_set(poly("y - x^2"))

    assert direction_index_sum(region, Direction(Fraction(-1, 2))) == -1
    assert direction_index_sum(region, Direction(Fraction(1, 2))) == 0
