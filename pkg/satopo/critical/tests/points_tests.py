from typing import List

import pytest

from satopo.core.roots import compare
from satopo.critical.points import (
    CriticalPoint,
    LocalCounts,
    arc_index,
    critical_values,
    find_critical_points,
    index,
    local_counts,
)
from satopo.exceptions import InfiniteCriticalSetError
from satopo.tests.test_utils import CUSP_FAMILY, KNOWN_DEGREES, MONKEY_SADDLE, poly


class TestFindCriticalPoints:
    def test_paraboloid(self) -> None:
        [point] = find_critical_points(poly("x^2 + y^2"))

        assert point.local_degree == 1
        assert compare(point.value, 0) == 0
        xi, yi = point.box
        assert xi.contains(0) and yi.contains(0)

    def test_cusp_family(self) -> None:
        points: List[CriticalPoint] = sorted(
            find_critical_points(poly(CUSP_FAMILY)), key=lambda p: float(p.solution.x)
        )

        assert len(points) == 2
        assert compare(points[0].value, 2) == 0
        assert compare(points[1].value, -2) == 0
        assert [p.local_degree for p in points] == [-1, 1]
        assert all(p.ind_f == p.ind_neg_f == p.local_degree for p in points)

    def test_broughton_has_none(self) -> None:
        assert find_critical_points(poly("x*(x*y - 1)")) == []

    def test_raises_for_non_isolated_critical_points(self) -> None:
        with pytest.raises(InfiniteCriticalSetError) as exc:
            find_critical_points(poly("x^2*y"))

        assert str(exc.value) == "The curve x = 0 has infinitely many real points."


class TestCriticalValues:
    @pytest.mark.parametrize(
        "text, expected", [("x^2 + y^2", [0]), (CUSP_FAMILY, [-2, 2]), ("x*(x*y - 1)", [])]
    )
    def test_values(self, text: str, expected: List[int]) -> None:
        values = critical_values(poly(text))

        assert len(values) == len(expected)
        assert all(compare(v, e) == 0 for v, e in zip(values, expected))


class TestIndex:
    @pytest.mark.parametrize("text, expected", list(KNOWN_DEGREES.items()))
    def test_index_agrees_with_arc_count(self, text: str, expected: int) -> None:
        f = poly(text)
        [point] = find_critical_points(f)

        assert index(f, point) == expected
        assert arc_index(f, point) == expected


    def test_index_is_the_local_degree_not_the_arc_count(self) -> None:
        f = poly(MONKEY_SADDLE)
        [point] = find_critical_points(f)

        assert index(f, point) == point.local_degree == -2
        assert local_counts(f, point, []).fiber_chi_below == 3


class TestLocalCounts:
    @pytest.mark.parametrize("text, degree", list(KNOWN_DEGREES.items()))
    def test_local_formulas(self, text: str, degree: int) -> None:
        f = poly(text)
        [point] = find_critical_points(f)
        counts: LocalCounts = local_counts(f, point, [])

        assert counts.fiber_chi_below == 1 - degree
        assert counts.fiber_chi_above == 1 - degree
        assert counts.sublevel == 1 - degree
        assert counts.superlevel == 1 - degree
        assert counts.at == 2 - 2 * degree

    def test_saddle_crossings(self) -> None:
        f = poly("x^2 - y^2")
        [point] = find_critical_points(f)
        counts: LocalCounts = local_counts(f, point, [])

        assert (counts.below, counts.at, counts.above) == (4, 4, 4)


class TestSymmetricCriticalPoints:
    def test_squared_paraboloid_has_one_point(self) -> None:
        f = poly("(x^2 + y^2)^2")
        [point] = find_critical_points(f)

        assert point.local_degree == 1
        assert compare(point.value, 0) == 0
        assert arc_index(f, point) == 1

    def test_counts_around_an_off_center_rational_point(self) -> None:
        f = poly("(x - 3)^2 + (y - 7)^2")
        [point] = find_critical_points(f)
        counts: LocalCounts = local_counts(f, point, [])

        assert (counts.below, counts.at, counts.above) == (0, 0, 0)
        assert counts.circle.center != (3, 7)
