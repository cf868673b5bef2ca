from fractions import Fraction
from typing import List

import pytest

from satopo.core.polys import X, Y, bpoly
from satopo.core.roots import compare
from satopo.core.solver import SolutionPoint, real_points, solve_system
from satopo.exceptions import DegenerateInputError, InfiniteCriticalSetError


def _by_x(solutions: List[SolutionPoint]) -> List[SolutionPoint]:
    return sorted(solutions, key=lambda s: float(s.x))


class TestSolveSystem:
    def test_finds_both_critical_points_of_cusp_family(self) -> None:
        f = bpoly(X ** 3 - 3 * X + Y ** 2)
        solutions: List[SolutionPoint] = _by_x(solve_system(f.diff(X), f.diff(Y)))

        assert len(solutions) == 2
        assert compare(solutions[0].x, -1) == 0
        assert compare(solutions[1].x, 1) == 0
        assert all(compare(s.y, 0) == 0 for s in solutions)
        assert compare(solutions[0].value_of(f), 2) == 0
        assert compare(solutions[1].value_of(f), -2) == 0

    def test_exact_signs_at_a_solution(self) -> None:
        [solution] = solve_system(bpoly(X - Y), bpoly(X + Y - 2))

        assert solution.sign_of(bpoly(X - 2)) == -1
        assert solution.sign_of(bpoly(X * Y - 1)) == 0
        assert solution.sign_of(bpoly(Y ** 2 + 1)) == 1

    def test_irrational_solutions(self) -> None:
        solutions = _by_x(solve_system(bpoly(X ** 2 + Y ** 2 - 4), bpoly(X - Y)))

        assert len(solutions) == 2
        assert float(solutions[1].x) == pytest.approx(2 ** 0.5)
        assert solutions[1].sign_of(bpoly(X - Y)) == 0
        assert solutions[1].sign_of(bpoly(X * Y - 2)) == 0

    def test_boxes_refine(self) -> None:
        [_, solution] = _by_x(solve_system(bpoly(X ** 2 + Y ** 2 - 4), bpoly(X - Y)))
        xi, yi = solution.refined(Fraction(1, 100)).certain_box()

        assert xi.width <= Fraction(1, 100)
        assert xi.lo < 2 ** 0.5 < xi.hi
        assert yi.lo < 2 ** 0.5 < yi.hi

    def test_no_solutions(self) -> None:
        assert solve_system(bpoly(X), bpoly(X + 1)) == []
        assert solve_system(bpoly(X ** 2 + Y ** 2 + 1), bpoly(X)) == []
        assert solve_system(bpoly(3), bpoly(X)) == []

    def test_raises_for_common_factor(self) -> None:
        with pytest.raises(InfiniteCriticalSetError) as exc:
            solve_system(bpoly(X * Y), bpoly(X * (Y - 1)))

        assert str(exc.value) == "The curve x = 0 has infinitely many real points."

    def test_raises_for_zero_polynomial(self) -> None:
        with pytest.raises(DegenerateInputError) as exc:
            solve_system(bpoly(0), bpoly(X))

        assert str(exc.value) == "Cannot solve a system containing the zero polynomial."

    def test_solutions_sharing_an_abscissa(self) -> None:
        solutions = solve_system(bpoly(X ** 2 + Y ** 2 - 1), bpoly(X))

        assert len(solutions) == 2
        assert sorted(float(s.y) for s in solutions) == pytest.approx([-1, 1])

    def test_common_factor_with_an_isolated_real_point(self) -> None:
        f = bpoly(((X - 3) ** 2 + (Y - 7) ** 2) ** 2)
        [solution] = solve_system(f.diff(X), f.diff(Y))

        assert compare(solution.x, 3) == 0
        assert compare(solution.y, 7) == 0

    def test_common_factor_points_join_cofactor_solutions(self) -> None:
        d = X ** 2 + Y ** 2
        solutions = _by_x(solve_system(bpoly(d * (X - 1)), bpoly(d * (Y - 2))))

        assert len(solutions) == 2
        assert compare(solutions[0].x, 0) == 0 and compare(solutions[0].y, 0) == 0
        assert compare(solutions[1].x, 1) == 0 and compare(solutions[1].y, 2) == 0

    def test_raises_for_common_factor_with_a_real_arc(self) -> None:
        with pytest.raises(InfiniteCriticalSetError) as exc:
            solve_system(bpoly((X ** 2 + Y ** 2 - 1) * X), bpoly((X ** 2 + Y ** 2 - 1) * Y))

        assert str(exc.value) == "The curve x**2 + y**2 - 1 = 0 has infinitely many real points."


class TestRealPoints:
    def test_isolated_points_of_each_factor(self) -> None:
        points = _by_x(real_points(bpoly((X ** 2 + Y ** 2) * ((X - 1) ** 2 + Y ** 2))))

        assert [(float(p.x), float(p.y)) for p in points] == pytest.approx([(0, 0), (1, 0)])

    def test_empty_curve(self) -> None:
        assert real_points(bpoly(X ** 2 + Y ** 2 + 1)) == []
