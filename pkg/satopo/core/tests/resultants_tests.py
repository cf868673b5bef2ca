from fractions import Fraction

import pytest
import sympy
from sympy import Poly

from satopo.core.polys import X, Y, bpoly, restrict
from satopo.core.resultants import leading_coefficient, resultant, subresultant
from satopo.exceptions import DegenerateInputError


class TestResultant:
    def test_linear_pair(self) -> None:
        assert resultant(bpoly(X - 1), bpoly(X + 1), X).as_expr() == 2

    def test_with_unit(self) -> None:
        assert resultant(bpoly(X ** 3 + X * Y - 5), bpoly(1), X).as_expr() == 1

    def test_eliminates_y(self) -> None:
        assert resultant(bpoly(Y ** 2 - X), bpoly(Y), Y).as_expr() == -X

    def test_raises_for_two_zero_polynomials(self) -> None:
        with pytest.raises(DegenerateInputError) as exc:
            resultant(bpoly(0), bpoly(0), X)

        assert str(exc.value) == "Resultant of two zero polynomials."

    @pytest.mark.parametrize(
        "p, q",
        [
            (X ** 2 - Y, X - 1),
            (X ** 2 + Y ** 2 - 2, X - Y),
            (X ** 3 - Y * X + 1, X ** 2 - Y),
            (X * Y - 1, X ** 2 + X - Y),
        ],
    )
    @pytest.mark.parametrize("v", [Fraction(-2), Fraction(0), Fraction(1), Fraction(3, 2)])
    def test_vanishes_exactly_on_common_roots(self, p, q, v: Fraction) -> None:
        res: Poly = resultant(bpoly(p), bpoly(q), X)
        fp, fq = restrict(bpoly(p), Y, v), restrict(bpoly(q), Y, v)
        common: Poly = sympy.gcd(fp, fq)

        assert (res.eval(v) == 0) == (common.degree() > 0)


def test_leading_coefficient() -> None:
    assert leading_coefficient(bpoly(X ** 2 * Y + Y ** 3), X).as_expr() == Y


class TestSubresultant:
    def test_zeroth_is_the_resultant(self) -> None:
        p, q = bpoly(Y ** 2 - X), bpoly(Y - 1)

        assert subresultant(p, q, 0, Y).as_expr() == 1 - X

    def test_top_index_is_the_lower_degree_input(self) -> None:
        p, q = bpoly(Y ** 2 - X), bpoly(Y - 1)

        assert subresultant(p, q, 1, Y) == q

    def test_first_subresultant_carries_the_common_root(self) -> None:
        p = bpoly((Y - X) * (Y + 1))
        q = bpoly((Y - X) * (Y - 2))
        s = subresultant(p, q, 1, Y)

        assert restrict(s, X, Fraction(5)).eval(5) == 0
