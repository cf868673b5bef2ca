from fractions import Fraction

import pytest
from pytest_mock import MockerFixture

from satopo.circle.levels import EQ
from satopo.circle.winding import degree_at_infinity
from satopo.core.roots import AlgNumber, compare, gap_samples
from satopo.exceptions import DegenerateInputError
from satopo.infinity.asymptotic import (
    JumpSet,
    LinkTable,
    generic_basepoint,
    has_bounded_branch,
    is_proper,
    jump_sets,
    jump_unions_agree,
    lambda_set,
    link_table,
    sekalski_sum,
)
from satopo.tests.test_utils import BROUGHTON, PARABOLOID, poly

BASE = (Fraction(1, 3), Fraction(1, 5))
EMPTY = JumpSet((), "lambda")
AT_ZERO = JumpSet((AlgNumber.from_rational(Fraction(0)),), "lambda")


class TestGapSamples:
    def test_no_values(self) -> None:
        assert gap_samples([]) == [Fraction(0)]

    def test_rational_values(self) -> None:
        expected = [Fraction(-1), Fraction(1, 2), Fraction(2)]

        assert gap_samples([Fraction(0), Fraction(1)]) == expected


class TestLambdaSet:
    @pytest.mark.parametrize("text", [PARABOLOID, "x", "x^2 - y^2"])
    def test_empty(self, text: str) -> None:
        assert len(lambda_set(poly(text), BASE)) == 0

    def test_broughton(self) -> None:
        values = lambda_set(poly(BROUGHTON), BASE)

        assert len(values) == 1
        assert values.contains(Fraction(0))


class TestBoundedBranch:
    def test_branch_tending_to_an_asymptotic_value(self) -> None:
        f = poly(BROUGHTON)
        table: LinkTable = link_table(f, BASE)
        [i] = [i for i, c in enumerate(table.candidates) if compare(c, 0) == 0]

        assert has_bounded_branch(f, BASE, table, i)

    @pytest.mark.parametrize("text", [BROUGHTON, PARABOLOID])
    def test_strip_without_asymptotic_value(self, text: str) -> None:
        five = AlgNumber.from_rational(Fraction(5))
        table = LinkTable((five,), (Fraction(4), Fraction(6)), {}, {})

        assert not has_bounded_branch(poly(text), BASE, table, 0)


class TestJumpSets:
    def test_broughton_jumps_in_level_link(self) -> None:
        le, eq, ge = jump_sets(poly(BROUGHTON), BASE)

        assert eq.flavor == EQ
        assert eq.contains(Fraction(0))

    def test_union_identities(self) -> None:
        assert jump_unions_agree(poly(BROUGHTON), BASE)

    def test_jump_sets_lie_in_lambda(self) -> None:
        f = poly(BROUGHTON)
        members = lambda_set(f, BASE)

        for jumps in jump_sets(f, BASE):
            assert all(members.contains(v) for v in jumps)


class TestProperness:
    def test_paraboloid_is_proper(self) -> None:
        assert is_proper(poly(PARABOLOID), BASE)

    def test_linear_function_is_not_proper(self) -> None:
        assert not is_proper(poly("x"), BASE)

    def test_broughton_is_not_proper(self) -> None:
        assert not is_proper(poly(BROUGHTON), BASE)


class TestSekalskiSum:
    @pytest.mark.parametrize("text", [PARABOLOID, BROUGHTON, "x^2 - y^2"])
    def test_matches_degree_at_infinity(self, text: str) -> None:
        f = poly(text)

        assert sekalski_sum(f, BASE) == degree_at_infinity(f)


class TestGenericBasepoint:
    def test_returns_admissible_point(self) -> None:
        a = generic_basepoint(poly(PARABOLOID), seed=3)

        assert a != (Fraction(0), Fraction(0))

    def test_independence_check_reproduces_broughton_values(self, mocker: MockerFixture) -> None:
        mocker.patch("satopo.infinity.asymptotic.get_setting", side_effect=_settings(True))
        f = poly(BROUGHTON)

        a = generic_basepoint(f, seed=0)
        values = lambda_set(f, a)

        assert len(values) == 1
        assert values.contains(Fraction(0))

    def test_avoids_the_center_of_a_symmetric_function(self, mocker: MockerFixture) -> None:
        mocker.patch("satopo.infinity.asymptotic.get_setting", side_effect=_settings(True))
        f = poly("((x - 3)^2 + (y - 7)^2)^2")

        a = generic_basepoint(f, seed=0)

        assert a != (Fraction(3), Fraction(7))
        assert len(lambda_set(f, a)) == 0

    def test_raises_when_sets_disagree(self, mocker: MockerFixture) -> None:
        mocker.patch("satopo.infinity.asymptotic.get_setting", side_effect=_settings(True))
        answers = iter([EMPTY, AT_ZERO] * 20)
        mocker.patch(
            "satopo.infinity.asymptotic.lambda_set", side_effect=lambda f, a: next(answers)
        )

        with pytest.raises(DegenerateInputError) as exc:
            generic_basepoint(poly("x"), seed=1)

        assert str(exc.value) == "No generic base point for x in 20 draws."


def _settings(check: bool):
    values = {
        "SATOPO_SEED": 0,
        "BASEPOINT_RETRIES": 20,
        "CHECK_INDEPENDENCE": check,
        "INDEPENDENCE_SEEDS": 3,
    }
    return lambda key: values[key]
