from fractions import Fraction

import pytest
from pytest_mock import MockerFixture

from satopo.core.parser import format_polynomial
from satopo.exceptions import PreconditionError
from satopo.harness.context import PlaneContext, SetContext
from satopo.harness.inputs import parse_line
from satopo.harness.verify import DEFAULT_DIRECTION, build_context, combine, verify
from satopo.tests.factories import CorpusInputFactory, PartFactory
from satopo.tests.test_utils import (
    BROUGHTON,
    DISK,
    PARABOLOID,
    SADDLE,
    SEEDED_COUNT,
    seeded_polynomials,
)


def corpus_input(line: str):
    item = parse_line(line)
    assert item is not None
    return item


class TestCombine:
    def test_sums_when_every_part_holds(self) -> None:
        parts = [
            PartFactory(lhs=Fraction(1), rhs=Fraction(1)),
            PartFactory(lhs=Fraction(2), rhs=Fraction(2), bound=Fraction(1, 10)),
        ]

        assert combine(parts) == (Fraction(3), Fraction(3), True, Fraction(1, 10))

    def test_first_failing_part(self) -> None:
        parts = [
            PartFactory(lhs=Fraction(1), rhs=Fraction(1)),
            PartFactory(lhs=Fraction(2), rhs=Fraction(5)),
            PartFactory(lhs=Fraction(7), rhs=Fraction(0)),
        ]

        assert combine(parts) == (Fraction(2), Fraction(5), False, Fraction(0))


class TestBuildContext:
    def test_polynomial(self) -> None:
        context = build_context(corpus_input(f"poly: {PARABOLOID} alpha=1/2 seed=3"))

        assert isinstance(context, PlaneContext)
        assert (context.input_alpha, context.seed) == (Fraction(1, 2), 3)

    def test_plane_set_defaults_to_a_generic_linear_function(self) -> None:
        context = build_context(corpus_input(f"region: {DISK}"))

        assert isinstance(context, SetContext)
        assert context.f == DEFAULT_DIRECTION.linear()
        assert context.direction is None


class TestVerify:
    def test_fiber_of_the_paraboloid(self) -> None:
        report = verify("C4.2-FIBER", corpus_input(f"poly: {PARABOLOID} alpha=-1"))

        assert report.passed
        assert (report.lhs, report.rhs) == (0, 0)
        assert report.witnesses["chi eq -1"] == 0
        assert report.witnesses["parts"] == [
            {"part": "at -1", "lhs": 0, "rhs": 0, "bound": 0, "pass": True}
        ]

    def test_degree_at_infinity_from_branches(self) -> None:
        report = verify("SEKALSKI", corpus_input(f"poly: {BROUGHTON}"))

        assert report.passed
        assert (report.lhs, report.rhs) == (0, 0)

    def test_local_sublevel_of_the_saddle(self) -> None:
        report = verify("KH-LOC-LE", corpus_input(f"poly: {SADDLE}"))

        assert report.passed
        assert (report.lhs, report.rhs) == (2, 2)

    def test_gauss_bonnet_of_the_disk(self) -> None:
        report = verify("T5.6", corpus_input(f"region: {DISK}"))

        assert report.passed
        assert report.rhs == 1
        assert abs(report.lhs - 1) <= report.bound

    def test_not_proper(self) -> None:
        report = verify("T3.1-GE", corpus_input(f"poly: {BROUGHTON}"))

        assert not report.passed
        assert report.skipped_reason == "f is not proper on poly: x**2*y - x."
        assert report.witnesses["proper"] is False
        assert not report.degenerate

    def test_constant_input_is_degenerate(self) -> None:
        report = verify("T3.20", corpus_input("poly: 3"))

        assert report.skipped_reason == "f = 3 is constant."
        assert report.degenerate

    def test_identity_for_another_kind(self) -> None:
        report = verify("T5.6", CorpusInputFactory())

        assert report.skipped_reason == "T5.6 does not apply to poly inputs."
        assert report.witnesses == {}

    def test_no_critical_points(self) -> None:
        report = verify("KH-LOC-FIBER", corpus_input("poly: x + y^2"))

        assert report.skipped_reason == "x + y**2 has no critical points."

    def test_failure_reports_the_failing_level(self, mocker: MockerFixture) -> None:
        mocker.patch.object(PlaneContext, "compute_chi", return_value=5)

        report = verify("C4.2-FIBER", corpus_input(f"poly: {PARABOLOID} alpha=-1"))

        assert not report.passed
        assert report.skipped_reason is None
        assert (report.lhs, report.rhs) == (5, 0)
        assert report.witnesses["parts"][0]["pass"] is False

    def test_unknown_identity(self) -> None:
        with pytest.raises(PreconditionError) as exc:
            verify("T0", CorpusInputFactory())

        assert str(exc.value) == "Unknown identity 'T0'."


@pytest.mark.parametrize(
    "identity", ["T3.20", "T3.21-LE", "T3.21-GE", "C3.22", "T4.4", "T4.5-ALL", "P3.19"]
)
def test_sweep_identities_on_a_non_proper_function(identity: str) -> None:
    report = verify(identity, corpus_input(f"poly: {BROUGHTON} seed=2"))

    assert report.skipped_reason is None
    assert report.passed


@pytest.mark.parametrize("identity", ["KH-LOC-FIBER", "KH-LOC-LE", "KH-LOC-GE"])
@pytest.mark.parametrize("text", [PARABOLOID, "-x^2 - y^2", "(x^2 + y^2)^2"])
def test_local_identities_on_radially_symmetric_functions(identity: str, text: str) -> None:
    report = verify(identity, corpus_input(f"poly: {text}"))

    assert report.skipped_reason is None
    assert report.passed
    if identity != "KH-LOC-FIBER":
        assert (report.lhs, report.rhs) == (0, 0)


@pytest.mark.parametrize(
    "identity", ["T3.20", "T3.21-LE", "T3.21-GE", "C3.22", "T4.4", "T4.5-ALL"]
)
@pytest.mark.parametrize("index", range(SEEDED_COUNT))
def test_sweep_identities_on_seeded_polynomials(index: int, identity: str) -> None:
    f = seeded_polynomials()[index]
    report = verify(identity, corpus_input(f"poly: {format_polynomial(f)}"))

    assert report.skipped_reason is None
    assert report.passed
