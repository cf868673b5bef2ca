from fractions import Fraction
from typing import List

import pytest

from satopo.circle.levels import EQ, GE, LE
from satopo.core.roots import AlgNumber, Number, compare
from satopo.exceptions import HypothesisViolation, PreconditionError
from satopo.harness import identities
from satopo.harness.context import Context, IndexedPoint
from satopo.harness.identities import (
    CATALOG,
    IDENTITIES,
    applicable,
    get_identity,
    variation,
)
from satopo.harness.inputs import POLY
from satopo.stratified.sets import CURVE, REGION
from satopo.tests.factories import PartFactory

ORIGIN = AlgNumber.from_rational(Fraction(0))

IDENTITY_IDS: List[str] = [
    "KH-LOC-FIBER",
    "KH-LOC-LE",
    "KH-LOC-GE",
    "SEKALSKI",
    "T3.1-GE",
    "T3.1-LE",
    "C3.2-FIBER",
    "C3.2-DIFF",
    "C3.3",
    "C3.4",
    "P3.6-GE",
    "P3.6-LE",
    "C3.7-FIBER",
    "C3.7-DIFF",
    "P3.8-LE",
    "P3.8-GE",
    "C3.9",
    "T3.16",
    "T3.17",
    "C3.18",
    "P3.19",
    "T3.20",
    "T3.21-LE",
    "T3.21-GE",
    "C3.22",
    "P4.1-GE",
    "P4.1-LE",
    "C4.2-FIBER",
    "C4.2-DIFF",
    "P4.3-LINKS",
    "T4.4",
    "T4.5-ALL",
    "P5.4-ALL",
    "P5.5-ALL",
    "T5.6",
    "T5.8",
]


class ParaboloidContext(Context):
    """x^2 + y^2 on the plane, with every slice written down by hand."""

    description = "paraboloid"
    points = [IndexedPoint(ORIGIN, 1, 1, "origin")]
    breakpoints = [ORIGIN]

    def __init__(self, proper: bool = True, chi_ge_shift: int = 0):
        super().__init__()
        self.is_proper = proper
        self.chi_ge_shift = chi_ge_shift

    def compute_chi(self, alpha: Number, flavor: str) -> int:
        side: int = compare(alpha, Fraction(0))
        if flavor == LE:
            return 0 if side < 0 else 1
        if flavor == EQ:
            return 1 if side == 0 else 0
        return (1 if side <= 0 else 0) + self.chi_ge_shift

    def compute_link(self, alpha: Number, flavor: str) -> int:
        return 0

    def compute_chi_x(self) -> int:
        return 1

    def compute_link_x(self) -> int:
        return 0

    def compute_proper(self) -> bool:
        return self.is_proper


class TestCatalog:
    def test_every_identity_once_in_order(self) -> None:
        assert [identity.name for identity in CATALOG] == IDENTITY_IDS
        assert len(IDENTITIES) == len(IDENTITY_IDS)

    def test_anchors_are_quoted(self) -> None:
        assert get_identity("T3.16").anchor == "χ(Lk^∞(X ∩ {f ≤ b_j^+}))"
        assert get_identity("T4.5-ALL").anchor == "1 = 2 deg_∞ ∇f"

    def test_unknown_identity(self) -> None:
        with pytest.raises(PreconditionError) as exc:
            get_identity("T9.9")

        assert str(exc.value) == "Unknown identity 'T9.9'."

    def test_plane_sets(self) -> None:
        expected: List[str] = [
            "T3.1-GE",
            "T3.1-LE",
            "C3.2-FIBER",
            "C3.2-DIFF",
            "C3.3",
            "C3.4",
            "P5.4-ALL",
            "P5.5-ALL",
            "T5.6",
            "T5.8",
        ]

        assert [identity.name for identity in applicable(REGION)] == expected
        assert [identity.name for identity in applicable(CURVE)] == expected

    def test_polynomials(self) -> None:
        names: List[str] = [identity.name for identity in applicable(POLY)]

        assert len(names) == 32
        assert "T5.6" not in names


class TestPart:
    def test_exact(self) -> None:
        assert PartFactory(lhs=Fraction(2), rhs=Fraction(2)).holds
        assert not PartFactory(lhs=Fraction(2), rhs=Fraction(1)).holds

    def test_within_bound(self) -> None:
        part = PartFactory(lhs=Fraction(999, 1000), rhs=Fraction(1), bound=Fraction(1, 100))

        assert part.holds
        assert not PartFactory(lhs=Fraction(1, 2), rhs=Fraction(1), bound=Fraction(1, 100)).holds


def test_variation() -> None:
    def positive(alpha: Number, flavor: str) -> int:
        return 1 if compare(alpha, Fraction(0)) > 0 else 0

    # gaps at -1 and 1, one value at 0
    assert variation([ORIGIN], LE, positive) == 1
    assert variation([], LE, positive) == 0


@pytest.mark.parametrize(
    "check",
    [
        identities.proper_ge,
        identities.proper_le,
        identities.proper_fiber,
        identities.proper_difference,
        identities.proper_link,
        identities.proper_total,
        identities.plateaus,
        identities.fiber_variation,
        identities.sublevel_variation,
        identities.superlevel_variation,
        identities.index_difference,
    ],
)
def test_paraboloid_satisfies(check) -> None:
    parts = check(ParaboloidContext())

    assert parts
    assert all(part.holds for part in parts)


def test_proper_parts_per_level() -> None:
    parts = identities.proper_ge(ParaboloidContext())

    assert [part.name for part in parts] == ["at -1", "at 0", "at 1"]
    assert [(part.lhs, part.rhs) for part in parts] == [(1, 1), (0, 0), (0, 0)]


def test_plateaus_check_both_sides_of_each_sample() -> None:
    parts = identities.plateaus(ParaboloidContext())

    # two gaps, two neighbours each, three flavors
    assert len(parts) == 12


def test_wrong_superlevels_are_caught() -> None:
    parts = identities.proper_ge(ParaboloidContext(chi_ge_shift=1))

    assert not any(part.holds for part in parts)


def test_proper_hypothesis() -> None:
    with pytest.raises(HypothesisViolation) as exc:
        identities.proper_link(ParaboloidContext(proper=False))

    assert str(exc.value) == "f is not proper on paraboloid."


def test_superlevel_variation_flavor() -> None:
    context = ParaboloidContext()
    identities.superlevel_variation(context)

    assert {key for key in context.witnesses if key.startswith("chi")} == {
        "chi X",
        f"chi {GE} -1",
        f"chi {GE} 1",
        f"chi {GE} 0/1",
    }
