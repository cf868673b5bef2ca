"""
Verification of one identity on one input.

Left sides are read from the sweep and right sides from the critical point and
infinity pipelines; a report either carries both sides and every witness, or a
reason why the identity was skipped. Skipped is never reported as passed.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from sympy import Poly

from satopo.core.parser import parse_polynomial
from satopo.core.polys import total_degree
from satopo.exceptions import DegenerateInputError, HypothesisViolation, SatopoError
from satopo.harness.context import Context, PlaneContext, SetContext
from satopo.harness.identities import Identity, Part, get_identity
from satopo.harness.inputs import CorpusInput
from satopo.harness.reports import IdentityReport
from satopo.stratified.directions import Direction

logger = logging.getLogger(__name__)

DEFAULT_DIRECTION: Direction = Direction(Fraction(1, 3))


def build_context(item: CorpusInput) -> Context:
    if not item.is_plane_set:
        f: Poly = item.polynomial
        if total_degree(f) < 1:
            raise DegenerateInputError(f"f = {f.as_expr()} is constant.")
        return PlaneContext(f, item.alpha, item.seed)

    g: Poly = (
        DEFAULT_DIRECTION.linear() if item.function is None else parse_polynomial(item.function)
    )
    return SetContext(item.plane_set(), g, item.alpha, item.direction)


def combine(parts: List[Part]) -> Tuple[Fraction, Fraction, bool, Fraction]:
    """The first failing part, or the sums over all parts when every one holds."""
    for p in parts:
        if not p.holds:
            return p.lhs, p.rhs, False, p.bound
    return (
        sum((p.lhs for p in parts), Fraction(0)),
        sum((p.rhs for p in parts), Fraction(0)),
        True,
        sum((p.bound for p in parts), Fraction(0)),
    )


def part_witness(p: Part) -> Dict[str, Any]:
    return {"part": p.name, "lhs": p.lhs, "rhs": p.rhs, "bound": p.bound, "pass": p.holds}


def verify(identity_name: str, item: CorpusInput) -> IdentityReport:
    identity: Identity = get_identity(identity_name)
    description: str = str(item)
    if item.kind not in identity.kinds:
        return IdentityReport(
            identity.name,
            description,
            skipped_reason=f"{identity.name} does not apply to {item.kind} inputs.",
        )

    context: Optional[Context] = None
    try:
        context = build_context(item)
        parts: List[Part] = identity.check(context)
        if not parts:
            raise HypothesisViolation(f"{identity.name} has no instance on {description}.")
    except SatopoError as exc:
        logger.warning(f"{identity.name} skipped on {description}: {exc}")
        return IdentityReport(
            identity.name,
            description,
            witnesses=dict(context.witnesses) if context is not None else {},
            skipped_reason=str(exc),
            degenerate=isinstance(exc, DegenerateInputError),
        )

    lhs, rhs, passed, bound = combine(parts)
    witnesses: Dict[str, Any] = dict(context.witnesses)
    witnesses["parts"] = [part_witness(p) for p in parts]
    logger.info(f"{identity.name} on {description}: {'pass' if passed else 'FAIL'}")

    return IdentityReport(identity.name, description, lhs, rhs, passed, witnesses, None, bound)
