"""
The identity catalog: every relation between Euler characteristics, indices and
behaviour at infinity that the harness checks, each with its two sides.

Left sides come from the sweep (Euler characteristics of slices, links of
sets) and right sides from critical points, degrees and large circles. A check
returns one part per instance (critical point, level or direction); the
identity holds when every part does.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from satopo.circle.levels import EQ, GE, LE
from satopo.core.roots import AlgNumber, Number, gap_samples
from satopo.euler.engine import plateau_neighbours
from satopo.exceptions import HypothesisViolation, PreconditionError
from satopo.harness.context import Context, PlaneContext, SetContext
from satopo.harness.inputs import POLY
from satopo.infinity.asymptotic import lambda_set, sekalski_sum
from satopo.stratified.directions import Direction
from satopo.stratified.gauss_bonnet import EXACT, SAMPLED, gauss_bonnet, gauss_bonnet_rhs
from satopo.stratified.linear import Identity as SummaryIdentity
from satopo.stratified.linear import LinearMorseSummary
from satopo.stratified.sets import CURVE, REGION

logger = logging.getLogger(__name__)

PLANE: Tuple[str, ...] = (POLY,)
SETS: Tuple[str, ...] = (REGION, CURVE)
EVERY: Tuple[str, ...] = (POLY, REGION, CURVE)

DIRECTION_PARAMETERS: List[Fraction] = [
    Fraction(1, 3),
    Fraction(-2, 7),
    Fraction(5, 2),
    Fraction(-7, 4),
    Fraction(3, 11),
    Fraction(-9, 5),
    Fraction(4, 13),
    Fraction(-1, 6),
]
DIRECTIONS_PER_SET: int = 5


@dataclass(frozen=True)
class Part:
    name: str
    lhs: Fraction
    rhs: Fraction
    bound: Fraction = Fraction(0)

    @property
    def holds(self) -> bool:
        return abs(self.lhs - self.rhs) <= self.bound


Check = Callable[[Any], List[Part]]


@dataclass(frozen=True)
class Identity:
    name: str
    anchor: str
    kinds: Tuple[str, ...]
    check: Check


def part(name: str, lhs: Number, rhs: Number, bound: Fraction = Fraction(0)) -> Part:
    return Part(name, Fraction(lhs), Fraction(rhs), bound)


def require_proper(context: Context) -> None:
    if not context.proper:
        raise HypothesisViolation(f"f is not proper on {context.description}.")


def require_compact(context: SetContext) -> None:
    if not context.x_set.is_compact():
        raise HypothesisViolation(f"{context.x_set} is not compact.")


def variation(
    values: Sequence[AlgNumber], flavor: str, measure: Callable[[Number, str], int]
) -> int:
    """Σ over the gaps of measure at a sample minus Σ of measure at the values."""
    return sum(measure(s, flavor) for s in gap_samples(list(values))) - sum(
        measure(v, flavor) for v in values
    )


def per_level(context: Context, build: Callable[[Fraction], List[Part]]) -> List[Part]:
    parts: List[Part] = []
    for alpha in context.alphas:
        parts.extend(build(alpha))
    return parts


# Local formulas at isolated critical points of f on the plane.


def _local(context: PlaneContext, build) -> List[Part]:
    if not context.critical_points:
        raise HypothesisViolation(f"{context.f.as_expr()} has no critical points.")
    parts: List[Part] = []
    for p in context.critical_points:
        counts = context.local_counts(p)
        context.witnesses[f"local counts at {p.solution}"] = {
            "below": counts.below,
            "at": counts.at,
            "above": counts.above,
            "sublevel": counts.sublevel,
            "superlevel": counts.superlevel,
            "degree": p.local_degree,
        }
        parts.extend(build(str(p.solution), counts, p.local_degree))
    return parts


def local_fiber(context: PlaneContext) -> List[Part]:
    return _local(
        context,
        lambda at, counts, degree: [
            part(f"fiber below {at}", counts.fiber_chi_below, 1 - degree),
            part(f"fiber above {at}", counts.fiber_chi_above, 1 - degree),
            part(f"level on the sphere at {at}", counts.at, 2 - 2 * degree),
        ],
    )


def local_sublevel(context: PlaneContext) -> List[Part]:
    return _local(
        context,
        lambda at, counts, degree: [part(f"sublevel at {at}", counts.sublevel, 1 - degree)],
    )


def local_superlevel(context: PlaneContext) -> List[Part]:
    return _local(
        context,
        lambda at, counts, degree: [part(f"superlevel at {at}", counts.superlevel, 1 - degree)],
    )


def sekalski(context: PlaneContext) -> List[Part]:
    context.witnesses["asymptotic values"] = list(lambda_set(context.f, context.basepoint))
    return [
        part(
            "degree at infinity",
            context.degree_at_infinity,
            sekalski_sum(context.f, context.basepoint),
        )
    ]


# Proper functions (compact sets for plane sets).


def proper_ge(context: Context) -> List[Part]:
    require_proper(context)
    return per_level(
        context,
        lambda a: [
            part(f"at {a}", context.chi(a, GE) - context.chi(a, EQ), context.above(a)),
        ],
    )


def proper_le(context: Context) -> List[Part]:
    require_proper(context)
    return per_level(
        context,
        lambda a: [
            part(
                f"at {a}",
                context.chi(a, LE) - context.link(a, LE),
                context.total() - context.above(a),
            ),
        ],
    )


def proper_fiber(context: Context) -> List[Part]:
    require_proper(context)
    return per_level(
        context,
        lambda a: [
            part(
                f"at {a}",
                context.chi(a, EQ),
                context.chi_x - context.above(a) - context.below(a, negate=True),
            ),
        ],
    )


def proper_difference(context: Context) -> List[Part]:
    require_proper(context)
    return per_level(
        context,
        lambda a: [
            part(
                f"at {a}",
                context.chi(a, GE) - context.chi(a, LE),
                context.above(a) - context.below(a, negate=True),
            ),
        ],
    )


def proper_link(context: Context) -> List[Part]:
    require_proper(context)
    return per_level(
        context,
        lambda a: [part(f"at {a}", context.link(a, LE), context.chi_x - context.total())],
    )


def proper_total(context: Context) -> List[Part]:
    require_proper(context)
    return [
        part(
            "index sums",
            2 * context.chi_x - context.link_x,
            context.total() + context.total(negate=True),
        )
    ]


# Correction terms from large circles, for any f on the plane.


def slices_ge(context: PlaneContext) -> List[Part]:
    return per_level(
        context,
        lambda a: [
            part(
                f"at {a}",
                context.chi(a, GE) - context.chi(a, EQ),
                context.above(a) + context.lambda_mu_nu(a)[0],
            ),
        ],
    )


def slices_le(context: PlaneContext) -> List[Part]:
    return per_level(
        context,
        lambda a: [
            part(
                f"at {a}",
                context.chi(a, LE) - context.chi(a, EQ),
                context.below(a, negate=True) + context.co_lambda_mu_nu(a)[0],
            ),
        ],
    )


def slices_fiber(context: PlaneContext) -> List[Part]:
    def build(a: Fraction) -> List[Part]:
        rhs: int = (
            context.chi_x
            - context.above(a)
            - context.below(a, negate=True)
            - context.lambda_mu_nu(a)[0]
            - context.co_lambda_mu_nu(a)[0]
        )
        return [part(f"at {a}", context.chi(a, EQ), rhs)]

    return per_level(context, build)


def slices_difference(context: PlaneContext) -> List[Part]:
    def build(a: Fraction) -> List[Part]:
        rhs: int = (
            context.above(a)
            + context.lambda_mu_nu(a)[0]
            - context.below(a, negate=True)
            - context.co_lambda_mu_nu(a)[0]
        )
        return [part(f"at {a}", context.chi(a, GE) - context.chi(a, LE), rhs)]

    return per_level(context, build)


def links_le(context: PlaneContext) -> List[Part]:
    def build(a: Fraction) -> List[Part]:
        lam, mu, _ = context.lambda_mu_nu(a)
        return [part(f"at {a}", context.link(a, LE), context.chi_x - context.total() - lam + mu)]

    return per_level(context, build)


def links_ge(context: PlaneContext) -> List[Part]:
    def build(a: Fraction) -> List[Part]:
        lam, mu, _ = context.co_lambda_mu_nu(a)
        rhs: int = context.chi_x - context.total(negate=True) - lam + mu
        return [part(f"at {a}", context.link(a, GE), rhs)]

    return per_level(context, build)


def links_eq(context: PlaneContext) -> List[Part]:
    def build(a: Fraction) -> List[Part]:
        lam, mu, _ = context.lambda_mu_nu(a)
        co_lam, co_mu, _ = context.co_lambda_mu_nu(a)
        rhs: int = (
            2 * context.chi_x
            - context.link_x
            - context.total()
            - context.total(negate=True)
            - lam
            + mu
            - co_lam
            + co_mu
        )
        return [part(f"at {a}", context.link(a, EQ), rhs)]

    return per_level(context, build)


# Variations of the links across the jump sets.


def link_jumps_le(context: PlaneContext) -> List[Part]:
    rhs: int = context.total() + variation(context.jump_set(LE), LE, context.link)
    return [part("links of sublevels", context.chi_x, rhs)]


def link_jumps_ge(context: PlaneContext) -> List[Part]:
    rhs: int = context.total(negate=True) + variation(context.jump_set(GE), GE, context.link)
    return [part("links of superlevels", context.chi_x, rhs)]


def link_jumps_eq(context: PlaneContext) -> List[Part]:
    rhs: int = (
        context.total()
        + context.total(negate=True)
        + variation(context.jump_set(EQ), EQ, context.link)
    )
    return [part("links of levels", 2 * context.chi_x - context.link_x, rhs)]


def plateaus(context: Context) -> List[Part]:
    values: List[AlgNumber] = context.breakpoints
    samples: List[Fraction] = gap_samples(values)
    parts: List[Part] = []
    for i, sample in enumerate(samples):
        for level in plateau_neighbours(values, samples, i):
            for flavor in (LE, EQ, GE):
                parts.append(
                    part(
                        f"{flavor} at {level} against {sample}",
                        context.chi(level, flavor),
                        context.chi(sample, flavor),
                    )
                )
    return parts


# Variations of the slices across the breakpoints.


def fiber_variation(context: Context) -> List[Part]:
    rhs: int = (
        context.total()
        + context.total(negate=True)
        + variation(context.breakpoints, EQ, context.chi)
    )
    return [part("fibers", context.chi_x, rhs)]


def sublevel_variation(context: Context) -> List[Part]:
    rhs: int = context.total() + variation(context.breakpoints, LE, context.chi)
    return [part("sublevels", context.chi_x, rhs)]


def superlevel_variation(context: Context) -> List[Part]:
    rhs: int = context.total(negate=True) + variation(context.breakpoints, GE, context.chi)
    return [part("superlevels", context.chi_x, rhs)]


def _balance(context: Context, values: List[AlgNumber]) -> int:
    """Σ over the gaps of χ(≥) - χ(≤) minus the same at the breakpoints."""
    return variation(values, GE, context.chi) - variation(values, LE, context.chi)


def index_difference(context: Context) -> List[Part]:
    return [
        part(
            "slices",
            _balance(context, context.breakpoints),
            context.total() - context.total(negate=True),
        )
    ]


# The plane, with degrees of the gradient.


def degree_ge(context: PlaneContext) -> List[Part]:
    return per_level(
        context,
        lambda a: [
            part(
                f"at {a}",
                context.chi(a, GE) - context.chi(a, EQ),
                context.above(a) + context.lambda_mu_nu(a)[0],
            ),
        ],
    )


def degree_le(context: PlaneContext) -> List[Part]:
    return per_level(
        context,
        lambda a: [
            part(
                f"at {a}",
                context.chi(a, LE) - context.chi(a, EQ),
                context.below(a) - context.lambda_mu_nu(a)[1],
            ),
        ],
    )


def degree_fiber(context: PlaneContext) -> List[Part]:
    def build(a: Fraction) -> List[Part]:
        lam, mu, _ = context.lambda_mu_nu(a)
        rhs: int = 1 - context.above(a) - context.below(a) - lam + mu
        return [part(f"at {a}", context.chi(a, EQ), rhs)]

    return per_level(context, build)


def degree_difference(context: PlaneContext) -> List[Part]:
    def build(a: Fraction) -> List[Part]:
        lam, mu, _ = context.lambda_mu_nu(a)
        rhs: int = context.above(a) - context.below(a) + lam + mu
        return [part(f"at {a}", context.chi(a, GE) - context.chi(a, LE), rhs)]

    return per_level(context, build)


def degree_links(context: PlaneContext) -> List[Part]:
    def build(a: Fraction) -> List[Part]:
        lam, mu, _ = context.lambda_mu_nu(a)
        half: int = 1 - context.degree_at_infinity - lam + mu
        return [
            part(f"sublevel link at {a}", context.link(a, LE), half),
            part(f"superlevel link at {a}", context.link(a, GE), half),
            part(f"level link at {a}", context.link(a, EQ), 2 * half),
        ]

    return per_level(context, build)


def degree_link_jumps(context: PlaneContext) -> List[Part]:
    degree: int = context.degree_at_infinity
    return [
        part(
            "sublevel links",
            context.chi_x,
            degree + variation(context.jump_set(LE), LE, context.link),
        ),
        part(
            "superlevel links",
            context.chi_x,
            degree + variation(context.jump_set(GE), GE, context.link),
        ),
        part(
            "level links",
            2 * context.chi_x,
            2 * degree + variation(context.jump_set(EQ), EQ, context.link),
        ),
    ]


def degree_variations(context: PlaneContext) -> List[Part]:
    degree: int = context.degree_at_infinity
    values: List[AlgNumber] = context.breakpoints
    gaps: int = sum(context.chi(s, GE) - context.chi(s, LE) for s in gap_samples(values))
    at_values: int = sum(context.chi(v, GE) - context.chi(v, LE) for v in values)
    return [
        part("fibers", context.chi_x, 2 * degree + variation(values, EQ, context.chi)),
        part("sublevels", context.chi_x, degree + variation(values, LE, context.chi)),
        part("superlevels", context.chi_x, degree + variation(values, GE, context.chi)),
        part("superlevels against sublevels", gaps, at_values),
    ]


# Generic linear functions on plane sets.


def generic_directions(context: SetContext) -> List[Direction]:
    if context.direction is not None:
        return [context.direction]
    chosen: List[Direction] = []
    for parameter in DIRECTION_PARAMETERS:
        if len(chosen) == DIRECTIONS_PER_SET:
            break
        direction: Direction = Direction(parameter)
        try:
            context.summary(direction)
        except PreconditionError as exc:
            logger.debug(f"Direction {direction} skipped: {exc}")
            continue
        chosen.append(direction)
    context.witnesses["directions"] = [str(d) for d in chosen]

    return chosen


def _summary_parts(
    context: SetContext, pick: Callable[[LinearMorseSummary], List[SummaryIdentity]]
) -> List[Part]:
    parts: List[Part] = []
    for direction in generic_directions(context):
        summary: LinearMorseSummary = context.summary(direction)
        for name, lhs, rhs in pick(summary):
            parts.append(part(f"{name} along {direction}", lhs, rhs))
    return parts


def linear_slices(context: SetContext) -> List[Part]:
    return _summary_parts(context, LinearMorseSummary.slice_identities)


def linear_links(context: SetContext) -> List[Part]:
    return _summary_parts(context, LinearMorseSummary.link_identities)


def compact_measure(context: SetContext) -> List[Part]:
    require_compact(context)
    result = gauss_bonnet(context.x_set, EXACT)
    context.witnesses["measure"] = str(result)
    return [part("measure", result.value, context.chi_x, result.bound)]


def closed_measure(context: SetContext) -> List[Part]:
    parts: List[Part] = []
    for mode, count in ((EXACT, None), (SAMPLED, context.samples)):
        lhs = gauss_bonnet(context.x_set, mode, count)
        rhs = gauss_bonnet_rhs(context.x_set, mode, count)
        context.witnesses[f"measure {mode}"] = str(lhs)
        context.witnesses[f"closed formula {mode}"] = str(rhs)
        parts.append(part(mode, lhs.value, rhs.value, lhs.bound + rhs.bound))
    return parts


CATALOG: List[Identity] = [
    Identity("KH-LOC-FIBER", "1 - sign(-δ)^n deg_0 ∇f", PLANE, local_fiber),
    Identity("KH-LOC-LE", "χ({f ≤ 0} ∩ S) = 1 - deg_0 ∇f", PLANE, local_sublevel),
    Identity(
        "KH-LOC-GE", "χ({f ≥ 0} ∩ S) = 1 + (-1)^(n-1) deg_0 ∇f", PLANE, local_superlevel
    ),
    Identity("SEKALSKI", "real branches at infinity of a curve", PLANE, sekalski),
    Identity("T3.1-GE", "Σ_{f(p_i) > α} ind(f,X,p_i)", EVERY, proper_ge),
    Identity("T3.1-LE", "χ(X ∩ {f ≤ α}) - χ(Lk^∞(X ∩ {f ≤ α}))", EVERY, proper_le),
    Identity(
        "C3.2-FIBER", "χ(X ∩ {f = α}) = χ(X) - Σ ind(f) - Σ ind(-f)", EVERY, proper_fiber
    ),
    Identity("C3.2-DIFF", "χ(X ∩ {f ≥ α}) - χ(X ∩ {f ≤ α})", EVERY, proper_difference),
    Identity("C3.3", "χ(Lk^∞(X ∩ {f ≤ α})) = χ(X) - Σ ind(f,X,p_i)", EVERY, proper_link),
    Identity("C3.4", "2χ(X) - χ(Lk^∞(X))", EVERY, proper_total),
    Identity("P3.6-GE", "Σ_{f(p_i) > α} ind(f,X,p_i) + λ_{f,α}", PLANE, slices_ge),
    Identity("P3.6-LE", "Σ_{f(p_i) < α} ind(-f,X,p_i) + λ_{-f,-α}", PLANE, slices_le),
    Identity("C3.7-FIBER", "- λ_{f,α} - λ_{-f,-α}", PLANE, slices_fiber),
    Identity("C3.7-DIFF", "+ λ_{f,α} - λ_{-f,-α}", PLANE, slices_difference),
    Identity("P3.8-LE", "χ(X) - Σ ind(f,X,p_i) - λ_{f,α} + μ_{f,α}", PLANE, links_le),
    Identity("P3.8-GE", "χ(X) - Σ ind(-f,X,p_i) - λ_{-f,-α} + μ_{-f,-α}", PLANE, links_ge),
    Identity("C3.9", "2χ(X) - χ(Lk^∞(X)) - Σ ind(f) - Σ ind(-f)", PLANE, links_eq),
    Identity("T3.16", "χ(Lk^∞(X ∩ {f ≤ b_j^+}))", PLANE, link_jumps_le),
    Identity("T3.17", "χ(Lk^∞(X ∩ {f ≥ c_j^+}))", PLANE, link_jumps_ge),
    Identity("C3.18", "χ(Lk^∞(X ∩ {f = d_j^+}))", PLANE, link_jumps_eq),
    Identity("P3.19", "are constant in a neighborhood of α", PLANE, plateaus),
    Identity("T3.20", "χ(X ∩ {f = γ_k^+}) - χ(X ∩ {f = γ_k})", PLANE, fiber_variation),
    Identity(
        "T3.21-LE", "χ(X ∩ {f ≤ γ_k^+}) - χ(X ∩ {f ≤ γ_k})", PLANE, sublevel_variation
    ),
    Identity(
        "T3.21-GE",
        "χ(X ∩ {f ≥ γ_k^+}) - χ(X ∩ {f ≥ γ_k})",
        PLANE,
        superlevel_variation,
    ),
    Identity("C3.22", "ind(f,X,p_i) - ind(-f,X,p_i)", PLANE, index_difference),
    Identity("P4.1-GE", "Σ_{f(p_i) > α} deg_{p_i} ∇f + λ_{f,α}", PLANE, degree_ge),
    Identity("P4.1-LE", "(-1)^n Σ deg_{p_i} ∇f + (-1)^(n-1) μ_{f,α}", PLANE, degree_le),
    Identity("C4.2-FIBER", "deg_{p_i} ∇f - λ_{f,α} + μ_{f,α}", PLANE, degree_fiber),
    Identity("C4.2-DIFF", "+ λ_{f,α} + μ_{f,α}", PLANE, degree_difference),
    Identity("P4.3-LINKS", "1 - deg_∞ ∇f - λ_{f,α} + μ_{f,α}", PLANE, degree_links),
    Identity("T4.4", "1 = deg_∞ ∇f + Σ χ(Lk^∞({f ≤ b_i^+}))", PLANE, degree_link_jumps),
    Identity("T4.5-ALL", "1 = 2 deg_∞ ∇f", PLANE, degree_variations),
    Identity("P5.4-ALL", "Σ_{v*(p_i) > α} ind(v*,X,p_i)", SETS, linear_slices),
    Identity("P5.5-ALL", "χ(X) - Σ ind(v*,X,p_i)", SETS, linear_links),
    Identity("T5.6", "Λ_0(X,X) = χ(X)", SETS, compact_measure),
    Identity("T5.8", "χ(X) - ½ χ(Lk^∞(X))", SETS, closed_measure),
]

IDENTITIES: Dict[str, Identity] = {identity.name: identity for identity in CATALOG}


def get_identity(name: str) -> Identity:
    identity: Optional[Identity] = IDENTITIES.get(name)
    if identity is None:
        raise PreconditionError(f"Unknown identity {name!r}.")
    return identity


def applicable(kind: str) -> List[Identity]:
    return [identity for identity in CATALOG if kind in identity.kinds]
