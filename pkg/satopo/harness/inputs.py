"""
Corpus inputs: one polynomial or plane set per line.

    poly: x*(x*y - 1) alpha=1/2 seed=3
    region: x^2 + y^2 - 1 f=x^2+y v=3/5,4/5
    curve: y - x^2

``#`` starts a comment. Key-value suffixes are ``alpha``, ``seed``, ``f`` (the
function studied on a plane set) and ``v`` (a direction, either a half-angle
parameter or a rational unit vector ``a/b,c/d``).
"""

import logging
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import Poly

from satopo.conf import get_setting
from satopo.core.parser import format_polynomial, parse_polynomial, parse_rational
from satopo.core.polys import X, Y, bpoly, total_degree
from satopo.critical.points import find_critical_points
from satopo.exceptions import CorpusParseError, SatopoError
from satopo.stratified.directions import Direction, direction_from_vector
from satopo.stratified.sets import CURVE, REGION, PlaneSet, plane_set

logger = logging.getLogger(__name__)

POLY: str = "poly"
INPUT_KINDS: List[str] = [POLY, REGION, CURVE]
KEYS: List[str] = ["alpha", "seed", "f", "v"]
SUFFIX = re.compile(r"^(?P<key>[a-z]+)=(?P<value>\S+)$")

BUILTIN_CORPUS: str = """\
# local formulas at isolated critical points
poly: x^2 + y^2
poly: x^2 - y^2
poly: x^3 - 3*x*y^2
poly: -x^2 - y^2
# non-proper functions
poly: x*(x*y - 1)
poly: x^2*y - x
poly: x^3 - 3*x + y^2 alpha=1/2
# plane sets
region: x^2 + y^2 - 1
region: y - x^2
region: y
curve: x^2 + y^2 - 1
"""


@dataclass(frozen=True)
class CorpusInput:
    kind: str
    text: str
    alpha: Optional[Fraction] = None
    seed: Optional[int] = None
    function: Optional[str] = None
    direction: Optional[Direction] = None
    line_number: int = 0

    @property
    def polynomial(self) -> Poly:
        return parse_polynomial(self.text)

    @property
    def is_plane_set(self) -> bool:
        return self.kind != POLY

    def plane_set(self) -> PlaneSet:
        return plane_set(self.polynomial, self.kind)

    def __str__(self) -> str:
        suffix: str = ""
        if self.alpha is not None:
            suffix += f" alpha={self.alpha}"
        if self.seed is not None:
            suffix += f" seed={self.seed}"
        if self.function is not None:
            suffix += f" f={self.function}"
        if self.direction is not None:
            suffix += f" v={self.direction.parameter}"
        return f"{self.kind}: {self.text}{suffix}"


def parse_direction(text: str) -> Direction:
    """A half-angle parameter ``s`` or a rational unit vector ``a/b,c/d``."""
    if "," in text:
        v1, v2 = (parse_rational(part) for part in text.split(",", 1))
        return direction_from_vector(v1, v2)
    return Direction(parse_rational(text))


def _split_suffixes(rest: str, line_number: int) -> Tuple[str, Dict[str, str]]:
    tokens: List[str] = rest.split()
    options: Dict[str, str] = {}
    while tokens:
        match = SUFFIX.match(tokens[-1])
        if match is None:
            break
        key: str = match.group("key")
        if key not in KEYS:
            raise CorpusParseError(f"Unknown key {key!r}; expected one of {KEYS}.", line_number)
        if key in options:
            raise CorpusParseError(f"Key {key!r} is given twice.", line_number)
        options[key] = match.group("value")
        tokens.pop()

    return " ".join(tokens), options


def parse_line(line: str, line_number: int = 0) -> Optional[CorpusInput]:
    """The input on one corpus line, or None for blank and comment lines."""
    content: str = line.split("#", 1)[0].strip()
    if not content:
        return None
    if ":" not in content:
        raise CorpusParseError(f"Expected '<kind>: <expression>', got {content!r}.", line_number)
    kind, rest = (part.strip() for part in content.split(":", 1))
    if kind not in INPUT_KINDS:
        raise CorpusParseError(
            f"Unknown kind {kind!r}; expected one of {INPUT_KINDS}.", line_number
        )
    text, options = _split_suffixes(rest, line_number)
    if "f" in options and kind == POLY:
        raise CorpusParseError("The key 'f' only applies to plane sets.", line_number)

    try:
        parse_polynomial(text)
        if "f" in options:
            parse_polynomial(options["f"])
        return CorpusInput(
            kind=kind,
            text=text,
            alpha=parse_rational(options["alpha"]) if "alpha" in options else None,
            seed=int(options["seed"]) if "seed" in options else None,
            function=options.get("f"),
            direction=parse_direction(options["v"]) if "v" in options else None,
            line_number=line_number,
        )
    except ValueError as exc:
        raise CorpusParseError(f"Bad seed: {exc}.", line_number) from exc
    except SatopoError as exc:
        raise CorpusParseError(str(exc), line_number) from exc


def parse_corpus(text: str) -> List[CorpusInput]:
    inputs: List[CorpusInput] = []
    for number, line in enumerate(text.splitlines(), start=1):
        item: Optional[CorpusInput] = parse_line(line, number)
        if item is not None:
            inputs.append(item)
    logger.info(f"Parsed {len(inputs)} corpus inputs")

    return inputs


def builtin_corpus() -> List[CorpusInput]:
    return parse_corpus(BUILTIN_CORPUS)


def _random_candidates(seed: int, degree: int) -> Iterator[Poly]:
    rng: random.Random = random.Random(seed)
    monomials: List[Tuple[int, int]] = [
        (i, j) for i in range(degree + 1) for j in range(degree + 1 - i) if i + j > 0
    ]
    while True:
        terms = [rng.randint(-3, 3) * X ** i * Y ** j for i, j in monomials if rng.random() < 0.5]
        yield bpoly(sum(terms))


def random_polynomials(count: int, seed: Optional[int] = None, degree: int = 4) -> List[Poly]:
    """Seeded random polynomials of degree at least 2 with finitely many critical points."""
    if seed is None:
        seed = get_setting("SATOPO_SEED")
    found: List[Poly] = []
    for f in _random_candidates(seed, degree):
        if len(found) == count:
            break
        if total_degree(f) < 2 or f in found:
            continue
        try:
            find_critical_points(f)
        except SatopoError as exc:
            logger.debug(f"Random candidate {f.as_expr()} rejected: {exc}")
            continue
        found.append(f)

    return found


def random_corpus(count: int, seed: Optional[int] = None) -> str:
    return "".join(f"{POLY}: {format_polynomial(f)}\n" for f in random_polynomials(count, seed))
