"""
Text grammar for polynomials: variables ``x`` and ``y``, integer and ``p/q``
literals, ``+ - * ^`` and parentheses. Implicit multiplication is rejected and
``/`` only ever joins two integer literals.
"""

import logging
import re
from fractions import Fraction
from typing import Dict, List, Tuple

import sympy
from sympy import Poly, QQ
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from satopo.core.polys import X, Y, monomials
from satopo.exceptions import ExpressionError

logger = logging.getLogger(__name__)

ALLOWED = re.compile(r"^[xy0-9+\-*/^()\s]+$")
IMPLICIT = re.compile(r"[0-9xy)]\s*[xy(]|[xy)]\s*[0-9]|[0-9]\s+[0-9]")
RATIONAL = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")
# p/q with nothing numeric glued on either side and not sitting in an exponent
LITERAL = re.compile(r"(?<![\^/\d])\d+/\d+(?![\d\^/])")

TRANSFORMATIONS = standard_transformations + (convert_xor,)
LOCALS: Dict[str, sympy.Symbol] = {"x": X, "y": Y}


def parse_polynomial(text: str) -> Poly:
    if not text or not text.strip():
        raise ExpressionError("Empty polynomial expression.")
    if not ALLOWED.match(text):
        raise ExpressionError(f"Unexpected characters in {text!r}.")
    if IMPLICIT.search(text):
        raise ExpressionError(f"Implicit multiplication is not allowed in {text!r}.")
    if "**" in text:
        raise ExpressionError(f"Use ^ for powers in {text!r}.")
    compact: str = re.sub(r"\s+", "", text)
    if compact.count("/") != len(LITERAL.findall(compact)):
        raise ExpressionError(f"Division is only allowed between integer literals in {text!r}.")

    try:
        expr = parse_expr(text, local_dict=LOCALS, transformations=TRANSFORMATIONS)
        return Poly(expr, X, Y, domain=QQ)
    except Exception as exc:
        logger.debug(f"Rejected {text!r}: {exc}")
        raise ExpressionError(f"Not a polynomial in x, y: {text!r}.")


def parse_rational(text: str) -> Fraction:
    if not RATIONAL.match(text):
        raise ExpressionError(f"Not a rational number: {text!r}.")
    return Fraction(text.replace(" ", ""))


def _power(name: str, exponent: int) -> List[str]:
    if exponent == 0:
        return []
    return [name if exponent == 1 else f"{name}^{exponent}"]


def format_polynomial(f: Poly) -> str:
    """Text that parse_polynomial reads back as f, highest monomials first."""
    terms: List[Tuple[Tuple[int, int], Fraction]] = sorted(monomials(f).items(), reverse=True)
    if not terms:
        return "0"

    text: str = ""
    for (i, j), coeff in terms:
        factors: List[str] = _power("x", i) + _power("y", j)
        magnitude: Fraction = abs(coeff)
        if magnitude != 1 or not factors:
            factors.insert(0, str(magnitude))
        term: str = "*".join(factors)
        if not text:
            text = f"-{term}" if coeff < 0 else term
        else:
            text += f" - {term}" if coeff < 0 else f" + {term}"
    return text
