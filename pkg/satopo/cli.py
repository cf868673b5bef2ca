"""
The ``satopo`` command line.

Every subcommand prints JSON (``plot`` writes an SVG file). Exit codes: 0 on
success, 1 when an identity fails or a computation errors, 2 on degenerate
input.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from sympy import Poly

from satopo.circle.levels import FLAVORS
from satopo.circle.winding import degree_at_infinity
from satopo.conf import configure_logging
from satopo.core.parser import parse_polynomial, parse_rational
from satopo.critical.points import CriticalPoint, find_critical_points
from satopo.euler.engine import chi, chi_c
from satopo.exceptions import DegenerateInputError, SatopoError
from satopo.harness.identities import IDENTITIES
from satopo.harness.inputs import (
    POLY,
    CorpusInput,
    builtin_corpus,
    parse_corpus,
    parse_line,
    random_corpus,
)
from satopo.harness.reports import EXIT_DEGENERATE, EXIT_FAILED, EXIT_OK, serialize
from satopo.harness.svg import plot_polynomial, plot_set
from satopo.harness.tasks import run_corpus
from satopo.harness.verify import DEFAULT_DIRECTION, verify
from satopo.infinity.asymptotic import generic_basepoint, jump_sets, lambda_set
from satopo.infinity.gamma import BasePoint
from satopo.infinity.links import half_branches, link_chi
from satopo.stratified.gauss_bonnet import EXACT, MODES, gauss_bonnet
from satopo.stratified.sets import CURVE, REGION, PlaneSet, plane_set

logger = logging.getLogger(__name__)


class Command:
    name: str = ""
    help: str = ""

    def __init__(self, stdout: Optional[TextIO] = None):
        self._stdout: Optional[TextIO] = stdout

    @property
    def stdout(self) -> TextIO:
        return self._stdout or sys.stdout

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def handle(self, options: argparse.Namespace) -> int:
        raise NotImplementedError

    def write(self, data: Any) -> None:
        self.stdout.write(json.dumps(serialize(data), indent=2, ensure_ascii=False) + "\n")


def add_set_arguments(parser: argparse.ArgumentParser, required: bool = False) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--region", type=str, help="the region {g <= 0}")
    group.add_argument("--curve", type=str, help="the curve {g = 0}")


def set_from(options: argparse.Namespace) -> Optional[PlaneSet]:
    if options.region is not None:
        return plane_set(parse_polynomial(options.region), REGION)
    if options.curve is not None:
        return plane_set(parse_polynomial(options.curve), CURVE)
    return None


class CriticalCommand(Command):
    name = "critical"
    help = "Critical points of f with their local degrees and values"

    def add_arguments(self, parser):
        parser.add_argument("poly", type=str)

    def handle(self, options):
        points: List[CriticalPoint] = find_critical_points(parse_polynomial(options.poly))
        self.write(
            [
                {
                    "point": str(p.solution),
                    "degree": p.local_degree,
                    "value": p.value,
                    "ind_f": p.ind_f,
                    "ind_neg_f": p.ind_neg_f,
                }
                for p in points
            ]
        )
        return EXIT_OK


class DegreeAtInfinityCommand(Command):
    name = "deg-inf"
    help = "Degree of the gradient of f on a large circle"

    def add_arguments(self, parser):
        parser.add_argument("poly", type=str)

    def handle(self, options):
        self.write({"degree_at_infinity": degree_at_infinity(parse_polynomial(options.poly))})
        return EXIT_OK


class LambdaCommand(Command):
    name = "lambda"
    help = "Asymptotic values of f and the three jump sets"

    def add_arguments(self, parser):
        parser.add_argument("poly", type=str)
        parser.add_argument("--seed", type=int, default=None)

    def handle(self, options):
        f: Poly = parse_polynomial(options.poly)
        a: BasePoint = generic_basepoint(f, options.seed)
        le, eq, ge = jump_sets(f, a)
        self.write(
            {
                "base_point": list(a),
                "lambda": list(lambda_set(f, a).values),
                "le": list(le.values),
                "eq": list(eq.values),
                "ge": list(ge.values),
            }
        )
        return EXIT_OK


class ChiCommand(Command):
    name = "chi"
    help = "Euler characteristic of {f flavor alpha}"

    def add_arguments(self, parser):
        parser.add_argument("poly", type=str)
        parser.add_argument("--alpha", type=parse_rational, required=True)
        parser.add_argument("--flavor", choices=FLAVORS, required=True)
        parser.add_argument(
            "--compact", action="store_true", help="Euler characteristic with compact supports"
        )

    def handle(self, options):
        f: Poly = parse_polynomial(options.poly)
        compute = chi_c if options.compact else chi
        self.write({"chi": compute(f, options.alpha, options.flavor)})
        return EXIT_OK


class LinkCommand(Command):
    name = "link"
    help = "Euler characteristic of the link at infinity of {f flavor alpha}"

    def add_arguments(self, parser):
        parser.add_argument("poly", type=str)
        parser.add_argument("--alpha", type=parse_rational, required=True)
        parser.add_argument("--flavor", choices=FLAVORS, required=True)

    def handle(self, options):
        f: Poly = parse_polynomial(options.poly)
        self.write({"link_chi": link_chi(f, options.alpha, options.flavor)})
        return EXIT_OK


class BranchesCommand(Command):
    name = "branches"
    help = "Half-branches of {f = 0} at infinity"

    def add_arguments(self, parser):
        parser.add_argument("poly", type=str)

    def handle(self, options):
        count: int = half_branches(parse_polynomial(options.poly))
        self.write({"half_branches": count, "r_infinity": count // 2})
        return EXIT_OK


class VerifyCommand(Command):
    name = "verify"
    help = "Verify one identity on one input"

    def add_arguments(self, parser):
        parser.add_argument("--identity", choices=list(IDENTITIES), required=True)
        parser.add_argument("poly", type=str, nargs="?")
        add_set_arguments(parser)
        parser.add_argument("--alpha", type=str, default=None)
        parser.add_argument("--seed", type=str, default=None)
        parser.add_argument("--f", type=str, default=None, help="the function on a plane set")
        parser.add_argument("--v", type=str, default=None, help="a direction a/b,c/d or s")

    def handle(self, options):
        item: CorpusInput = input_from(options)
        report = verify(options.identity, item)
        self.write(report.to_dict())
        if report.degenerate:
            return EXIT_DEGENERATE
        return EXIT_OK if report.passed or report.skipped_reason else EXIT_FAILED


def input_from(options: argparse.Namespace) -> CorpusInput:
    """The corpus line described by the options, parsed like a corpus file line."""
    if options.region is not None:
        line: str = f"{REGION}: {options.region}"
    elif options.curve is not None:
        line = f"{CURVE}: {options.curve}"
    elif options.poly is not None:
        line = f"{POLY}: {options.poly}"
    else:
        raise DegenerateInputError("Give a polynomial, --region or --curve.")
    suffixes: Dict[str, Optional[str]] = {
        "alpha": options.alpha,
        "seed": options.seed,
        "f": options.f,
        "v": options.v,
    }
    line += "".join(f" {key}={value}" for key, value in suffixes.items() if value is not None)
    item: Optional[CorpusInput] = parse_line(line)
    assert item is not None

    return item


class CorpusCommand(Command):
    name = "corpus"
    help = "Verify every applicable identity on every input of a corpus"

    def add_arguments(self, parser):
        parser.add_argument("file", type=Path, nargs="?", help="the built-in corpus if omitted")

    def handle(self, options):
        inputs: List[CorpusInput] = (
            builtin_corpus() if options.file is None else parse_corpus(options.file.read_text())
        )
        reports, summary = run_corpus(inputs)
        self.write(
            {"reports": [r.to_dict() for r in reports], "summary": summary.to_dict()},
        )
        return summary.exit_code


class RandomCommand(Command):
    name = "random"
    help = "Seeded random polynomials with finitely many critical points, as corpus lines"

    def add_arguments(self, parser):
        parser.add_argument("--count", type=int, default=20)
        parser.add_argument("--seed", type=int, default=None)

    def handle(self, options):
        self.stdout.write(random_corpus(options.count, options.seed))
        return EXIT_OK


class GaussBonnetCommand(Command):
    name = "gauss-bonnet"
    help = "Average over directions of the index sum of a linear function on a set"

    def add_arguments(self, parser):
        add_set_arguments(parser, required=True)
        parser.add_argument("--mode", choices=MODES, default=EXACT)
        parser.add_argument("--n", type=int, default=None, help="directions in sampled mode")
        parser.add_argument("--tol", type=parse_rational, default=None, help="angle width")

    def handle(self, options):
        x_set: Optional[PlaneSet] = set_from(options)
        assert x_set is not None
        result = gauss_bonnet(x_set, options.mode, options.n, options.tol)
        self.write(
            {
                "set": str(x_set),
                "value": result.value,
                "bound": result.bound,
                "mode": result.mode,
                "chi": x_set.chi(),
            }
        )
        return EXIT_OK


class PlotCommand(Command):
    name = "plot"
    help = "Draw level curves, critical points and asymptotic values as SVG"

    def add_arguments(self, parser):
        parser.add_argument("poly", type=str, nargs="?")
        add_set_arguments(parser)
        parser.add_argument("-o", "--output", type=Path, required=True)
        parser.add_argument("--seed", type=int, default=None)

    def handle(self, options):
        x_set: Optional[PlaneSet] = set_from(options)
        if x_set is not None:
            svg: str = plot_set(x_set, DEFAULT_DIRECTION.linear())
        elif options.poly is not None:
            svg = plot_polynomial(parse_polynomial(options.poly), options.seed)
        else:
            raise DegenerateInputError("Give a polynomial or --region.")
        options.output.write_text(svg)
        self.write({"output": str(options.output)})
        return EXIT_OK


COMMANDS: List[Command] = [
    CriticalCommand(),
    DegreeAtInfinityCommand(),
    LambdaCommand(),
    ChiCommand(),
    LinkCommand(),
    BranchesCommand(),
    VerifyCommand(),
    CorpusCommand(),
    RandomCommand(),
    GaussBonnetCommand(),
    PlotCommand(),
]


def build_parser(commands: List[Command]) -> argparse.ArgumentParser:
    parser: argparse.ArgumentParser = argparse.ArgumentParser(prog="satopo")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in commands:
        subparser = subparsers.add_parser(command.name, help=command.help)
        command.add_arguments(subparser)
        subparser.set_defaults(handler=command)
    return parser


def main(argv: Optional[List[str]] = None, commands: Optional[List[Command]] = None) -> int:
    configure_logging()
    options: argparse.Namespace = build_parser(commands or COMMANDS).parse_args(argv)
    try:
        return options.handler.handle(options)
    except DegenerateInputError as exc:
        logger.warning(f"Degenerate input: {exc}")
        sys.stderr.write(f"satopo: {exc}\n")
        return EXIT_DEGENERATE
    except SatopoError as exc:
        logger.error(f"{options.command} failed: {exc}")
        sys.stderr.write(f"satopo: {exc}\n")
        return EXIT_FAILED
