import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from satopo.core.rat import rat_str

logger = logging.getLogger(__name__)

PASSED: str = "pass"
FAILED: str = "fail"
SKIPPED: str = "skipped"

EXIT_OK: int = 0
EXIT_FAILED: int = 1
EXIT_DEGENERATE: int = 2


def serialize(value: Any) -> Any:
    """JSON-ready copy of a witness: rationals as p/q, anything else exotic as text."""
    if isinstance(value, Fraction):
        return rat_str(value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(key): serialize(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [serialize(item) for item in value]
    return str(value)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    input: str
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    passed: bool = False
    witnesses: Dict[str, Any] = field(default_factory=dict)
    skipped_reason: Optional[str] = None
    bound: Fraction = Fraction(0)
    degenerate: bool = False

    @property
    def status(self) -> str:
        if self.skipped_reason is not None:
            return SKIPPED
        return PASSED if self.passed else FAILED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "input": self.input,
            "lhs": None if self.lhs is None else rat_str(self.lhs),
            "rhs": None if self.rhs is None else rat_str(self.rhs),
            "pass": self.passed,
            "witnesses": serialize(self.witnesses),
            "skipped_reason": self.skipped_reason,
            "bound": rat_str(self.bound),
            "degenerate": self.degenerate,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "IdentityReport":
        """Rebuilds a report returned by a worker; witnesses stay serialized."""
        return cls(
            identity=data["identity"],
            input=data["input"],
            lhs=None if data["lhs"] is None else Fraction(data["lhs"]),
            rhs=None if data["rhs"] is None else Fraction(data["rhs"]),
            passed=data["pass"],
            witnesses=data["witnesses"],
            skipped_reason=data["skipped_reason"],
            bound=Fraction(data.get("bound", "0")),
            degenerate=data.get("degenerate", False),
        )


@dataclass(frozen=True)
class LedgerSummary:
    passed: int
    failed: int
    skipped: int
    degenerate: int

    @property
    def exit_code(self) -> int:
        if self.failed:
            return EXIT_FAILED
        if self.degenerate:
            return EXIT_DEGENERATE
        return EXIT_OK

    def to_dict(self) -> Dict[str, int]:
        return {
            "pass": self.passed,
            "fail": self.failed,
            "skipped": self.skipped,
            "degenerate": self.degenerate,
            "exit_code": self.exit_code,
        }


def summarize(reports: List[IdentityReport]) -> LedgerSummary:
    summary: LedgerSummary = LedgerSummary(
        passed=sum(1 for r in reports if r.status == PASSED),
        failed=sum(1 for r in reports if r.status == FAILED),
        skipped=sum(1 for r in reports if r.status == SKIPPED),
        degenerate=sum(1 for r in reports if r.degenerate),
    )
    if summary.failed:
        for report in reports:
            if report.status == FAILED:
                logger.warning(
                    f"{report.identity} fails on {report.input}: {report.lhs} != {report.rhs}"
                )

    return summary
