import logging
from typing import Any, Dict, List, Optional, Tuple

from satopo.celery import app
from satopo.harness.identities import applicable
from satopo.harness.inputs import CorpusInput, parse_line
from satopo.harness.reports import IdentityReport, LedgerSummary, summarize
from satopo.harness.verify import verify

logger = logging.getLogger(__name__)


@app.task
def verify_task(identity: str, line: str) -> Dict[str, Any]:
    item: Optional[CorpusInput] = parse_line(line)
    if item is None:
        raise Exception(f"Nothing to verify in {line!r}.")

    return verify(identity, item).to_dict()


def run_corpus(inputs: List[CorpusInput]) -> Tuple[List[IdentityReport], LedgerSummary]:
    """Verifies every applicable identity on every input; reports keep submission order."""
    pending = [
        verify_task.delay(identity.name, str(item))
        for item in inputs
        for identity in applicable(item.kind)
    ]
    logger.info(f"Dispatched {len(pending)} verifications for {len(inputs)} inputs")
    reports: List[IdentityReport] = [IdentityReport.from_dict(result.get()) for result in pending]
    summary: LedgerSummary = summarize(reports)
    logger.info(
        f"Ledger: {summary.passed} passed, {summary.failed} failed, {summary.skipped} skipped"
    )

    return reports, summary
