"""Command layer initialization."""

import json
import logging
from typing import Any, Iterable, Union

from pydantic import BaseModel

from ..models import AuditReport, CommandConfig, Verdict

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 10
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_VERDICT_EXIT = {
    Verdict.PASS: EXIT_OK,
    Verdict.SKIPPED: EXIT_OK,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    Verdict.HYPOTHESIS_VIOLATION: EXIT_USAGE,
    Verdict.FAIL: EXIT_FAIL,
}
_VERDICT_RANK = [Verdict.PASS, Verdict.SKIPPED, Verdict.INCONCLUSIVE, Verdict.HYPOTHESIS_VIOLATION, Verdict.FAIL]


def _plain(payload: Any) -> Any:
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json")
    if isinstance(payload, dict):
        return {str(k): _plain(v) for k, v in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [_plain(v) for v in payload]
    if isinstance(payload, (set, frozenset)):
        return sorted(_plain(v) for v in payload)
    return payload


def emit(config: CommandConfig, text: Union[str, Iterable[str]], payload: Any) -> None:
    """Print the text report, or the payload as one JSON document under --json."""
    if config.json_output:
        print(json.dumps(_plain(payload), sort_keys=True))
        return
    if isinstance(text, str):
        print(text, end="" if text.endswith("\n") else "\n")
    else:
        for line in text:
            print(line)


def reports_exit(reports: Iterable[AuditReport]) -> int:
    """Exit code of the worst verdict."""
    worst = max((r.verdict for r in reports), key=_VERDICT_RANK.index, default=Verdict.PASS)
    return _VERDICT_EXIT[worst]


def register_all(subparsers) -> None:
    from . import alg, audit, csp, gen, subpower

    for module in (alg, audit, gen, subpower, csp):
        module.register(subparsers)


__all__ = [
    "EXIT_OK",
    "EXIT_FAIL",
    "EXIT_USAGE",
    "EXIT_INCONCLUSIVE",
    "emit",
    "reports_exit",
    "register_all"
]
