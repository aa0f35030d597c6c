"""
Exception hierarchy. Each error carries the process exit code the CLI maps it to.
"""

from typing import Any, Optional


class ColorgraphError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1
    kind = "error"


class InputError(ColorgraphError, ValueError):
    """Malformed input, out-of-range element or violated precondition."""

    exit_code = 2
    kind = "input-error"


class HypothesisViolation(ColorgraphError):
    """A named hypothesis of an audit or solver does not hold for the input."""

    exit_code = 2
    kind = "hypothesis-violation"

    def __init__(self, hypothesis: str, detail: str = "", witness: Optional[Any] = None):
        self.hypothesis = hypothesis
        self.witness = witness
        message = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(message)


class InvariantViolation(ColorgraphError):
    """A value breaks a structural invariant (e.g. an incompatible partition)."""

    exit_code = 2
    kind = "invariant-violation"


class NoConformingOperation(ColorgraphError):
    """The majority or minority condition set is empty."""

    exit_code = 10
    kind = "no-conforming-operation"


class InconclusiveError(ColorgraphError):
    """A closure hit its cap where the caller cannot carry a three-valued answer."""

    exit_code = 3
    kind = "inconclusive"

    def __init__(self, message: str, cap: Optional[str] = None):
        self.cap = cap
        super().__init__(message)


class SolverBug(ColorgraphError):
    """An internal guarantee failed; the witness replays the failure."""

    exit_code = 10
    kind = "solver-bug"

    def __init__(self, message: str, witness: Optional[dict] = None):
        self.witness = witness or {}
        super().__init__(message)
