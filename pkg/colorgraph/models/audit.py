"""
Pydantic models for audit reports.
"""

from enum import Enum
from typing import Any, Iterable, Optional

from pydantic import BaseModel, Field


class Verdict(str, Enum):
    """Audit outcome. Ordered from best to worst for aggregation."""

    PASS = "pass"
    SKIPPED = "skipped"
    INCONCLUSIVE = "inconclusive"
    HYPOTHESIS_VIOLATION = "hypothesis-violation"
    FAIL = "fail"


_SEVERITY = {
    Verdict.PASS: 0,
    Verdict.SKIPPED: 0,
    Verdict.INCONCLUSIVE: 1,
    Verdict.HYPOTHESIS_VIOLATION: 2,
    Verdict.FAIL: 3,
}


class AuditWitness(BaseModel):
    """A counterexample or confirmation with enough data to replay it."""

    kind: str = Field(..., description="counterexample, confirmation or inconclusive")
    description: str = Field(..., description="Human-readable summary")
    data: dict[str, Any] = Field(default_factory=dict, description="Inputs, expected and observed values")


class AuditReport(BaseModel):
    """Verdict of one audited statement over a corpus."""

    theorem: str = Field(..., description="Audit id")
    verdict: Verdict = Field(default=Verdict.PASS, description="Aggregated verdict")
    cases: int = Field(default=0, ge=0, description="Number of checked cases")
    seed: Optional[int] = Field(default=None, description="Seed of the sampled corpus")
    witnesses: list[AuditWitness] = Field(default_factory=list, description="Counterexamples and confirmations")
    reason: Optional[str] = Field(default=None, description="Why the audit was skipped")

    class Config:
        """Pydantic model configuration."""
        json_schema_extra = {
            "example": {
                "theorem": "connectivity",
                "verdict": "pass",
                "cases": 12,
                "seed": 7,
                "witnesses": [],
                "reason": None
            }
        }

    def line(self) -> str:
        """Machine-readable verdict line."""
        return f"{self.theorem} {self.verdict.value} {self.cases}"

    def check(self, ok: bool, description: str, **data: Any) -> bool:
        """Record one case; a failed case turns the verdict to fail and keeps its witness."""
        self.cases += 1
        if not ok:
            self.verdict = Verdict.FAIL
            self.witnesses.append(AuditWitness(kind="counterexample", description=description, data=data))
        return ok

    def confirm(self, description: str, **data: Any) -> None:
        self.witnesses.append(AuditWitness(kind="confirmation", description=description, data=data))

    def mark_inconclusive(self, description: str, **data: Any) -> None:
        self.cases += 1
        if self.verdict is not Verdict.FAIL:
            self.verdict = Verdict.INCONCLUSIVE
        self.witnesses.append(AuditWitness(kind="inconclusive", description=description, data=data))

    def absorb(self, other: "AuditReport") -> None:
        """Merge a sub-report into this one."""
        self.cases += other.cases
        self.witnesses.extend(other.witnesses)
        if other.verdict is Verdict.SKIPPED:
            return
        if _SEVERITY[other.verdict] > _SEVERITY[self.verdict]:
            self.verdict = other.verdict

    @classmethod
    def merged(cls, theorem: str, reports: Iterable["AuditReport"], seed: Optional[int] = None) -> "AuditReport":
        merged = cls(theorem=theorem, seed=seed)
        ran = False
        for report in reports:
            if report.verdict is not Verdict.SKIPPED:
                ran = True
            merged.absorb(report)
        if not ran:
            merged.verdict = Verdict.SKIPPED
            merged.reason = "no corpus member satisfied the hypotheses"
        return merged


class AlmostTrivialDecomposition(BaseModel):
    """Coordinate classes of an almost trivial relation and the bijections inside each class."""

    classes: tuple[tuple[int, ...], ...] = Field(..., description="Classes of coordinates, each led by its least member")
    bijections: tuple[tuple[int, int, tuple[int, ...]], ...] = Field(
        default=(),
        description="(leader, j, map) with map[x] the value at j of tuples whose leader value is x"
    )
