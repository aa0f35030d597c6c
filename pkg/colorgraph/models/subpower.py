"""
Pydantic models for signatures and representations of subpowers.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .algebra import Relation


class Signature(BaseModel):
    """Triples (i, a, b): coordinate i, values a, b of tuples agreeing before i, with (a,b) thin affine or a = b."""

    model_config = ConfigDict(frozen=True)

    entries: frozenset[tuple[int, int, int]] = Field(default=frozenset(), description="Signature triples")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, entry: tuple[int, int, int]) -> bool:
        return tuple(entry) in self.entries

    def sorted_entries(self) -> list[tuple[int, int, int]]:
        return sorted(self.entries)


class Representation(BaseModel):
    """A subset of a relation satisfying the witnessing properties."""

    model_config = ConfigDict(frozen=True)

    base: Relation = Field(..., description="Represented relation")
    subset: frozenset[tuple[int, ...]] = Field(..., description="Chosen tuples")
    bound: int = Field(..., ge=0, description="Size bound 2|Sig| + C(n,3) max|Ai||Aj||Ak|")

    @model_validator(mode="after")
    def check_subset(self) -> "Representation":
        if not self.subset <= self.base.tuples:
            raise ValueError("representation must be a subset of its base relation")
        return self

    def __len__(self) -> int:
        return len(self.subset)


class RepresentationCheck(BaseModel):
    """Result of checking the two representation clauses."""

    ok: bool = Field(..., description="Both clauses hold")
    clause: Optional[int] = Field(default=None, description="Violated clause (1 or 2)")
    detail: Optional[str] = Field(default=None, description="Uncovered signature triple or projection value")

    def __bool__(self) -> bool:
        return self.ok
