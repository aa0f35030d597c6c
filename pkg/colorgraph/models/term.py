"""
Term witnesses and three-valued search results.
"""

from enum import Enum
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from .algebra import FiniteAlgebra, ModuleStructure


class SearchStatus(str, Enum):
    """Outcome of a capped search."""

    FOUND = "found"
    ABSENT = "absent"
    INCONCLUSIVE = "inconclusive"


class Term(BaseModel):
    """A derivation tree: either a variable x_i or an operation symbol applied to subterms."""

    model_config = ConfigDict(frozen=True)

    symbol: str = Field(..., description="Operation symbol, or x<i> for a variable")
    variable: Optional[int] = Field(default=None, ge=0, description="Variable index for leaves")
    args: tuple["Term", ...] = Field(default=(), description="Subterms")

    @classmethod
    def var(cls, i: int) -> "Term":
        return cls(symbol=f"x{i}", variable=i)

    @classmethod
    def apply(cls, symbol: str, args: Sequence["Term"]) -> "Term":
        return cls(symbol=symbol, args=tuple(args))

    @property
    def is_variable(self) -> bool:
        return self.variable is not None

    def render(self) -> str:
        if self.is_variable:
            return self.symbol
        return f"{self.symbol}({','.join(a.render() for a in self.args)})"

    def depth(self) -> int:
        return 0 if self.is_variable else 1 + max((a.depth() for a in self.args), default=0)

    def evaluate(self, alg: FiniteAlgebra, values: Sequence[int]) -> int:
        """Evaluate on concrete arguments in alg."""
        if self.is_variable:
            return values[self.variable]
        return alg.op(self.symbol)(*(a.evaluate(alg, values) for a in self.args))

    def __str__(self) -> str:
        return self.render()


Term.model_rebuild()


class TermResult(BaseModel):
    """Answer of a term-existence query."""

    model_config = ConfigDict(frozen=True)

    status: SearchStatus = Field(..., description="found, absent or inconclusive")
    arity: int = Field(..., ge=0, description="Arity of the searched term")
    witness: Optional[Term] = Field(default=None, description="Derivation of the target on success")
    closure_size: int = Field(default=0, ge=0, description="Elements generated before stopping")
    cap: Optional[str] = Field(default=None, description="Which cap was hit, if any")

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    @property
    def inconclusive(self) -> bool:
        return self.status is SearchStatus.INCONCLUSIVE


class AffinityViolation(BaseModel):
    """A triple of argument tuples where f(x - y + z) != f(x) - f(y) + f(z) for a candidate group."""

    op: str
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]
    add_table: tuple[int, ...]


class ModuleSearchResult(BaseModel):
    """Outcome of the search for an affine module structure."""

    model_config = ConfigDict(frozen=True)

    status: SearchStatus = Field(..., description="found, absent or inconclusive")
    structure: Optional[ModuleStructure] = Field(default=None, description="Certified group")
    witness: Optional[Term] = Field(default=None, description="Term realising x - y + z")
    rejected: tuple[AffinityViolation, ...] = Field(default=(), description="Violations of rejected groups")
    candidates: int = Field(default=0, ge=0, description="Distinct group structures tried")
    cap: Optional[str] = Field(default=None)

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND
