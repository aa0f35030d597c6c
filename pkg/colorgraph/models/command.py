"""
Pydantic model for a single CLI invocation.
"""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from ..config import settings


class CommandConfig(BaseModel):
    """Validated options shared by every subcommand."""

    subcommand: str = Field(..., description="Subcommand path, e.g. 'csp solve'")
    inputs: list[str] = Field(default_factory=list, description="Input file paths or catalog names")
    seed: Optional[int] = Field(default=None, ge=0, lt=2 ** 64, description="64-bit seed")
    sampling: bool = Field(default=False, description="The subcommand draws random samples")
    closure_cap: int = Field(default_factory=lambda: settings.closure_cap, gt=0)
    work_cap: int = Field(default_factory=lambda: settings.closure_work_cap, gt=0)
    arity_cap: int = Field(default_factory=lambda: settings.term_arity_cap, gt=0)
    json_output: bool = Field(default=False, description="Mirror the report as JSON")
    verbose: bool = Field(default=False)

    @model_validator(mode="after")
    def seed_for_sampling(self) -> "CommandConfig":
        if self.sampling and self.seed is None:
            raise ValueError(f"{self.subcommand} samples randomly and requires --seed")
        return self
