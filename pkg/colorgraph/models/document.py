"""
Pydantic model for a parsed input file.
"""

from pydantic import BaseModel, Field

from .algebra import FiniteAlgebra, Relation
from .csp import CspInstance


class Document(BaseModel):
    """The algebra, relation and instance blocks of one file, keyed by name in file order."""

    source: str = Field(default="<text>", description="File path or label used in error messages")
    algebras: dict[str, FiniteAlgebra] = Field(default_factory=dict)
    relations: dict[str, Relation] = Field(default_factory=dict)
    instances: dict[str, CspInstance] = Field(default_factory=dict)
    subset_of: dict[str, str] = Field(
        default_factory=dict,
        description="Relation name -> name of the relation it represents"
    )
