"""
Pydantic models for CSP instances, strategies and assignments.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .algebra import FiniteAlgebra, Relation


class Constraint(BaseModel):
    """A constraint <scope, relation>."""

    model_config = ConfigDict(frozen=True)

    scope: tuple[str, ...] = Field(..., description="Distinct variables")
    relation: Relation = Field(..., description="Allowed value tuples")

    @model_validator(mode="after")
    def check_scope(self) -> "Constraint":
        if len(set(self.scope)) != len(self.scope):
            raise ValueError(f"repeated variable in scope {self.scope}")
        if len(self.scope) != self.relation.arity:
            raise ValueError(f"scope {self.scope} does not match arity {self.relation.arity}")
        return self


class CspInstance(BaseModel):
    """A multi-sorted CSP instance (V, domains, C)."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "name": "path",
                "variables": ["u", "v", "w"],
                "domains": {"u": "MAJ2", "v": "MAJ2", "w": "MAJ2"},
                "constraints": [{"scope": ["u", "v"], "relation": "NEQ"}],
                "algebraic": True
            }
        },
    )

    name: str = Field(default="P", description="Instance name")
    variables: tuple[str, ...] = Field(..., description="Ordered variables")
    domains: dict[str, FiniteAlgebra] = Field(..., description="Domain algebra of each variable")
    constraints: tuple[Constraint, ...] = Field(default=(), description="Constraints")
    algebraic: bool = Field(default=False, description="All constraint relations are invariant")

    @model_validator(mode="after")
    def check_instance(self) -> "CspInstance":
        """Domains cover exactly the variables and constraint components match domains."""
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable")
        if set(self.domains) != set(self.variables):
            raise ValueError("domains must be given for exactly the variables")
        for c in self.constraints:
            for v, comp in zip(c.scope, c.relation.components):
                if v not in self.domains:
                    raise ValueError(f"unknown variable {v} in constraint")
                dom = self.domains[v]
                if comp is not dom and comp != dom:
                    raise ValueError(f"relation {c.relation.name} component does not match the domain of {v}")
        return self

    def position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    def ordered(self, variables) -> tuple[str, ...]:
        """Sort a variable collection by instance order."""
        pos = self.position()
        return tuple(sorted(variables, key=pos.__getitem__))


class Strategy(BaseModel):
    """The family {S_W : |W| <= l} of a (k,l)-minimality run, keyed by instance-ordered variable tuples."""

    k: int = Field(..., ge=1)
    l: int = Field(..., ge=1)
    variables: tuple[str, ...] = Field(default=(), description="Instance variable order used for the keys")
    sets: dict[tuple[str, ...], frozenset[tuple[int, ...]]] = Field(default_factory=dict)

    def get(self, w: tuple[str, ...]) -> frozenset[tuple[int, ...]]:
        return self.sets[w]

    def key(self, w) -> tuple[str, ...]:
        """Key of a variable collection: its variables in instance order."""
        pos = {v: i for i, v in enumerate(self.variables)}
        return tuple(sorted(w, key=pos.__getitem__))

    def project(self, scope: tuple[str, ...], values: tuple[int, ...], w) -> tuple[tuple[str, ...], tuple[int, ...]]:
        """Key and restricted values of an assignment over scope to the subset w."""
        key = self.key(w)
        where = {v: i for i, v in enumerate(scope)}
        return key, tuple(values[where[v]] for v in key)

    def domain(self, v: str) -> frozenset[int]:
        return frozenset(t[0] for t in self.sets[(v,)])


class Assignment(BaseModel):
    """A mapping from variables to elements."""

    values: dict[str, int] = Field(default_factory=dict)

    def __getitem__(self, v: str) -> int:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)


class MinimalityOutcome(BaseModel):
    """Result of establishing (k,l)-minimality."""

    empty: bool = Field(..., description="Some S_W became empty")
    instance: CspInstance = Field(..., description="Pruned instance")
    strategy: Optional[Strategy] = Field(default=None, description="Strategy when not empty")
    emptied: Optional[tuple[str, ...]] = Field(default=None, description="A set W whose S_W emptied")
