"""
Pydantic models for edge witnesses, coloured graphs and component data.
"""

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .algebra import Congruence, FiniteAlgebra, ModuleStructure
from .term import Term


class EdgeType(str, Enum):
    """Type of a thick edge; the value is the one-letter tag used in graphs."""

    SEMILATTICE = "s"
    MAJORITY = "m"
    AFFINE = "a"
    UNARY = "u"

    @property
    def label(self) -> str:
        return {"s": "semilattice", "m": "majority", "a": "affine", "u": "unary"}[self.value]


Selector = Literal["s", "as", "asm"]

SELECTOR_TAGS: dict[str, frozenset[str]] = {
    "s": frozenset({"s"}),
    "as": frozenset({"s", "a"}),
    "asm": frozenset({"s", "a", "m"}),
}


class EdgeWitness(BaseModel):
    """One witnessing congruence of Sg{a,b} and the edge type it yields."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "pair": [0, 1],
                "subuniverse": [0, 1],
                "theta_blocks": [[0], [1]],
                "type": "s",
                "witness": {"symbol": "f", "args": [{"symbol": "x0", "variable": 0}, {"symbol": "x1", "variable": 1}]},
                "inconclusive": False
            }
        },
    )

    pair: tuple[int, int] = Field(..., description="The pair (a,b)")
    subuniverse: tuple[int, ...] = Field(..., description="Sg{a,b} in the ambient algebra")
    theta_blocks: tuple[tuple[int, ...], ...] = Field(
        ...,
        description="Blocks of the maximal congruence of Sg{a,b}, in ambient elements"
    )
    type: Optional[EdgeType] = Field(default=None, description="Edge type, None if none or inconclusive")
    witness: Optional[Term] = Field(default=None, description="Term witnessing a semilattice or majority type")
    module: Optional[ModuleStructure] = Field(default=None, description="Module structure of an affine quotient")
    inconclusive: bool = Field(default=False, description="A closure under this congruence hit its cap")
    cap: Optional[str] = Field(default=None, description="Cap that was hit")

    @property
    def theta_is_equality(self) -> bool:
        return all(len(b) == 1 for b in self.theta_blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        for block in self.theta_blocks:
            if x in block:
                return block
        raise KeyError(x)

    def describe(self) -> str:
        a, b = self.pair
        pair = f"{a}{b}" if max(a, b) < 10 else f"{a},{b}"
        theta = "eq" if self.theta_is_equality else "|".join(",".join(map(str, blk)) for blk in self.theta_blocks)
        kind = "inconclusive" if self.inconclusive else (self.type.label if self.type else "none")
        return f"{pair}: {kind} (θ={theta})"


class ArcSet(BaseModel):
    """Thin arcs of one kind, with an explicit flag when a capped enumeration poisoned them."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["s", "m", "a"] = Field(..., description="Thin edge type")
    arcs: frozenset[tuple[int, int]] = Field(default=frozenset(), description="Directed arcs a->b")
    witnesses: dict[tuple[int, int], Term] = Field(
        default_factory=dict,
        description="Binary term per semilattice arc"
    )
    inconclusive: bool = Field(default=False, description="Condition-operation enumeration hit a cap")
    cap: Optional[str] = Field(default=None, description="Cap that was hit")

    def __hash__(self) -> int:
        return hash((self.kind, self.arcs, self.inconclusive))


class ThinArc(BaseModel):
    """A directed thin edge with its type tags."""

    model_config = ConfigDict(frozen=True)

    source: int
    target: int
    tags: frozenset[str]


class TypedGraph(BaseModel):
    """The coloured graph of an algebra: thick edges plus thin arcs."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Algebra name")
    size: int = Field(..., ge=1, description="Number of vertices")
    thick: tuple[EdgeWitness, ...] = Field(default=(), description="All witnesses, ordered by pair")
    thin: tuple[ThinArc, ...] = Field(default=(), description="Thin arcs, ordered by (source, target)")
    inconclusive_tags: frozenset[str] = Field(default=frozenset(), description="Thin kinds poisoned by caps")

    def thick_edges(self) -> dict[tuple[int, int], tuple[EdgeWitness, ...]]:
        edges: dict[tuple[int, int], list[EdgeWitness]] = {}
        for w in self.thick:
            edges.setdefault(w.pair, []).append(w)
        return {pair: tuple(ws) for pair, ws in edges.items()}

    def thin_arcs(self) -> dict[tuple[int, int], frozenset[str]]:
        return {(arc.source, arc.target): arc.tags for arc in self.thin}

    def types(self) -> frozenset[EdgeType]:
        return frozenset(w.type for w in self.thick if w.type is not None)


class ComponentView(BaseModel):
    """Strongly connected components of thin-arc graphs and the derived maximal sets."""

    model_config = ConfigDict(frozen=True)

    selector: Selector = Field(..., description="Graph whose SCCs are listed in components")
    components: tuple[tuple[int, ...], ...] = Field(..., description="SCCs of the selected graph, sorted by least element")
    scc_of: tuple[int, ...] = Field(..., description="Component id of each element in the selected graph")
    scc_of_s: tuple[int, ...] = Field(..., description="s-component id of each element")
    scc_of_as: Optional[tuple[int, ...]] = Field(default=None, description="as-component id, None if inconclusive")
    max_set: frozenset[int] = Field(..., description="Union of maximal s-components")
    amax_set: Optional[frozenset[int]] = Field(default=None, description="Union of maximal as-components")
    maximal_components: tuple[tuple[int, ...], ...] = Field(
        default=(),
        description="Maximal SCCs of the selected graph"
    )
    inconclusive: bool = Field(default=False, description="Affine or majority arcs were poisoned by a cap")


class EdgeProfile(BaseModel):
    """Edge types and smoothness of an algebra."""

    model_config = ConfigDict(frozen=True)

    types: frozenset[EdgeType] = Field(default=frozenset(), description="Types of all thick edges")
    smooth: bool = Field(..., description="a/θ ∪ b/θ is a subuniverse for every s or m witness")
    offending: Optional[EdgeWitness] = Field(default=None, description="A witness breaking smoothness")
    inconclusive: bool = Field(default=False, description="Some pair could not be classified under the caps")

    def has(self, t: EdgeType) -> bool:
        return t in self.types


class ClassMember(BaseModel):
    """A member B/θ of the subalgebra/quotient class of a base algebra."""

    model_config = ConfigDict(frozen=True)

    base: FiniteAlgebra = Field(..., description="Algebra generating the class")
    subuniverse: tuple[int, ...] = Field(..., description="Subuniverse B of the base")
    theta: Congruence = Field(..., description="Congruence of the subalgebra on B, in its own labels")
    algebra: FiniteAlgebra = Field(..., description="The member algebra B/θ")
    lift: tuple[int, ...] = Field(..., description="A base element representing each member element")

    @property
    def is_base(self) -> bool:
        return len(self.subuniverse) == self.base.size and self.theta.is_equality()

    def project(self, x: int) -> int:
        """Member element of a base element of B."""
        return self.theta.index_map[self.subuniverse.index(x)]
