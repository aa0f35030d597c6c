"""
Pydantic models for finite algebras, congruences, relations and module structures.

Universes are 0..n-1. All models are frozen and hashable so they can be used as
memo keys and shared between threads.
"""

from functools import cached_property
from itertools import product as cartesian
from typing import Hashable, Iterable, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator


def mixed_radix(values: Sequence[int], size: int) -> int:
    """Index of an argument tuple in lexicographic order (first argument most significant)."""
    index = 0
    for v in values:
        index = index * size + v
    return index


class OperationTable(BaseModel):
    """A basic operation given by its full table in lexicographic argument order."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"name": "f", "arity": 2, "size": 2, "table": [0, 0, 0, 1]}
        },
    )

    name: str = Field(
        ...,
        pattern=r"^[A-Za-z_][A-Za-z0-9_]*$",
        description="Operation symbol"
    )
    arity: int = Field(
        ...,
        ge=1,
        description="Number of arguments"
    )
    size: int = Field(
        ...,
        ge=1,
        description="Universe size the table ranges over"
    )
    table: tuple[int, ...] = Field(
        ...,
        description="Values f(x) for all argument tuples x in lexicographic order"
    )

    @model_validator(mode="after")
    def check_table(self) -> "OperationTable":
        """Validate table length, value range and idempotency."""
        n, k = self.size, self.arity
        if len(self.table) != n ** k:
            raise ValueError(f"operation {self.name}: expected {n ** k} entries, got {len(self.table)}")
        for v in self.table:
            if not 0 <= v < n:
                raise ValueError(f"operation {self.name}: value {v} out of range 0..{n - 1}")
        for x in range(n):
            if self.table[mixed_radix((x,) * k, n)] != x:
                raise ValueError(
                    f"operation {self.name} is not idempotent at {x}; "
                    "pass to the idempotent reduct before loading"
                )
        return self

    def __call__(self, *args: int) -> int:
        return self.table[mixed_radix(args, self.size)]

    @classmethod
    def from_function(cls, name: str, arity: int, size: int, fn) -> "OperationTable":
        """Tabulate a Python callable over all argument tuples."""
        table = tuple(fn(*args) for args in cartesian(range(size), repeat=arity))
        return cls(name=name, arity=arity, size=size, table=table)


class FiniteAlgebra(BaseModel):
    """A finite idempotent algebra: universe 0..n-1 with basic operation tables."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(
        ...,
        min_length=1,
        description="Algebra name"
    )
    size: int = Field(
        ...,
        ge=1,
        description="Universe size n"
    )
    ops: tuple[OperationTable, ...] = Field(
        default=(),
        description="Basic operations"
    )

    @model_validator(mode="after")
    def check_ops(self) -> "FiniteAlgebra":
        """All operations share the universe and have distinct names."""
        seen = set()
        for op in self.ops:
            if op.size != self.size:
                raise ValueError(f"operation {op.name} ranges over {op.size} elements, algebra has {self.size}")
            if op.name in seen:
                raise ValueError(f"duplicate operation name {op.name}")
            seen.add(op.name)
        return self

    @property
    def signature(self) -> tuple[tuple[str, int], ...]:
        return tuple((op.name, op.arity) for op in self.ops)

    @property
    def universe(self) -> range:
        return range(self.size)

    def op(self, name: str) -> OperationTable:
        for op in self.ops:
            if op.name == name:
                return op
        raise KeyError(name)

    def similar(self, other: "FiniteAlgebra") -> bool:
        return self.signature == other.signature

    def renamed(self, name: str) -> "FiniteAlgebra":
        return self.model_copy(update={"name": name})


class Congruence(BaseModel):
    """An equivalence on 0..n-1 given by canonical block labels (least element of the block)."""

    model_config = ConfigDict(frozen=True)

    size: int = Field(
        ...,
        ge=1,
        description="Universe size"
    )
    block_of: tuple[int, ...] = Field(
        ...,
        description="Least element of the block of each element"
    )

    @model_validator(mode="after")
    def check_labels(self) -> "Congruence":
        """Labels must be canonical."""
        if len(self.block_of) != self.size:
            raise ValueError("block_of must label every element")
        for x, b in enumerate(self.block_of):
            if not 0 <= b <= x or self.block_of[b] != b:
                raise ValueError(f"non-canonical block label {b} for element {x}")
        return self

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable]) -> "Congruence":
        """Canonicalise an arbitrary labelling."""
        first: dict[Hashable, int] = {}
        block_of = []
        for x, label in enumerate(labels):
            block_of.append(first.setdefault(label, x))
        return cls(size=len(labels), block_of=tuple(block_of))

    @classmethod
    def from_blocks(cls, size: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        labels = list(range(size))
        for block in blocks:
            block = sorted(block)
            for x in block:
                labels[x] = block[0]
        return cls.from_labels(labels)

    @classmethod
    def equality(cls, size: int) -> "Congruence":
        return cls(size=size, block_of=tuple(range(size)))

    @classmethod
    def full(cls, size: int) -> "Congruence":
        return cls(size=size, block_of=(0,) * size)

    @cached_property
    def index_map(self) -> tuple[int, ...]:
        """Element -> block index, blocks numbered by their least element."""
        order = {b: i for i, b in enumerate(sorted(set(self.block_of)))}
        return tuple(order[b] for b in self.block_of)

    @property
    def num_blocks(self) -> int:
        return len(set(self.block_of))

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for x, b in enumerate(self.block_of):
            groups.setdefault(b, []).append(x)
        return tuple(tuple(groups[b]) for b in sorted(groups))

    def block(self, x: int) -> tuple[int, ...]:
        b = self.block_of[x]
        return tuple(y for y in range(self.size) if self.block_of[y] == b)

    def related(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def is_equality(self) -> bool:
        return self.block_of == tuple(range(self.size))

    def is_full(self) -> bool:
        return all(b == 0 for b in self.block_of)

    def refines(self, other: "Congruence") -> bool:
        """True iff self is below other."""
        return all(other.related(x, b) for x, b in enumerate(self.block_of))


class ModuleStructure(BaseModel):
    """An abelian group on 0..n-1 certified affine for an algebra."""

    model_config = ConfigDict(frozen=True)

    size: int = Field(..., ge=1, description="Universe size")
    add_table: tuple[int, ...] = Field(..., description="Addition table, row-major")
    zero: int = Field(default=0, description="Neutral element")
    neg_table: tuple[int, ...] = Field(..., description="Additive inverse of each element")

    @model_validator(mode="after")
    def check_group(self) -> "ModuleStructure":
        """Verify the abelian group axioms."""
        n = self.size
        if len(self.add_table) != n * n or len(self.neg_table) != n:
            raise ValueError("group tables have the wrong shape")
        for a in range(n):
            if self.add(a, self.zero) != a or self.add(a, self.neg(a)) != self.zero:
                raise ValueError(f"group axioms fail at {a}")
            for b in range(n):
                if self.add(a, b) != self.add(b, a):
                    raise ValueError("addition is not commutative")
                for c in range(n):
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)):
                        raise ValueError("addition is not associative")
        return self

    def add(self, a: int, b: int) -> int:
        return self.add_table[a * self.size + b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def affine(self, x: int, y: int, z: int) -> int:
        """x - y + z."""
        return self.add(self.sub(x, y), z)


class Relation(BaseModel):
    """An explicit set of tuples over a list of component algebras."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(default="R", min_length=1, description="Relation name")
    arity: int = Field(..., ge=0, description="Tuple length m")
    components: tuple[FiniteAlgebra, ...] = Field(..., description="Component algebra of each coordinate")
    tuples: frozenset[tuple[int, ...]] = Field(..., description="Tuple set")
    invariant: bool = Field(
        default=False,
        description="Set by producers that guarantee closure under the basic operations"
    )

    @model_validator(mode="after")
    def check_tuples(self) -> "Relation":
        """Tuple lengths and values must match the components."""
        if len(self.components) != self.arity:
            raise ValueError(f"relation {self.name}: {self.arity} coordinates but {len(self.components)} components")
        sizes = [c.size for c in self.components]
        for t in self.tuples:
            if len(t) != self.arity:
                raise ValueError(f"relation {self.name}: tuple {t} has the wrong length")
            for v, n in zip(t, sizes):
                if not 0 <= v < n:
                    raise ValueError(f"relation {self.name}: value {v} out of range in {t}")
        return self

    @cached_property
    def sorted_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.tuples))

    def __len__(self) -> int:
        return len(self.tuples)

    def __contains__(self, t: tuple[int, ...]) -> bool:
        return tuple(t) in self.tuples

    def with_tuples(self, tuples: Iterable[tuple[int, ...]], name: Optional[str] = None,
                    invariant: bool = False) -> "Relation":
        return Relation(
            name=name or self.name,
            arity=self.arity,
            components=self.components,
            tuples=frozenset(tuples),
            invariant=invariant,
        )
