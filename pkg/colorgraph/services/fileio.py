"""
Line-oriented text formats for algebras, relations, representations and CSP instances.

Algebra blocks:    algebra <name> / size <n> / op <name> <arity> + n^arity values
Relation blocks:   relation <name> <arity> / over <alg>... / [subset-of <name>] + tuples
Instance blocks:   instance <name> / var <v> <alg> / rel <r> <arity> <alg>... + tuples
                   / constraint <r> <v1>...<vk>

'#' starts a comment. Algebra names resolve against algebra blocks earlier in
the same file, then against the catalog. Emitted text parses back to models
whose emitted text is byte-identical.
"""

import logging
from pathlib import Path
from typing import Iterable, Optional, Union

from pydantic import ValidationError

from ..exceptions import InputError
from ..models import Constraint, CspInstance, Document, FiniteAlgebra, OperationTable, Relation, Representation
from .catalog import ALGEBRAS

logger = logging.getLogger(__name__)

TOP_LEVEL = ("algebra", "relation", "instance")
KEYWORDS = TOP_LEVEL + ("size", "op", "over", "subset-of", "var", "rel", "constraint")


class _Parser:
    """One pass over the lines of a document."""

    def __init__(self, text: str, source: str):
        self.source = source
        self.doc = Document(source=source)
        self.lines = []
        for number, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                self.lines.append((number, line.split()))
        self.pos = 0

    def error(self, number: int, message: str) -> InputError:
        return InputError(f"{self.source}:{number}: {message}")

    def ints(self, number: int, words: list[str]) -> list[int]:
        try:
            return [int(w) for w in words]
        except ValueError:
            raise self.error(number, f"expected integers, got {' '.join(words)}") from None

    def numeric_rows(self) -> list[tuple[int, list[int]]]:
        rows = []
        while self.pos < len(self.lines) and self.lines[self.pos][1][0] not in KEYWORDS:
            number, words = self.lines[self.pos]
            rows.append((number, self.ints(number, words)))
            self.pos += 1
        return rows

    def expect(self, number: int, words: list[str], count: int) -> None:
        if len(words) != count:
            raise self.error(number, f"'{words[0]}' takes {count - 1} arguments")

    def algebra(self, name: str) -> FiniteAlgebra:
        if name in self.doc.algebras:
            return self.doc.algebras[name]
        if name in ALGEBRAS:
            return ALGEBRAS[name]
        raise InputError(f"{self.source}: unknown algebra {name}")

    def parse(self) -> Document:
        while self.pos < len(self.lines):
            number, words = self.lines[self.pos]
            self.pos += 1
            if words[0] == "algebra":
                self.expect(number, words, 2)
                self.parse_algebra(number, words[1])
            elif words[0] == "relation":
                self.expect(number, words, 3)
                self.parse_relation(number, words[1], self.ints(number, words[2:])[0])
            elif words[0] == "instance":
                self.expect(number, words, 2)
                self.parse_instance(number, words[1])
            else:
                raise self.error(number, f"expected one of {', '.join(TOP_LEVEL)}, got '{words[0]}'")
        return self.doc

    def _next_keyword(self, allowed: Iterable[str]) -> Optional[tuple[int, list[str]]]:
        if self.pos < len(self.lines) and self.lines[self.pos][1][0] in allowed:
            self.pos += 1
            return self.lines[self.pos - 1]
        return None

    def parse_algebra(self, start: int, name: str) -> None:
        found = self._next_keyword(("size",))
        if found is None:
            raise self.error(start, f"algebra {name} needs a size line")
        number, words = found
        self.expect(number, words, 2)
        size = self.ints(number, words[1:])[0]
        ops = []
        while (found := self._next_keyword(("op",))) is not None:
            number, words = found
            self.expect(number, words, 3)
            arity = self.ints(number, words[2:])[0]
            values = [v for _, row in self.numeric_rows() for v in row]
            try:
                ops.append(OperationTable(name=words[1], arity=arity, size=size, table=tuple(values)))
            except ValidationError as e:
                raise self.error(number, e.errors()[0]["msg"]) from None
        try:
            self.doc.algebras[name] = FiniteAlgebra(name=name, size=size, ops=tuple(ops))
        except ValidationError as e:
            raise self.error(start, e.errors()[0]["msg"]) from None

    def tuples(self, arity: int) -> set[tuple[int, ...]]:
        result = set()
        for number, row in self.numeric_rows():
            if len(row) != arity:
                raise self.error(number, f"tuple of length {len(row)}, expected {arity}")
            result.add(tuple(row))
        return result

    def make_relation(self, number: int, name: str, arity: int, components, tuples) -> Relation:
        try:
            return Relation(name=name, arity=arity, components=tuple(components), tuples=frozenset(tuples))
        except ValidationError as e:
            raise self.error(number, e.errors()[0]["msg"]) from None

    def parse_relation(self, start: int, name: str, arity: int) -> None:
        found = self._next_keyword(("over",))
        if found is None:
            raise self.error(start, f"relation {name} needs an over line")
        number, words = found
        self.expect(number, words, arity + 1)
        components = [self.algebra(w) for w in words[1:]]
        tuples = self.tuples(arity)
        found = self._next_keyword(("subset-of",))
        if found is not None:
            number, words = found
            self.expect(number, words, 2)
            self.doc.subset_of[name] = words[1]
            tuples |= self.tuples(arity)
        self.doc.relations[name] = self.make_relation(start, name, arity, components, tuples)

    def parse_instance(self, start: int, name: str) -> None:
        variables, domains = [], {}
        relations: dict[str, Relation] = {}
        constraints = []
        while (found := self._next_keyword(("var", "rel", "constraint"))) is not None:
            number, words = found
            if words[0] == "var":
                self.expect(number, words, 3)
                if words[1] in domains:
                    raise self.error(number, f"variable {words[1]} declared twice")
                variables.append(words[1])
                domains[words[1]] = self.algebra(words[2])
            elif words[0] == "rel":
                if len(words) < 3:
                    raise self.error(number, "'rel' takes a name, an arity and the component algebras")
                arity = self.ints(number, words[2:3])[0]
                self.expect(number, words, arity + 3)
                components = [self.algebra(w) for w in words[3:]]
                relations[words[1]] = self.make_relation(number, words[1], arity, components,
                                                         self.tuples(arity))
            else:
                if len(words) < 2 or words[1] not in relations:
                    raise self.error(number, "constraint refers to an undeclared relation")
                try:
                    constraints.append(Constraint(scope=tuple(words[2:]), relation=relations[words[1]]))
                except ValidationError as e:
                    raise self.error(number, e.errors()[0]["msg"]) from None
        try:
            self.doc.instances[name] = CspInstance(name=name, variables=tuple(variables), domains=domains,
                                                   constraints=tuple(constraints))
        except ValidationError as e:
            raise self.error(start, e.errors()[0]["msg"]) from None


class FileService:
    """Service class for reading and writing the text formats."""

    def parse_text(self, text: str, source: str = "<text>") -> Document:
        """Parse every block of a document."""
        doc = _Parser(text, source).parse()
        logger.debug(f"{source}: {len(doc.algebras)} algebras, {len(doc.relations)} relations, "
                     f"{len(doc.instances)} instances")
        return doc

    def load(self, path: Union[str, Path]) -> Document:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
        return self.parse_text(text, str(path))

    def load_algebra(self, ref: str) -> FiniteAlgebra:
        """A catalog name, or a file whose first algebra block is taken."""
        if ref in ALGEBRAS:
            return ALGEBRAS[ref]
        doc = self.load(ref)
        if not doc.algebras:
            raise InputError(f"{ref} contains no algebra block")
        return next(iter(doc.algebras.values()))

    def load_relation(self, path: Union[str, Path]) -> Relation:
        doc = self.load(path)
        if not doc.relations:
            raise InputError(f"{path} contains no relation block")
        return next(iter(doc.relations.values()))

    def load_instance(self, path: Union[str, Path]) -> CspInstance:
        doc = self.load(path)
        if not doc.instances:
            raise InputError(f"{path} contains no instance block")
        return next(iter(doc.instances.values()))

    # ------------------------------------------------------------------
    # Emitting

    @staticmethod
    def dump_algebra(alg: FiniteAlgebra) -> str:
        lines = [f"algebra {alg.name}", f"size {alg.size}"]
        for op in alg.ops:
            lines.append(f"op {op.name} {op.arity}")
            for start in range(0, len(op.table), alg.size):
                lines.append(" ".join(map(str, op.table[start:start + alg.size])))
        return "\n".join(lines) + "\n"

    def _algebra_blocks(self, algebras: Iterable[FiniteAlgebra]) -> str:
        """Blocks for the algebras that are not catalog entries, in first-use order."""
        seen: dict[str, FiniteAlgebra] = {}
        for alg in algebras:
            if alg.name in seen:
                if seen[alg.name] != alg:
                    raise InputError(f"two different algebras are named {alg.name}")
                continue
            seen[alg.name] = alg
        return "".join(self.dump_algebra(alg) for name, alg in seen.items() if ALGEBRAS.get(name) != alg)

    @staticmethod
    def _tuple_lines(tuples: Iterable[tuple[int, ...]]) -> list[str]:
        return [" ".join(map(str, t)) for t in sorted(tuples)]

    def dump_relation(self, rel: Relation, subset_of: Optional[str] = None) -> str:
        if rel.arity == 0:
            raise InputError("nullary relations have no text form")
        lines = [f"relation {rel.name} {rel.arity}", "over " + " ".join(c.name for c in rel.components)]
        if subset_of is not None:
            lines.append(f"subset-of {subset_of}")
        lines.extend(self._tuple_lines(rel.tuples))
        return self._algebra_blocks(rel.components) + "\n".join(lines) + "\n"

    def dump_representation(self, rep: Representation) -> str:
        """The chosen tuples as a relation block headed by subset-of."""
        subset = rep.base.with_tuples(rep.subset, name=f"{rep.base.name}_rep")
        return self.dump_relation(subset, subset_of=rep.base.name)

    def dump_instance(self, instance: CspInstance) -> str:
        names: dict[Relation, str] = {}
        used: set[str] = set()
        for c in instance.constraints:
            if c.relation in names:
                continue
            name, suffix = c.relation.name, 1
            while name in used:
                name = f"{c.relation.name}_{suffix}"
                suffix += 1
            names[c.relation] = name
            used.add(name)
        algebras = [instance.domains[v] for v in instance.variables]
        algebras.extend(comp for rel in names for comp in rel.components)
        lines = [f"instance {instance.name}"]
        lines.extend(f"var {v} {instance.domains[v].name}" for v in instance.variables)
        for rel, name in names.items():
            if rel.arity == 0:
                raise InputError("nullary constraints have no text form")
            lines.append(f"rel {name} {rel.arity} " + " ".join(c.name for c in rel.components))
            lines.extend(self._tuple_lines(rel.tuples))
        for c in instance.constraints:
            lines.append(f"constraint {names[c.relation]} " + " ".join(c.scope))
        return self._algebra_blocks(algebras) + "\n".join(lines) + "\n"


# Global service instance
file_service = FileService()


def parse_text(text: str, source: str = "<text>") -> Document:
    """Convenience function for parsing a document."""
    return file_service.parse_text(text, source)


def load_algebra(ref: str) -> FiniteAlgebra:
    return file_service.load_algebra(ref)


def load_relation(path: Union[str, Path]) -> Relation:
    return file_service.load_relation(path)


def load_instance(path: Union[str, Path]) -> CspInstance:
    return file_service.load_instance(path)


def dump_algebra(alg: FiniteAlgebra) -> str:
    return file_service.dump_algebra(alg)


def dump_relation(rel: Relation, subset_of: Optional[str] = None) -> str:
    return file_service.dump_relation(rel, subset_of)


def dump_instance(instance: CspInstance) -> str:
    return file_service.dump_instance(instance)
