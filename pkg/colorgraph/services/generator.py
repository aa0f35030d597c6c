"""
Seeded random algebras, relations and CSP instances.

Every function takes a numpy Generator; callers derive one per component from a
single SeedSequence so that runs are reproducible.
"""

import logging
from itertools import product as cartesian
from typing import Iterable, Optional, Sequence

import numpy as np

from ..config import settings
from ..exceptions import InputError
from ..models import Constraint, CspInstance, EdgeType, FiniteAlgebra, OperationTable, Relation
from .algebra import AlgebraService, algebra_service
from .edges import EdgeGraphService, edge_service

logger = logging.getLogger(__name__)

FILTERS = ("idempotent", "no-unary-edges", "smooth", "affine-free", "semilattice-free", "majority-free")

DEFAULT_SIGNATURE: tuple[tuple[str, int], ...] = (("f", 2), ("g", 3))


def spawn(seed: int, count: int) -> list[np.random.Generator]:
    """Independent generators for count components of one invocation."""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(count)]


class GeneratorService:
    """Service class for random objects."""

    def __init__(self, algebras: Optional[AlgebraService] = None, edges: Optional[EdgeGraphService] = None):
        self.algebras = algebras or algebra_service
        self.edges = edges or edge_service

    def passes(self, alg: FiniteAlgebra, filters: Iterable[str]) -> bool:
        """True when alg meets every filter; inconclusive classifications fail."""
        filters = set(filters) - {"idempotent"}
        unknown = filters - set(FILTERS)
        if unknown:
            raise InputError(f"unknown filters {sorted(unknown)}; known: {', '.join(FILTERS)}")
        if not filters:
            return True
        profile = self.edges.edge_profile(alg)
        if profile.inconclusive:
            return False
        forbidden = {
            "no-unary-edges": EdgeType.UNARY,
            "affine-free": EdgeType.AFFINE,
            "semilattice-free": EdgeType.SEMILATTICE,
            "majority-free": EdgeType.MAJORITY,
        }
        if any(profile.has(forbidden[f]) for f in filters if f in forbidden):
            return False
        return profile.smooth or "smooth" not in filters

    @staticmethod
    def _table(rng: np.random.Generator, size: int, arity: int, conservative: bool) -> tuple[int, ...]:
        values = []
        for args in cartesian(range(size), repeat=arity):
            if len(set(args)) == 1:
                values.append(args[0])
            elif conservative:
                values.append(int(args[rng.integers(arity)]))
            else:
                values.append(int(rng.integers(size)))
        return tuple(values)

    def random_algebra(self, rng: np.random.Generator, size: int,
                       signature: Sequence[tuple[str, int]] = DEFAULT_SIGNATURE,
                       filters: Iterable[str] = (), conservative: bool = False,
                       name: str = "RAND", max_attempts: Optional[int] = None) -> FiniteAlgebra:
        """
        Draw idempotent algebras until one passes the filters.

        Args:
            rng: source of randomness
            size: universe size
            signature: operation names and arities
            filters: names from FILTERS
            conservative: every value is one of the arguments
            name: name of the result
            max_attempts: default settings.gen_max_attempts

        Raises:
            InputError: no draw passed the filters
        """
        if size < 1:
            raise InputError("algebra size must be positive")
        filters = tuple(filters)
        attempts = max_attempts or settings.gen_max_attempts
        for attempt in range(attempts):
            ops = tuple(
                OperationTable(name=op, arity=k, size=size, table=self._table(rng, size, k, conservative))
                for op, k in signature
            )
            alg = FiniteAlgebra(name=name, size=size, ops=ops)
            if self.passes(alg, filters):
                logger.debug(f"{name}: accepted after {attempt + 1} draws")
                return alg
        raise InputError(f"no algebra of size {size} passed {list(filters)} in {attempts} draws")

    def random_relation(self, rng: np.random.Generator, components: Sequence[FiniteAlgebra],
                        generators: int = 2, name: str = "R") -> Relation:
        """Sg of random tuples in the product of components."""
        if generators < 1:
            raise InputError("a relation needs at least one generator")
        tuples = [tuple(int(rng.integers(c.size)) for c in components) for _ in range(generators)]
        return self.algebras.generate_relation(components, tuples, name=name)

    def random_subdirect_relation(self, rng: np.random.Generator, components: Sequence[FiniteAlgebra],
                                  generators: int = 2, name: str = "R") -> Relation:
        """A random relation grown by tuples with missing values until it is subdirect."""
        components = tuple(components)
        tuples = [tuple(int(rng.integers(c.size)) for c in components) for _ in range(generators)]
        rel = self.algebras.generate_relation(components, tuples, name=name)
        while not self.algebras.is_subdirect(rel):
            for i, comp in enumerate(components):
                missing = sorted(set(range(comp.size)) - {t[i] for t in rel.tuples})
                if missing:
                    t = [int(rng.integers(c.size)) for c in components]
                    t[i] = missing[int(rng.integers(len(missing)))]
                    tuples.append(tuple(t))
                    break
            rel = self.algebras.generate_relation(components, tuples, name=name)
        return rel

    def random_instance(self, rng: np.random.Generator, domains: Sequence[FiniteAlgebra],
                        variables: int = 4, constraints: int = 4, max_arity: int = 3,
                        generators: int = 2, name: str = "P") -> CspInstance:
        """
        Variables v0.. with domains drawn from domains and constraints whose
        relations are generated by random tuples, hence invariant.
        """
        if variables < 1 or not domains:
            raise InputError("an instance needs variables and candidate domains")
        names = [f"v{i}" for i in range(variables)]
        doms = {v: domains[int(rng.integers(len(domains)))] for v in names}
        result = []
        for ci in range(constraints):
            arity = int(rng.integers(1, min(max_arity, variables) + 1))
            scope = tuple(names[i] for i in sorted(rng.choice(variables, size=arity, replace=False).tolist()))
            rel = self.random_relation(rng, [doms[v] for v in scope], generators, name=f"R{ci}")
            result.append(Constraint(scope=scope, relation=rel))
        return CspInstance(name=name, variables=tuple(names), domains=doms,
                           constraints=tuple(result), algebraic=True)


# Global service instance
generator_service = GeneratorService()


def random_algebra(rng: np.random.Generator, size: int, filters: Iterable[str] = (),
                   conservative: bool = False, name: str = "RAND") -> FiniteAlgebra:
    """Convenience function for a filtered random algebra in the default signature."""
    return generator_service.random_algebra(rng, size, filters=filters, conservative=conservative, name=name)


def random_relation(rng: np.random.Generator, components: Sequence[FiniteAlgebra],
                    generators: int = 2, name: str = "R") -> Relation:
    return generator_service.random_relation(rng, components, generators, name)


def random_subdirect_relation(rng: np.random.Generator, components: Sequence[FiniteAlgebra],
                              generators: int = 2, name: str = "R") -> Relation:
    return generator_service.random_subdirect_relation(rng, components, generators, name)


def random_instance(rng: np.random.Generator, domains: Sequence[FiniteAlgebra], variables: int = 4,
                    constraints: int = 4, max_arity: int = 3, generators: int = 2,
                    name: str = "P") -> CspInstance:
    return generator_service.random_instance(rng, domains, variables, constraints, max_arity, generators, name)
