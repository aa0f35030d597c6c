"""
Named algebras and relations.

All catalog algebras share the signature (f/2, g/3) so that mixed products are
defined. In each algebra the second operation is a term of the first listed
one (or vice versa), so the clone is that of the named operation.
"""

from itertools import product as cartesian
from typing import Callable

from ..exceptions import InputError
from ..models import FiniteAlgebra, OperationTable, Relation


def _algebra(name: str, size: int, f: Callable[[int, int], int], g: Callable[[int, int, int], int]) -> FiniteAlgebra:
    return FiniteAlgebra(
        name=name,
        size=size,
        ops=(
            OperationTable.from_function("f", 2, size, f),
            OperationTable.from_function("g", 3, size, g),
        ),
    )


def _rps(x: int, y: int) -> int:
    # 1 beats 0, 2 beats 1, 0 beats 2
    if x == y:
        return x
    return y if (y - x) % 3 == 1 else x


SEMI2 = _algebra("SEMI2", 2, min, lambda x, y, z: min(x, y, z))
MAJ2 = _algebra("MAJ2", 2, lambda x, y: x, lambda x, y, z: int(x + y + z >= 2))
AFF2 = _algebra("AFF2", 2, lambda x, y: x, lambda x, y, z: x ^ y ^ z)
AFF3 = _algebra("AFF3", 3, lambda x, y: (2 * x + 2 * y) % 3, lambda x, y, z: (x - y + z) % 3)
PROJ2 = _algebra("PROJ2", 2, lambda x, y: x, lambda x, y, z: x)
RPS3 = _algebra("RPS3", 3, _rps, lambda x, y, z: _rps(_rps(x, y), z))
TRIVIAL = _algebra("TRIVIAL", 1, lambda x, y: 0, lambda x, y, z: 0)

ALGEBRAS: dict[str, FiniteAlgebra] = {
    alg.name: alg for alg in (SEMI2, MAJ2, AFF2, AFF3, PROJ2, RPS3, TRIVIAL)
}


def get_algebra(name: str) -> FiniteAlgebra:
    """Look up a catalog algebra by name."""
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise InputError(f"unknown catalog algebra {name}; known: {', '.join(sorted(ALGEBRAS))}") from None


def parity_relation(alg: FiniteAlgebra, arity: int, parity: int = 0) -> Relation:
    """Tuples over a 2-element algebra whose sum has the given parity."""
    if alg.size != 2:
        raise InputError("parity relations live over 2-element algebras")
    tuples = frozenset(t for t in cartesian(range(2), repeat=arity) if sum(t) % 2 == parity)
    return Relation(name="EVEN" if parity == 0 else "ODD", arity=arity,
                    components=(alg,) * arity, tuples=tuples)


def identity_graph(alg: FiniteAlgebra) -> Relation:
    return Relation(name="ID", arity=2, components=(alg, alg),
                    tuples=frozenset((x, x) for x in range(alg.size)), invariant=True)


def full_relation(algs: list[FiniteAlgebra]) -> Relation:
    return Relation(name="FULL", arity=len(algs), components=tuple(algs),
                    tuples=frozenset(cartesian(*(range(a.size) for a in algs))), invariant=True)


def disequality(alg: FiniteAlgebra) -> Relation:
    """x != y; invariant under majority on {0,1}."""
    return Relation(name="NEQ", arity=2, components=(alg, alg),
                    tuples=frozenset((x, y) for x in range(alg.size) for y in range(alg.size) if x != y))
