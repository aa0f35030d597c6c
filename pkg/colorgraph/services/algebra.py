"""
Finite-algebra arithmetic: subuniverses, congruences, quotients, products,
relations and term-existence queries.
"""

import logging
from itertools import combinations, permutations
from itertools import product as cartesian
from math import prod
from typing import Iterable, Optional, Sequence

import numpy as np
from networkx.utils import UnionFind

from ..config import settings
from ..exceptions import InconclusiveError, InputError, InvariantViolation
from ..models import (
    AffinityViolation,
    Congruence,
    FiniteAlgebra,
    ModuleSearchResult,
    ModuleStructure,
    OperationTable,
    Relation,
    SearchStatus,
    Term,
    TermResult,
)
from .closure import ClosureEngine, ClosureResult, table_array

logger = logging.getLogger(__name__)

_RELATION_VIEW_LIMIT = 50_000_000
_ENUMERATED_GROUP_ORDER = 7


def encode(values: Sequence[int], sizes: Sequence[int]) -> int:
    """Mixed-radix index of a tuple, first coordinate most significant."""
    index = 0
    for v, n in zip(values, sizes):
        index = index * n + v
    return index


def decode(index: int, sizes: Sequence[int]) -> tuple[int, ...]:
    values = []
    for n in reversed(sizes):
        index, v = divmod(index, n)
        values.append(v)
    return tuple(reversed(values))


def abelian_groups(n: int) -> list[tuple[int, ...]]:
    """Invariant-factor lists d1 | d2 | ... with product n, one per abelian group of order n."""
    results: list[tuple[int, ...]] = []

    def extend(remaining: int, factors: tuple[int, ...]) -> None:
        if remaining == 1:
            results.append(factors)
            return
        start = factors[-1] if factors else 2
        for d in range(start, remaining + 1):
            if remaining % d == 0 and (not factors or d % factors[-1] == 0):
                extend(remaining // d, factors + (d,))

    extend(n, ())
    return sorted(results, key=lambda fs: (len(fs), fs))


class AlgebraService:
    """Service class for algebra-core computations. Memo tables are write-once."""

    def __init__(self, size_cap: Optional[int] = None, work_cap: Optional[int] = None,
                 arity_cap: Optional[int] = None):
        self.engine = ClosureEngine(size_cap, work_cap)
        self.arity_cap = arity_cap or settings.term_arity_cap
        self._sg: dict[tuple[FiniteAlgebra, frozenset[int]], frozenset[int]] = {}
        self._congruences: dict[FiniteAlgebra, tuple[Congruence, ...]] = {}
        self._maximal: dict[FiniteAlgebra, tuple[Congruence, ...]] = {}
        self._modules: dict[FiniteAlgebra, ModuleSearchResult] = {}

    def configure(self, size_cap: Optional[int] = None, work_cap: Optional[int] = None,
                  arity_cap: Optional[int] = None) -> None:
        """Change caps and drop memo tables that depend on them."""
        if size_cap:
            self.engine.size_cap = size_cap
        if work_cap:
            self.engine.work_cap = work_cap
        if arity_cap:
            self.arity_cap = arity_cap
        self._modules.clear()

    # ------------------------------------------------------------------
    # Subuniverses

    def sg_closure(self, alg: FiniteAlgebra, seed: Iterable[int]) -> frozenset[int]:
        """Least subuniverse containing seed."""
        seed = frozenset(seed)
        if not seed:
            raise InputError("seed must be nonempty")
        for x in seed:
            if not 0 <= x < alg.size:
                raise InputError(f"element {x} out of range for {alg.name}")
        key = (alg, seed)
        if key not in self._sg:
            if len(seed) == alg.size:
                self._sg[key] = seed
            else:
                result = self.engine.close([alg], [[x] for x in sorted(seed)])
                self._sg[key] = frozenset(int(r[0]) for r in result.rows)
        return self._sg[key]

    def subalgebra(self, alg: FiniteAlgebra, subuniverse: Iterable[int], name: Optional[str] = None) -> FiniteAlgebra:
        """Subalgebra on a subuniverse, elements relabelled in increasing order."""
        elements = sorted(set(subuniverse))
        if not elements:
            raise InputError("subuniverse must be nonempty")
        if self.sg_closure(alg, elements) != frozenset(elements):
            raise InputError(f"{elements} is not a subuniverse of {alg.name}")
        if len(elements) == alg.size:
            return alg
        position = np.full(alg.size, -1, dtype=np.int64)
        position[elements] = np.arange(len(elements))
        elems = np.asarray(elements)
        ops = []
        for op in alg.ops:
            sub = table_array(op)[np.ix_(*([elems] * op.arity))]
            ops.append(OperationTable(name=op.name, arity=op.arity, size=len(elements),
                                      table=tuple(position[sub].ravel().tolist())))
        return FiniteAlgebra(name=name or f"{alg.name}[{','.join(map(str, elements))}]",
                             size=len(elements), ops=tuple(ops))

    # ------------------------------------------------------------------
    # Congruences

    def cg_congruence(self, alg: FiniteAlgebra, pairs: Iterable[tuple[int, int]]) -> Congruence:
        """Least congruence containing pairs, by merge-and-propagate."""
        n = alg.size
        uf = UnionFind(range(n))
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"pair {(a, b)} out of range for {alg.name}")
            uf.union(a, b)
        changed = True
        while changed:
            changed = False
            for op in alg.ops:
                table = table_array(op)
                labels = np.asarray([uf[x] for x in range(n)])
                for x in range(n):
                    r = labels[x]
                    if r == x:
                        continue
                    for i in range(op.arity):
                        left = np.take(table, x, axis=i).ravel()
                        right = np.take(table, r, axis=i).ravel()
                        differ = labels[left] != labels[right]
                        for u, v in zip(left[differ].tolist(), right[differ].tolist()):
                            if uf[u] != uf[v]:
                                uf.union(u, v)
                                changed = True
                    if changed:
                        labels = np.asarray([uf[y] for y in range(n)])
        return Congruence.from_labels([uf[x] for x in range(n)])

    @staticmethod
    def join(theta: Congruence, psi: Congruence) -> Congruence:
        """Join of two congruences (transitive closure of the union)."""
        uf = UnionFind(range(theta.size))
        for x in range(theta.size):
            uf.union(x, theta.block_of[x])
            uf.union(x, psi.block_of[x])
        return Congruence.from_labels([uf[x] for x in range(theta.size)])

    def is_congruence(self, alg: FiniteAlgebra, theta: Congruence) -> bool:
        if theta.size != alg.size:
            return False
        return self.cg_congruence(alg, [(x, b) for x, b in enumerate(theta.block_of)]) == theta

    def principal_congruences(self, alg: FiniteAlgebra) -> dict[tuple[int, int], Congruence]:
        return {(a, b): self.cg_congruence(alg, [(a, b)]) for a, b in combinations(range(alg.size), 2)}

    def all_congruences(self, alg: FiniteAlgebra) -> tuple[Congruence, ...]:
        """The congruence lattice as the join-closure of principal congruences, sorted by labels."""
        if alg not in self._congruences:
            if alg.size > settings.congruence_size_cap:
                logger.warning(f"Enumerating congruences of {alg.name} with {alg.size} elements")
            principals = sorted(set(self.principal_congruences(alg).values()), key=lambda c: c.block_of)
            found = {Congruence.equality(alg.size)}
            frontier = list(found)
            while frontier:
                theta = frontier.pop()
                for psi in principals:
                    joined = self.join(theta, psi)
                    if joined not in found:
                        found.add(joined)
                        frontier.append(joined)
            self._congruences[alg] = tuple(sorted(found, key=lambda c: c.block_of))
            logger.debug(f"{alg.name}: {len(found)} congruences")
        return self._congruences[alg]

    def all_maximal_congruences(self, alg: FiniteAlgebra) -> tuple[Congruence, ...]:
        """Coatoms of the congruence lattice, in canonical order."""
        if alg not in self._maximal:
            if alg.size == 1:
                self._maximal[alg] = ()
            else:
                principals = set(self.principal_congruences(alg).values())
                maximal = []
                for theta in self.all_congruences(alg):
                    if theta.is_full():
                        continue
                    if all(self.join(theta, psi).is_full() for psi in principals if not psi.refines(theta)):
                        maximal.append(theta)
                self._maximal[alg] = tuple(maximal)
        return self._maximal[alg]

    def quotient(self, alg: FiniteAlgebra, theta: Congruence, name: Optional[str] = None) -> FiniteAlgebra:
        """Factor algebra; block i is the block with the i-th least leader."""
        if not self.is_congruence(alg, theta):
            raise InvariantViolation(f"partition {theta.blocks()} is not a congruence of {alg.name}")
        leaders = np.asarray(sorted(set(theta.block_of)))
        index = np.asarray(theta.index_map)
        ops = []
        for op in alg.ops:
            values = table_array(op)[np.ix_(*([leaders] * op.arity))]
            ops.append(OperationTable(name=op.name, arity=op.arity, size=len(leaders),
                                      table=tuple(index[values].ravel().tolist())))
        return FiniteAlgebra(name=name or f"{alg.name}/θ", size=len(leaders), ops=tuple(ops))

    # ------------------------------------------------------------------
    # Products

    def product(self, algs: Sequence[FiniteAlgebra], name: Optional[str] = None) -> FiniteAlgebra:
        """Direct product with mixed-radix encoding, first factor most significant."""
        algs = list(algs)
        if not algs:
            raise InputError("product of an empty list")
        for other in algs[1:]:
            if not algs[0].similar(other):
                raise InputError(f"dissimilar signatures: {algs[0].name} and {other.name}")
        if len(algs) == 1:
            return algs[0]
        sizes = tuple(a.size for a in algs)
        total = prod(sizes)
        coords = np.unravel_index(np.arange(total), sizes)
        ops = []
        for opname, k in algs[0].signature:
            digits = []
            for j, alg in enumerate(algs):
                table = table_array(alg.op(opname))
                idx = tuple(coords[j].reshape([total if i == p else 1 for i in range(k)]) for p in range(k))
                digits.append(np.broadcast_to(table[idx], (total,) * k))
            values = np.ravel_multi_index(tuple(digits), sizes)
            ops.append(OperationTable(name=opname, arity=k, size=total, table=tuple(values.ravel().tolist())))
        return FiniteAlgebra(name=name or "*".join(a.name for a in algs), size=total, ops=tuple(ops))

    # ------------------------------------------------------------------
    # Term search

    def term_exists(self, alg: FiniteAlgebra, arity: int, spec: Sequence[tuple[Sequence[int], int]]) -> TermResult:
        """Does some arity-ary term operation meet every (input -> output) requirement?"""
        return self.term_exists_in([alg], arity, [(0, inp, out) for inp, out in spec])

    def term_exists_in(self, algs: Sequence[FiniteAlgebra], arity: int,
                       spec: Sequence[tuple[int, Sequence[int], int]]) -> TermResult:
        """Term search across similar algebras; each requirement names its algebra by index."""
        if arity < 1 or arity > self.arity_cap:
            raise InputError(f"term arity {arity} outside 1..{self.arity_cap}")
        seen: dict[tuple[int, tuple[int, ...]], int] = {}
        rows = []
        for which, inp, out in spec:
            alg = algs[which]
            inp = tuple(inp)
            if len(inp) != arity:
                raise InputError(f"input {inp} does not have arity {arity}")
            if any(not 0 <= v < alg.size for v in inp) or not 0 <= out < alg.size:
                raise InputError(f"requirement {inp} -> {out} out of range for {alg.name}")
            if (which, inp) in seen:
                raise InputError(f"input {inp} is listed twice")
            seen[(which, inp)] = out
            if all(v == inp[0] for v in inp):
                if out != inp[0]:
                    return TermResult(status=SearchStatus.ABSENT, arity=arity)
                continue
            rows.append((alg, inp, out))
        if not rows:
            return TermResult(status=SearchStatus.FOUND, arity=arity, witness=Term.var(0), closure_size=arity)
        columns = [alg for alg, _, _ in rows]
        generators = [[inp[j] for _, inp, _ in rows] for j in range(arity)]
        target = [out for _, _, out in rows]
        result = self.engine.close(columns, generators, [target])
        return self._term_result(result, arity)

    @staticmethod
    def _term_result(result: ClosureResult, arity: int) -> TermResult:
        if 0 in result.found:
            return TermResult(status=SearchStatus.FOUND, arity=arity,
                              witness=result.derivation(result.found[0]), closure_size=result.size)
        if result.cap:
            return TermResult(status=SearchStatus.INCONCLUSIVE, arity=arity,
                              closure_size=result.size, cap=result.cap)
        return TermResult(status=SearchStatus.ABSENT, arity=arity, closure_size=result.size)

    @staticmethod
    def is_projection_algebra(alg: FiniteAlgebra) -> bool:
        """Every basic operation is a projection."""
        for op in alg.ops:
            table = table_array(op)
            grid = np.indices(table.shape)
            if not any(np.array_equal(table, grid[i]) for i in range(op.arity)):
                return False
        return True

    # ------------------------------------------------------------------
    # Module structures

    def candidate_groups(self, n: int) -> list[ModuleStructure]:
        """Abelian groups on 0..n-1 with zero 0, one per distinct addition table."""
        seen: set[tuple[int, ...]] = set()
        groups = []
        for factors in abelian_groups(n):
            base = np.zeros((n, n), dtype=np.int64)
            for a in range(n):
                ca = decode(a, factors)
                for b in range(n):
                    cb = decode(b, factors)
                    base[a, b] = encode([(x + y) % d for x, y, d in zip(ca, cb, factors)], factors)
            for perm in permutations(range(1, n)):
                sigma = np.asarray((0,) + perm)
                inverse = np.argsort(sigma)
                table = sigma[base[np.ix_(inverse, inverse)]]
                key = tuple(table.ravel().tolist())
                if key in seen:
                    continue
                seen.add(key)
                neg = tuple(int(np.flatnonzero(table[a] == 0)[0]) for a in range(n))
                groups.append(ModuleStructure(size=n, add_table=key, zero=0, neg_table=neg))
        return groups

    def _groups_from_maltsev(self, alg: FiniteAlgebra):
        """
        Candidate group read off a Mal'tsev term p via a + b = p(a, 0, b).

        An affine algebra has exactly one Mal'tsev term operation, namely x - y + z,
        so a single candidate suffices when the universe is too large to enumerate.
        """
        n = alg.size
        spec = []
        for x in range(n):
            for y in range(n):
                if x != y:
                    spec.append(((x, y, y), x))
                    spec.append(((y, y, x), x))
        maltsev = self.term_exists(alg, 3, spec)
        if maltsev.inconclusive:
            return ModuleSearchResult(status=SearchStatus.INCONCLUSIVE, cap=maltsev.cap)
        if not maltsev.found:
            return []
        p = maltsev.witness
        add = tuple(p.evaluate(alg, (a, 0, b)) for a in range(n) for b in range(n))
        neg = tuple(p.evaluate(alg, (0, a, 0)) for a in range(n))
        try:
            return [ModuleStructure(size=n, add_table=add, zero=0, neg_table=neg)]
        except ValueError:
            return []

    @staticmethod
    def affinity_violation(alg: FiniteAlgebra, group: ModuleStructure) -> Optional[AffinityViolation]:
        """First triple (x, 0, z) breaking f(x - y + z) = f(x) - f(y) + f(z), if any."""
        n = alg.size
        add = np.asarray(group.add_table).reshape(n, n)
        neg = np.asarray(group.neg_table)
        for op in alg.ops:
            k = op.arity
            flat = np.asarray(op.table)
            coords = np.unravel_index(np.arange(n ** k), (n,) * k)
            summed = np.ravel_multi_index(tuple(add[c[:, None], c[None, :]] for c in coords), (n,) * k)
            zero_value = flat[encode((group.zero,) * k, (n,) * k)]
            lhs = flat[summed]
            rhs = add[add[flat[:, None], neg[zero_value]], flat[None, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                i, j = bad[0]
                return AffinityViolation(
                    op=op.name,
                    x=decode(int(i), (n,) * k),
                    y=(group.zero,) * k,
                    z=decode(int(j), (n,) * k),
                    add_table=group.add_table,
                )
        return None

    def module_structure(self, alg: FiniteAlgebra) -> ModuleSearchResult:
        """First abelian group making alg affine, confirmed by a term for x - y + z."""
        if alg in self._modules:
            return self._modules[alg]
        n = alg.size
        rejected = []
        if n <= _ENUMERATED_GROUP_ORDER:
            candidates = self.candidate_groups(n)
        else:
            candidates = self._groups_from_maltsev(alg)
            if isinstance(candidates, ModuleSearchResult):
                self._modules[alg] = candidates
                return candidates
        result = None
        for group in candidates:
            violation = self.affinity_violation(alg, group)
            if violation is not None:
                rejected.append(violation)
                continue
            spec = [((x, y, z), group.affine(x, y, z))
                    for x, y, z in cartesian(range(n), repeat=3)]
            term = self.term_exists(alg, 3, spec)
            if term.found:
                result = ModuleSearchResult(status=SearchStatus.FOUND, structure=group, witness=term.witness,
                                            rejected=tuple(rejected), candidates=len(candidates))
                break
            if term.inconclusive:
                result = ModuleSearchResult(status=SearchStatus.INCONCLUSIVE, rejected=tuple(rejected),
                                            candidates=len(candidates), cap=term.cap)
                break
        if result is None:
            result = ModuleSearchResult(status=SearchStatus.ABSENT, rejected=tuple(rejected),
                                        candidates=len(candidates))
        self._modules[alg] = result
        return result

    # ------------------------------------------------------------------
    # Relations

    @staticmethod
    def project(rel: Relation, indices: Sequence[int]) -> Relation:
        """pr_I rel, coordinates in the given order."""
        indices = list(indices)
        for i in indices:
            if not 0 <= i < rel.arity:
                raise InputError(f"coordinate {i} out of range for arity {rel.arity}")
        return Relation(
            name=f"pr{''.join(map(str, indices))}({rel.name})",
            arity=len(indices),
            components=tuple(rel.components[i] for i in indices),
            tuples=frozenset(tuple(t[i] for i in indices) for t in rel.tuples),
            invariant=rel.invariant,
        )

    @staticmethod
    def is_subdirect(rel: Relation) -> bool:
        return all(
            {t[i] for t in rel.tuples} == set(range(comp.size))
            for i, comp in enumerate(rel.components)
        )

    def link_congruence(self, rel: Relation, i: int, against: Optional[Sequence[int]] = None) -> Congruence:
        """
        Transitive closure of the link tolerance at coordinate i.

        Values of coordinate i are linked when they occur in tuples agreeing on
        every other coordinate, or only on the coordinates in against.
        """
        if not 0 <= i < rel.arity:
            raise InputError(f"coordinate {i} out of range")
        if not self.is_subdirect(rel):
            raise InputError(f"relation {rel.name} is not subdirect")
        others = [j for j in range(rel.arity) if j != i] if against is None else list(against)
        groups: dict[tuple[int, ...], list[int]] = {}
        for t in rel.tuples:
            groups.setdefault(tuple(t[j] for j in others), []).append(t[i])
        uf = UnionFind(range(rel.components[i].size))
        for values in groups.values():
            uf.union(*values)
        return Congruence.from_labels([uf[x] for x in range(rel.components[i].size)])

    def is_linked(self, rel: Relation) -> bool:
        if rel.arity != 2:
            raise InputError("is_linked expects a binary relation")
        return self.link_congruence(rel, 0).is_full() and self.link_congruence(rel, 1).is_full()

    def generate_relation(self, components: Sequence[FiniteAlgebra], tuples: Iterable[Sequence[int]],
                          name: str = "R") -> Relation:
        """Sg of tuples inside the product of components."""
        components = tuple(components)
        tuples = [tuple(t) for t in tuples]
        result = self.engine.close(components, tuples)
        if result.cap:
            raise InconclusiveError(f"generating {name} hit the {result.cap} cap", cap=result.cap)
        return Relation(name=name, arity=len(components), components=components,
                        tuples=frozenset(result.members()), invariant=True)

    def is_invariant(self, rel: Relation) -> bool:
        """Closed under every shared basic operation applied coordinate-wise."""
        if rel.arity == 0 or len(rel.tuples) <= 1:
            return True
        result = self.engine.close(rel.components, rel.sorted_tuples)
        if result.cap:
            raise InconclusiveError(f"invariance check of {rel.name} hit the {result.cap} cap", cap=result.cap)
        return result.size == len(rel.tuples)

    def relation_algebra(self, rel: Relation, name: Optional[str] = None) -> FiniteAlgebra:
        """The invariant relation as an algebra; element i is the i-th tuple in sorted order."""
        if not rel.tuples:
            raise InputError(f"relation {rel.name} is empty")
        if not rel.invariant and not self.is_invariant(rel):
            raise InputError(f"relation {rel.name} is not invariant")
        rows = np.asarray(rel.sorted_tuples, dtype=np.int64).reshape(len(rel.tuples), rel.arity)
        n, m = rows.shape
        sizes = tuple(c.size for c in rel.components)
        codes = np.ravel_multi_index(rows.T, sizes) if m else np.zeros(n, dtype=np.int64)
        signature = rel.components[0].signature if m else ()
        ops = []
        for opname, k in signature:
            if n ** k * m > _RELATION_VIEW_LIMIT:
                raise InputError(f"relation {rel.name} is too large to view as an algebra")
            out = np.empty((n,) * k + (m,), dtype=np.int64)
            for j, comp in enumerate(rel.components):
                table = table_array(comp.op(opname))
                idx = tuple(rows[:, j].reshape([n if i == p else 1 for i in range(k)]) for p in range(k))
                out[..., j] = table[idx]
            flat = out.reshape(-1, m)
            result_codes = np.ravel_multi_index(flat.T, sizes)
            positions = np.searchsorted(codes, result_codes)
            ops.append(OperationTable(name=opname, arity=k, size=n, table=tuple(positions.tolist())))
        return FiniteAlgebra(name=name or rel.name, size=n, ops=tuple(ops))

    def is_two_decomposable(self, rel: Relation) -> bool:
        """rel equals the set of tuples all of whose 2-projections lie in rel's 2-projections."""
        m = rel.arity
        pairs = {(i, j): {(t[i], t[j]) for t in rel.tuples} for i, j in combinations(range(m), 2)}
        count = 0

        def extend(prefix: list[int]) -> bool:
            nonlocal count
            i = len(prefix)
            if i == m:
                count += 1
                return tuple(prefix) in rel.tuples
            for v in range(rel.components[i].size):
                if all((prefix[j], v) in pairs[(j, i)] for j in range(i)):
                    prefix.append(v)
                    ok = extend(prefix)
                    prefix.pop()
                    if not ok:
                        return False
            return True

        return extend([]) and count == len(rel.tuples)


# Global service instance
algebra_service = AlgebraService()


def sg_closure(alg: FiniteAlgebra, seed: Iterable[int]) -> frozenset[int]:
    """Convenience function for the least subuniverse containing seed."""
    return algebra_service.sg_closure(alg, seed)


def subalgebra(alg: FiniteAlgebra, subuniverse: Iterable[int], name: Optional[str] = None) -> FiniteAlgebra:
    return algebra_service.subalgebra(alg, subuniverse, name)


def cg_congruence(alg: FiniteAlgebra, pairs: Iterable[tuple[int, int]]) -> Congruence:
    return algebra_service.cg_congruence(alg, pairs)


def all_congruences(alg: FiniteAlgebra) -> tuple[Congruence, ...]:
    return algebra_service.all_congruences(alg)


def all_maximal_congruences(alg: FiniteAlgebra) -> tuple[Congruence, ...]:
    return algebra_service.all_maximal_congruences(alg)


def quotient(alg: FiniteAlgebra, theta: Congruence, name: Optional[str] = None) -> FiniteAlgebra:
    return algebra_service.quotient(alg, theta, name)


def product(algs: Sequence[FiniteAlgebra], name: Optional[str] = None) -> FiniteAlgebra:
    return algebra_service.product(algs, name)


def term_exists(alg: FiniteAlgebra, arity: int, spec: Sequence[tuple[Sequence[int], int]]) -> TermResult:
    return algebra_service.term_exists(alg, arity, spec)


def is_projection_algebra(alg: FiniteAlgebra) -> bool:
    return algebra_service.is_projection_algebra(alg)


def module_structure(alg: FiniteAlgebra) -> ModuleSearchResult:
    return algebra_service.module_structure(alg)


def project(rel: Relation, indices: Sequence[int]) -> Relation:
    return algebra_service.project(rel, indices)


def link_congruence(rel: Relation, i: int, against: Optional[Sequence[int]] = None) -> Congruence:
    return algebra_service.link_congruence(rel, i, against)


def is_linked(rel: Relation) -> bool:
    return algebra_service.is_linked(rel)


def is_subdirect(rel: Relation) -> bool:
    return algebra_service.is_subdirect(rel)


def generate_relation(components: Sequence[FiniteAlgebra], tuples: Iterable[Sequence[int]],
                      name: str = "R") -> Relation:
    return algebra_service.generate_relation(components, tuples, name)


def is_invariant(rel: Relation) -> bool:
    return algebra_service.is_invariant(rel)


def relation_algebra(rel: Relation, name: Optional[str] = None) -> FiniteAlgebra:
    return algebra_service.relation_algebra(rel, name)


def is_two_decomposable(rel: Relation) -> bool:
    return algebra_service.is_two_decomposable(rel)
