"""
Signatures and compact representations of subpowers of semilattice-free algebras.
"""

import logging
from itertools import combinations
from math import comb, prod
from typing import Iterable, Optional

import numpy as np

from ..config import settings
from ..exceptions import HypothesisViolation, InconclusiveError, InputError
from ..models import (
    AuditReport,
    EdgeType,
    FiniteAlgebra,
    Relation,
    Representation,
    RepresentationCheck,
    SearchStatus,
    Signature,
    TermResult,
    Verdict,
)
from .algebra import AlgebraService, algebra_service
from .edges import EdgeGraphService, edge_service

logger = logging.getLogger(__name__)


def edge_term_spec(size: int, identities: int) -> list[tuple[tuple[int, ...], int]]:
    """
    Requirements for a (identities+1)-ary edge term on a universe of the given size.

    Row 1 is t(y,y,x,x,...,x) = x, row 2 is t(y,x,y,x,...,x) = x and row i >= 3
    has y in position i+1 only.
    """
    arity = identities + 1
    spec = []
    for x in range(size):
        for y in range(size):
            if x == y:
                continue
            rows = [(y, y) + (x,) * (arity - 2), (y, x, y) + (x,) * (arity - 3)]
            for i in range(3, identities + 1):
                row = [x] * arity
                row[i] = y
                rows.append(tuple(row))
            spec.extend((row, x) for row in rows)
    return spec


def coordinate_sets(arity: int) -> list[tuple[int, ...]]:
    """Sorted coordinate triples, or the whole index set below three coordinates."""
    if arity < 3:
        return [tuple(range(arity))]
    return list(combinations(range(arity), 3))


class SubpowerService:
    """Service class for signatures, representations and edge terms."""

    def __init__(self, algebras: Optional[AlgebraService] = None, edges: Optional[EdgeGraphService] = None):
        self.algebras = algebras or algebra_service
        self.edges = edges or edge_service

    def require_semilattice_free(self, rel: Relation) -> None:
        """Raise unless every component of rel has no semilattice edge."""
        for i, comp in enumerate(rel.components):
            profile = self.edges.edge_profile(comp)
            if profile.inconclusive:
                raise InconclusiveError(f"edge types of component {i} ({comp.name}) are inconclusive")
            if profile.has(EdgeType.SEMILATTICE):
                raise HypothesisViolation(
                    "semilattice-free",
                    f"component {i} ({comp.name}) has a semilattice edge",
                    witness={"coordinate": i, "algebra": comp.name},
                )

    def signature_of(self, rel: Relation) -> Signature:
        """
        Triples (i, a, b) such that two tuples of rel agree before coordinate i,
        take values a and b there, and a = b or a -> b is a thin affine arc.

        Raises:
            HypothesisViolation: a component has a semilattice edge
        """
        self.require_semilattice_free(rel)
        affine = []
        for comp in rel.components:
            arcs = self.edges.thin_affine_arcs(comp)
            if arcs.inconclusive:
                raise InconclusiveError(f"thin affine arcs of {comp.name} are inconclusive", cap=arcs.cap)
            affine.append(arcs.arcs)
        entries = set()
        for i in range(rel.arity):
            groups: dict[tuple[int, ...], set[int]] = {}
            for t in rel.tuples:
                groups.setdefault(t[:i], set()).add(t[i])
            for values in groups.values():
                for a in values:
                    entries.add((i, a, a))
                    for b in values:
                        if (a, b) in affine[i]:
                            entries.add((i, a, b))
        logger.debug(f"Signature of {rel.name}: {len(entries)} entries")
        return Signature(entries=frozenset(entries))

    @staticmethod
    def bound(rel: Relation, signature: Signature) -> int:
        """2|Sig| + C(n,3) max |Ai||Aj||Ak|, with the full product below three coordinates."""
        sizes = [c.size for c in rel.components]
        if rel.arity < 3:
            return 2 * len(signature) + prod(sizes)
        cube = max(prod(sizes[i] for i in triple) for triple in combinations(range(rel.arity), 3))
        return 2 * len(signature) + comb(rel.arity, 3) * cube

    @staticmethod
    def _witness_pair(tuples: Iterable[tuple[int, ...]], entry: tuple[int, int, int]):
        i, a, b = entry
        firsts: dict[tuple[int, ...], tuple[int, ...]] = {}
        seconds: dict[tuple[int, ...], tuple[int, ...]] = {}
        for t in sorted(tuples):
            if t[i] == a:
                firsts.setdefault(t[:i], t)
            if t[i] == b:
                seconds.setdefault(t[:i], t)
        for prefix in sorted(firsts):
            if prefix in seconds:
                return firsts[prefix], seconds[prefix]
        return None

    def _check(self, rel: Relation, subset: frozenset, signature: Signature) -> RepresentationCheck:
        for coords in coordinate_sets(rel.arity):
            covered = {tuple(t[c] for c in coords) for t in subset}
            for t in rel.sorted_tuples:
                value = tuple(t[c] for c in coords)
                if value not in covered:
                    return RepresentationCheck(ok=False, clause=2,
                                               detail=f"projection {value} on coordinates {list(coords)}")
        for entry in signature.sorted_entries():
            if self._witness_pair(subset, entry) is None:
                return RepresentationCheck(ok=False, clause=1, detail=f"signature triple {entry}")
        return RepresentationCheck(ok=True)

    def is_representation(self, rel: Relation, subset: Iterable[tuple[int, ...]]) -> RepresentationCheck:
        """Check both representation clauses; the projection clause is checked first."""
        subset = frozenset(tuple(t) for t in subset)
        if not subset <= rel.tuples:
            raise InputError("candidate representation is not a subset of the relation")
        return self._check(rel, subset, self.signature_of(rel))

    def minimal_representation(self, rel: Relation) -> Representation:
        """
        Greedy representation followed by an inclusion-minimal pruning pass.

        Args:
            rel: relation over semilattice-free components

        Returns:
            Representation whose size never exceeds its bound
        """
        signature = self.signature_of(rel)
        chosen: set[tuple[int, ...]] = set()
        for entry in signature.sorted_entries():
            pair = self._witness_pair(rel.tuples, entry)
            if pair is None:
                raise InputError(f"signature triple {entry} has no witness in {rel.name}")
            chosen.update(pair)
        for coords in coordinate_sets(rel.arity):
            covered = {tuple(t[c] for c in coords) for t in chosen}
            for t in rel.sorted_tuples:
                value = tuple(t[c] for c in coords)
                if value not in covered:
                    chosen.add(t)
                    covered.add(value)
        bound = self.bound(rel, signature)
        for t in sorted(chosen):
            trial = frozenset(chosen - {t})
            if self._check(rel, trial, signature).ok:
                chosen.discard(t)
        logger.info(f"Representation of {rel.name}: {len(chosen)} of {len(rel)} tuples, bound {bound}")
        return Representation(base=rel, subset=frozenset(chosen), bound=bound)

    def audit_representation_generates(self, rel: Relation, samples: int = 10, seed: int = 0,
                                       strict: bool = False) -> AuditReport:
        """Random representations, grown from the minimal one, generate rel."""
        report = AuditReport(theorem="representation-generates", seed=seed)
        try:
            rep = self.minimal_representation(rel)
        except HypothesisViolation as e:
            if strict:
                raise
            report.verdict = Verdict.SKIPPED
            report.reason = str(e)
            return report
        rng = np.random.default_rng(seed)
        extra = sorted(rel.tuples - rep.subset)
        candidates = [rep.subset]
        for _ in range(samples):
            if not extra:
                break
            mask = rng.random(len(extra)) < rng.random()
            candidates.append(rep.subset | {t for t, keep in zip(extra, mask) if keep})
        report.check(len(rep) <= rep.bound, "minimal representation exceeds its bound",
                     size=len(rep), bound=rep.bound)
        for subset in candidates:
            ok = self.is_representation(rel, subset).ok
            if not report.check(ok, "sampled superset is not a representation", subset=sorted(subset)):
                continue
            try:
                generated = self.algebras.generate_relation(rel.components, sorted(subset))
            except InconclusiveError as e:
                report.mark_inconclusive(str(e), subset=sorted(subset))
                continue
            report.check(generated.tuples == rel.tuples, "representation does not generate the relation",
                         subset=sorted(subset), generated=len(generated), expected=len(rel))
        return report

    def has_edge_term(self, alg: FiniteAlgebra, k: int = 2) -> TermResult:
        """
        Least j in k..edge_term_cap for which a j-identity edge term exists.

        The found term has arity j+1; the identity count is the result's arity minus one.
        """
        cap = settings.edge_term_cap
        if k < 2 or k > cap:
            raise InputError(f"edge term identities {k} outside 2..{cap}")
        if k + 1 > self.algebras.arity_cap:
            raise InputError(f"edge term arity {k + 1} exceeds the term arity cap {self.algebras.arity_cap}")
        last = TermResult(status=SearchStatus.ABSENT, arity=k + 1)
        for j in range(k, min(cap, self.algebras.arity_cap - 1) + 1):
            result = self.algebras.term_exists(alg, j + 1, edge_term_spec(alg.size, j))
            if result.found:
                logger.debug(f"{alg.name}: edge term with {j} identities: {result.witness}")
                return result
            last = result
        return last


# Global service instance
subpower_service = SubpowerService()


def signature_of(rel: Relation) -> Signature:
    """Convenience function for the signature of a relation."""
    return subpower_service.signature_of(rel)


def is_representation(rel: Relation, subset: Iterable[tuple[int, ...]]) -> RepresentationCheck:
    return subpower_service.is_representation(rel, subset)


def minimal_representation(rel: Relation) -> Representation:
    return subpower_service.minimal_representation(rel)


def audit_representation_generates(rel: Relation, samples: int = 10, seed: int = 0,
                                   strict: bool = False) -> AuditReport:
    return subpower_service.audit_representation_generates(rel, samples, seed, strict)


def has_edge_term(alg: FiniteAlgebra, k: int = 2) -> TermResult:
    return subpower_service.has_edge_term(alg, k)
