"""
Structural audits: statements about edges, paths and relations of smooth
algebras run as falsifiable checks on concrete algebras and relations.

Every audit returns an AuditReport. An input that misses a hypothesis gives a
skipped report, or raises HypothesisViolation when strict is set.
"""

import logging
from itertools import combinations, permutations
from itertools import product as cartesian
from math import prod
from typing import Callable, Iterable, Optional, Sequence

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from ..config import settings
from ..exceptions import HypothesisViolation, InconclusiveError, InputError
from ..models import (
    SELECTOR_TAGS,
    AlmostTrivialDecomposition,
    ArcSet,
    AuditReport,
    ClassMember,
    Congruence,
    EdgeType,
    FiniteAlgebra,
    Relation,
    Verdict,
)
from .algebra import AlgebraService, algebra_service
from .catalog import ALGEBRAS, MAJ2, SEMI2, AFF2, RPS3, disequality, full_relation, identity_graph, parity_relation
from .edges import EdgeGraphService, edge_service, majority_spec, maltsev_spec
from .generator import GeneratorService, generator_service, spawn
from .subpower import SubpowerService, edge_term_spec, subpower_service

logger = logging.getLogger(__name__)

CORPUS_AUDITS = ("type-preservation",)
ALGEBRA_AUDITS = (
    "connectivity", "semilattice-free", "maltsev-structure", "undirected-majority", "edge-term",
    "thin-thick-colors", "thin-lifting", "quotient-edge", "priority", "thin-soundness",
)
RELATION_AUDITS = ("path-extension", "rectangularity", "quasi-2-decomp", "almost-trivial", "representation-generates")
AUDIT_IDS = tuple(sorted(CORPUS_AUDITS + ALGEBRA_AUDITS + RELATION_AUDITS))

_FORBIDDEN = {
    "no-unary-edges": EdgeType.UNARY,
    "affine-free": EdgeType.AFFINE,
    "majority-free": EdgeType.MAJORITY,
    "semilattice-free": EdgeType.SEMILATTICE,
}


def _labels(types: Iterable[EdgeType]) -> list[str]:
    return sorted((t.value for t in types), key="smau".index)


class AuditService:
    """Service class for the audits."""

    def __init__(
        self,
        algebras: Optional[AlgebraService] = None,
        edges: Optional[EdgeGraphService] = None,
        subpowers: Optional[SubpowerService] = None,
        generator: Optional[GeneratorService] = None,
    ):
        self.algebras = algebras or algebra_service
        self.edges = edges or edge_service
        self.subpowers = subpowers or subpower_service
        self.generator = generator or generator_service
        self._algebra_audits: dict[str, Callable[..., AuditReport]] = {
            "connectivity": self.audit_connectivity,
            "semilattice-free": self.audit_semilattice_free,
            "maltsev-structure": self.audit_maltsev_structure,
            "undirected-majority": self.audit_undirected_majority,
            "edge-term": self.audit_edge_term,
            "thin-thick-colors": self.audit_thin_thick_colors,
            "thin-lifting": self.audit_thin_lifting,
            "quotient-edge": self.audit_quotient_edge,
            "priority": self.audit_priority,
            "thin-soundness": self.audit_thin_soundness,
        }
        self._relation_audits: dict[str, Callable[..., AuditReport]] = {
            "path-extension": self.audit_path_extension,
            "rectangularity": self.audit_rectangularity,
            "quasi-2-decomp": self.audit_quasi_2_decomp,
            "almost-trivial": self.audit_almost_trivial,
            "representation-generates": self.audit_representation_generates,
        }

    # ------------------------------------------------------------------
    # Hypotheses

    @staticmethod
    def _skip(report: AuditReport, hypothesis: str, detail: str, strict: bool, **data) -> bool:
        if strict:
            raise HypothesisViolation(hypothesis, detail, witness=data or None)
        logger.warning(f"{report.theorem}: skipped, {hypothesis}: {detail}")
        report.verdict = Verdict.SKIPPED
        report.reason = f"{hypothesis}: {detail}"
        return False

    def _gate(self, report: AuditReport, algs: Iterable[FiniteAlgebra], hypotheses: Sequence[str],
              strict: bool) -> bool:
        """True when every algebra meets every hypothesis; otherwise the report is skipped or marked."""
        for alg in dict.fromkeys(algs):
            profile = self.edges.edge_profile(alg)
            if profile.inconclusive:
                report.mark_inconclusive(f"edge types of {alg.name} are inconclusive", algebra=alg.name)
                return False
            for hypothesis in hypotheses:
                if hypothesis == "smooth":
                    if not profile.smooth:
                        return self._skip(report, hypothesis, f"{alg.name} is not smooth", strict,
                                          edge=profile.offending.describe())
                elif profile.has(_FORBIDDEN[hypothesis]):
                    return self._skip(report, hypothesis,
                                      f"{alg.name} has a {_FORBIDDEN[hypothesis].label} edge", strict,
                                      algebra=alg.name)
        return True

    def _gate_relation(self, report: AuditReport, rel: Relation, strict: bool,
                       hypotheses: Sequence[str] = ("smooth", "no-unary-edges")) -> Optional[Relation]:
        """The relation flagged invariant when it is a nonempty invariant subdirect product meeting the hypotheses."""
        if not rel.tuples:
            self._skip(report, "nonempty", f"{rel.name} is empty", strict)
            return None
        if not self.algebras.is_subdirect(rel):
            self._skip(report, "subdirect", f"{rel.name} is not subdirect", strict)
            return None
        if not rel.invariant:
            try:
                invariant = self.algebras.is_invariant(rel)
            except InconclusiveError as e:
                report.mark_inconclusive(str(e), relation=rel.name)
                return None
            if not invariant:
                self._skip(report, "invariant", f"{rel.name} is not closed under the operations", strict)
                return None
        if not self._gate(report, rel.components, hypotheses, strict):
            return None
        return rel if rel.invariant else rel.model_copy(update={"invariant": True})

    def _arcs(self, report: AuditReport, alg: FiniteAlgebra, member: Optional[ClassMember] = None,
              kinds: Sequence[str] = ("s", "m", "a")) -> Optional[dict[str, ArcSet]]:
        arcs = self.edges.thin_arcs(alg, member, kinds)
        capped = [k for k, s in arcs.items() if s.inconclusive]
        if capped:
            report.mark_inconclusive(f"thin {'/'.join(capped)} arcs of {alg.name} hit a cap", algebra=alg.name)
            return None
        return arcs

    # ------------------------------------------------------------------
    # Corpus audit

    def audit_type_preservation(self, corpus: Sequence[FiniteAlgebra], samples: int = 5, seed: int = 0,
                                strict: bool = False, max_product: int = 9) -> AuditReport:
        """
        Subalgebras, quotients and sampled binary products of members carry only
        edge types of the algebras they come from.

        Args:
            corpus: smooth algebras without unary edges
            samples: number of sampled binary products
            seed: seed of the product sampler
            strict: raise on a violated hypothesis
            max_product: largest product size classified
        """
        reports = []
        pool: list[tuple[frozenset[EdgeType], FiniteAlgebra]] = []
        for alg in corpus:
            report = AuditReport(theorem="type-preservation", seed=seed)
            reports.append(report)
            if not self._gate(report, [alg], ("smooth", "no-unary-edges"), strict):
                continue
            allowed = self.edges.edge_types(alg)
            if alg.size > 1:
                pool.append((allowed, alg))
            for member in self.edges.class_members(alg):
                if member.is_base or member.algebra.size == 1:
                    continue
                profile = self.edges.edge_profile(member.algebra)
                if profile.inconclusive:
                    report.mark_inconclusive("member classification is inconclusive", algebra=alg.name,
                                             subuniverse=list(member.subuniverse))
                    continue
                report.check(profile.types <= allowed, "a subalgebra or quotient has a type outside T",
                             algebra=alg.name, subuniverse=list(member.subuniverse),
                             theta=[list(b) for b in member.theta.blocks()],
                             types=_labels(profile.types), allowed=_labels(allowed))
                pool.append((allowed, member.algebra))

        products = AuditReport(theorem="type-preservation", seed=seed)
        pairs = [(i, j) for i, j in combinations(range(len(pool)), 2)
                 if pool[i][1].similar(pool[j][1]) and pool[i][1].size * pool[j][1].size <= max_product]
        rng = np.random.default_rng(seed)
        for _ in range(samples if pairs else 0):
            i, j = pairs[int(rng.integers(len(pairs)))]
            (t1, a1), (t2, a2) = pool[i], pool[j]
            product = self.algebras.product([a1, a2])
            profile = self.edges.edge_profile(product)
            if profile.inconclusive:
                products.mark_inconclusive("product classification is inconclusive", factors=[a1.name, a2.name])
                continue
            products.check(profile.types <= t1 | t2, "a product has a type outside T",
                           factors=[a1.name, a2.name], types=_labels(profile.types), allowed=_labels(t1 | t2))
        if products.cases:
            reports.append(products)
        return AuditReport.merged("type-preservation", reports, seed)

    # ------------------------------------------------------------------
    # Algebra audits

    def audit_connectivity(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """All elements are connected in G_asm; maximal and as-maximal elements by directed paths."""
        report = AuditReport(theorem="connectivity")
        if not self._gate(report, [alg], ("smooth", "no-unary-edges"), strict):
            return report
        if self._arcs(report, alg) is None:
            return report
        tags = ("s", "a", "m")
        for a, b in combinations(range(alg.size), 2):
            report.check(self.edges.find_path(alg, a, b, tags, directed=False) is not None,
                         "elements are not connected in the asm graph", algebra=alg.name, pair=[a, b])
        view = self.edges.component_view(alg, "as")
        for name, chosen in (("max", view.max_set), ("amax", view.amax_set)):
            for a, b in permutations(sorted(chosen), 2):
                report.check(self.edges.find_path(alg, a, b, tags) is not None,
                             f"no directed asm path between {name} elements", algebra=alg.name, pair=[a, b])
        return report

    def audit_semilattice_free(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """Without semilattice edges every ordered pair is joined by a directed affine/majority path."""
        report = AuditReport(theorem="semilattice-free")
        if not self._gate(report, [alg], ("semilattice-free", "smooth", "no-unary-edges"), strict):
            return report
        if self._arcs(report, alg, kinds=("m", "a")) is None:
            return report
        for a, b in permutations(range(alg.size), 2):
            path = self.edges.find_path(alg, a, b, ("a", "m"))
            report.check(path is not None, "no directed path of thin affine and majority arcs",
                         algebra=alg.name, pair=[a, b])
        self._edge_term_part(report, alg)
        return report

    def audit_edge_term(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """A semilattice-free algebra has an edge term within the identity cap."""
        report = AuditReport(theorem="edge-term")
        if self._gate(report, [alg], ("semilattice-free",), strict):
            self._edge_term_part(report, alg)
        return report

    def _edge_term_part(self, report: AuditReport, alg: FiniteAlgebra) -> None:
        result = self.subpowers.has_edge_term(alg, 2)
        if result.inconclusive:
            report.mark_inconclusive("edge term search hit a cap", algebra=alg.name, cap=result.cap)
            return
        if not report.check(result.found, "no edge term within the identity cap", algebra=alg.name,
                            cap=settings.edge_term_cap):
            return
        identities = result.arity - 1
        if result.witness is None:
            return
        for row, expected in edge_term_spec(alg.size, identities):
            observed = result.witness.evaluate(alg, row)
            if observed != expected:
                report.check(False, "edge term witness does not replay", algebra=alg.name,
                             term=str(result.witness), row=list(row), expected=expected, observed=observed)
                return
        report.confirm(f"edge term with {identities} identities: {result.witness}", algebra=alg.name)

    def swap_subalgebra(self, alg: FiniteAlgebra, a: int, b: int) -> tuple[Relation, FiniteAlgebra]:
        """Sg{(a,b),(b,a)} in alg^2, as a relation and as an algebra."""
        rel = self.algebras.generate_relation([alg, alg], [(a, b), (b, a)], name=f"Sw{a}_{b}")
        return rel, self.algebras.relation_algebra(rel)

    def double_swap(self, alg: FiniteAlgebra, a: int, b: int) -> tuple[int, int]:
        """
        A pair (c, d) above (a, b) that is maximal in Sg{(c,d),(d,c)}.

        Raises:
            InconclusiveError: a generated subalgebra or its semilattice arcs hit a cap
        """
        current = (a, b)
        for _ in range(alg.size ** 2 + 1):
            rel, swapped = self.swap_subalgebra(alg, *current)
            arcs = self.edges.thin_semilattice_arcs(swapped)
            if arcs.inconclusive:
                raise InconclusiveError(f"semilattice arcs of {swapped.name} hit a cap", cap=arcs.cap)
            maximal = self.edges.component_view(swapped, "s").max_set
            index = rel.sorted_tuples.index(current)
            if index in maximal:
                return current
            graph = self.edges.digraph(swapped.size, [arcs])
            above = sorted(nx.descendants(graph, index) & maximal)
            current = rel.sorted_tuples[above[0]]
            logger.debug(f"double swap on {alg.name}: moved to {current} in a subalgebra of size {swapped.size}")
        raise InconclusiveError(f"double swap from {(a, b)} did not settle")

    def _swap_position(self, alg: FiniteAlgebra, a: int, b: int, selector: str) -> Optional[bool]:
        """Whether (a,b) is maximal (selector s) or as-maximal (selector as) in Sg{(a,b),(b,a)}."""
        rel, swapped = self.swap_subalgebra(alg, a, b)
        view = self.edges.component_view(swapped, "as")
        index = rel.sorted_tuples.index((a, b))
        if selector == "s":
            return index in view.max_set
        return None if view.amax_set is None else index in view.amax_set

    def _term_on_pair(self, report: AuditReport, alg: FiniteAlgebra, a: int, b: int, kind: str) -> bool:
        """A Mal'tsev (kind a) or majority (kind m) term on {a,b}; cap hits are recorded and count as absent."""
        if kind == "a":
            result = self.edges.maltsev_edge(alg, a, b)
        else:
            result = self.edges.undirected_majority_edge(alg, a, b)
        if result.inconclusive:
            report.mark_inconclusive("term search on a pair hit a cap", algebra=alg.name, pair=[a, b])
        return result.found

    def _special_edges(self, report: AuditReport, alg: FiniteAlgebra, kind: str) -> list[tuple[int, int]]:
        """
        Checks shared by the Mal'tsev and majority audits: maximal components and
        thick edges of the given type contain special pairs, double swap stays in the
        components, and swap-maximal pairs between components are special.
        """
        name = "Mal'tsev" if kind == "a" else "undirected majority"
        selector = "as" if kind == "a" else "s"
        maximal = self.edges.component_view(alg, "s").maximal_components
        blocks = [(c1, c2, "maximal components") for c1, c2 in combinations(maximal, 2)]
        edge_type = EdgeType.AFFINE if kind == "a" else EdgeType.MAJORITY
        for w in self.edges.thick_graph(alg).thick:
            if w.type is edge_type:
                blocks.append((w.block_of(w.pair[0]), w.block_of(w.pair[1]), "blocks of a thick edge"))
        special = []
        for first, second, where in blocks:
            found = [(a, b) for a in first for b in second if self._term_on_pair(report, alg, a, b, kind)]
            report.check(bool(found), f"no {name} edge between {where}", algebra=alg.name,
                         first=list(first), second=list(second))
            special.extend(found)
            if where != "maximal components":
                continue
            try:
                c, d = self.double_swap(alg, first[0], second[0])
            except InconclusiveError as e:
                report.mark_inconclusive(str(e), algebra=alg.name)
                continue
            report.check(c in first and d in second, "double swap left the maximal components",
                         algebra=alg.name, start=[first[0], second[0]], reached=[c, d])
            for a in first:
                for b in second:
                    try:
                        position = self._swap_position(alg, a, b, selector)
                    except InconclusiveError as e:
                        report.mark_inconclusive(str(e), algebra=alg.name, pair=[a, b])
                        continue
                    if position is None:
                        report.mark_inconclusive("affine arcs of a swap subalgebra hit a cap", pair=[a, b])
                    elif position:
                        report.check(self._term_on_pair(report, alg, a, b, kind),
                                     f"a swap-maximal pair is not a {name} edge", algebra=alg.name, pair=[a, b])
        return special

    def audit_maltsev_structure(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """Mal'tsev edges between maximal components and inside affine edges of a majority-free smooth algebra."""
        report = AuditReport(theorem="maltsev-structure")
        if not self._gate(report, [alg], ("majority-free", "smooth", "no-unary-edges"), strict):
            return report
        view = self.edges.component_view(alg, "as")
        if view.inconclusive:
            report.mark_inconclusive("thin affine arcs hit a cap", algebra=alg.name)
            return report
        report.check(view.max_set <= view.amax_set, "a maximal element is not as-maximal", algebra=alg.name,
                     max=sorted(view.max_set), amax=sorted(view.amax_set))
        report.check(len(view.maximal_components) == 1, "as-maximal elements form several components",
                     algebra=alg.name, components=[list(c) for c in view.maximal_components])

        special = self._special_edges(report, alg, "a")
        if special:
            spec = {}
            for a, b in special:
                spec.update(dict(maltsev_spec(a, b)))
            uniform = self.algebras.term_exists(alg, 3, sorted(spec.items()))
            if uniform.inconclusive:
                report.mark_inconclusive("uniform Mal'tsev search hit a cap", algebra=alg.name)
            elif report.check(uniform.found, "no single term is Mal'tsev on all collected edges",
                              algebra=alg.name, edges=sorted(special)):
                report.confirm(f"uniform Mal'tsev term {uniform.witness}", algebra=alg.name)

        if self.edges.edge_types(alg) == {EdgeType.AFFINE}:
            spec = [(row, x) for x in range(alg.size) for y in range(alg.size) if x != y
                    for row in ((x, y, y), (y, y, x))]
            maltsev = self.algebras.term_exists(alg, 3, spec)
            if maltsev.inconclusive:
                report.mark_inconclusive("global Mal'tsev search hit a cap", algebra=alg.name)
            elif report.check(maltsev.found, "an affine-only algebra has no Mal'tsev term", algebra=alg.name):
                report.confirm(f"Mal'tsev term {maltsev.witness}", algebra=alg.name)
        return report

    def audit_undirected_majority(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """Undirected majority edges between maximal components, and paths with at most one of them."""
        report = AuditReport(theorem="undirected-majority")
        if not self._gate(report, [alg], ("affine-free", "smooth", "no-unary-edges"), strict):
            return report
        self._special_edges(report, alg, "m")

        arcs = self._arcs(report, alg, kinds=("s",))
        if arcs is None:
            return report
        maximal = sorted(self.edges.component_view(alg, "s").max_set)
        graph = nx.DiGraph()
        graph.add_nodes_from((x, used) for x in maximal for used in (0, 1))
        for a, b in arcs["s"].arcs:
            if a in maximal and b in maximal:
                graph.add_edges_from((((a, used), (b, used)) for used in (0, 1)))
        for a, b in combinations(maximal, 2):
            if self._term_on_pair(report, alg, a, b, "m"):
                graph.add_edges_from((((a, 0), (b, 1)), ((b, 0), (a, 1))))
        for a in maximal:
            reached = {x for x, _ in nx.descendants(graph, (a, 0))}
            for b in maximal:
                if b != a:
                    report.check(b in reached, "maximal elements need more than one majority edge",
                                 algebra=alg.name, pair=[a, b])
        return report

    def audit_thin_thick_colors(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """The class of alg has a thin arc of a type iff it has a thick edge of that type."""
        report = AuditReport(theorem="thin-thick-colors")
        if not self._gate(report, [alg], ("smooth", "no-unary-edges"), strict):
            return report
        thin, thick = set(), set()
        for member in self.edges.class_members(alg):
            if member.algebra.size == 1:
                continue
            profile = self.edges.edge_profile(member.algebra)
            if profile.inconclusive:
                report.mark_inconclusive("member classification is inconclusive", algebra=alg.name)
                return report
            if not profile.smooth:
                self._skip(report, "smooth", f"a member of the class of {alg.name} is not smooth", strict,
                           subuniverse=list(member.subuniverse))
                return report
            thick |= {t.value for t in profile.types if t is not EdgeType.UNARY}
            arcs = self._arcs(report, alg, member)
            if arcs is None:
                return report
            thin |= {kind for kind, arcset in arcs.items() if arcset.arcs}
        for kind in ("s", "m", "a"):
            report.check((kind in thin) == (kind in thick), f"thin and thick {EdgeType(kind).label} edges disagree",
                         algebra=alg.name, thin=sorted(thin), thick=sorted(thick))
        return report

    def audit_thin_lifting(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """Every element of the lower block of a thick edge starts a thin arc of its type into the other block."""
        report = AuditReport(theorem="thin-lifting")
        if not self._gate(report, [alg], ("smooth", "no-unary-edges"), strict):
            return report
        arcs = self._arcs(report, alg)
        if arcs is None:
            return report
        for w in self.edges.thick_graph(alg).thick:
            if w.type is None or w.type is EdgeType.UNARY:
                continue
            a, b = w.pair
            first, second = w.block_of(a), w.block_of(b)
            if w.type is EdgeType.SEMILATTICE:
                top = w.block_of(w.witness.evaluate(alg, (a, b)))
                orientations = [(second, first)] if top == first else [(first, second)]
            else:
                orientations = [(first, second), (second, first)]
            kind = w.type.value
            for source, target in orientations:
                for c in source:
                    report.check(any((c, d) in arcs[kind].arcs for d in target),
                                 "a thick edge does not lift to a thin arc", algebra=alg.name, pair=[a, b],
                                 type=kind, source=c, target_block=list(target))
        return report

    def audit_quotient_edge(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """Thin arcs between different blocks map to thin arcs of the same type in the quotient."""
        report = AuditReport(theorem="quotient-edge")
        if not self._gate(report, [alg], ("smooth", "no-unary-edges"), strict):
            return report
        arcs = self._arcs(report, alg)
        if arcs is None:
            return report
        for theta in self.algebras.all_congruences(alg):
            if theta.is_equality() or theta.is_full():
                continue
            member = self.edges.member(alg, None, theta)
            image = self._arcs(report, alg, member)
            if image is None:
                continue
            for kind, arcset in arcs.items():
                for a, b in sorted(arcset.arcs):
                    qa, qb = member.project(a), member.project(b)
                    if qa != qb:
                        report.check((qa, qb) in image[kind].arcs, "a thin arc does not survive the quotient",
                                     algebra=alg.name, arc=[a, b], type=kind,
                                     theta=[list(blk) for blk in theta.blocks()])
        return report

    def audit_priority(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """Each witness has the first type in the order unary, semilattice, majority, affine."""
        report = AuditReport(theorem="priority")
        svc = self.algebras
        for w in self.edges.thick_graph(alg).thick:
            if w.inconclusive:
                report.mark_inconclusive("edge classification hit a cap", algebra=alg.name, pair=list(w.pair))
                continue
            if w.type is None:
                continue
            data = dict(algebra=alg.name, pair=list(w.pair), type=w.type.value if w.type else None)
            sub = svc.subalgebra(alg, w.subuniverse)
            pos = {x: i for i, x in enumerate(w.subuniverse)}
            theta = Congruence.from_blocks(sub.size, [[pos[x] for x in blk] for blk in w.theta_blocks])
            quot = svc.quotient(sub, theta)
            qa, qb = theta.index_map[pos[w.pair[0]]], theta.index_map[pos[w.pair[1]]]
            unary = svc.is_projection_algebra(quot)
            if w.type is EdgeType.UNARY:
                report.check(unary, "unary witness on a quotient with a non-projection operation", **data)
                continue
            if not report.check(not unary, "typed witness on a projection quotient", **data):
                continue
            semilattice = [svc.term_exists(quot, 2, [((o, t), t), ((t, o), t)]) for t, o in ((qb, qa), (qa, qb))]
            if any(r.inconclusive for r in semilattice):
                report.mark_inconclusive("semilattice search hit a cap", **data)
                continue
            has_semilattice = any(r.found for r in semilattice)
            if w.type is EdgeType.SEMILATTICE:
                report.check(has_semilattice, "semilattice witness without a semilattice term", **data)
                continue
            if not report.check(not has_semilattice, "a semilattice term exists on a lower-priority edge", **data):
                continue
            majority = svc.term_exists(quot, 3, majority_spec(qa, qb))
            if majority.inconclusive:
                report.mark_inconclusive("majority search hit a cap", **data)
                continue
            if w.type is EdgeType.MAJORITY:
                report.check(majority.found, "majority witness without a majority term", **data)
                continue
            if not report.check(not majority.found, "a majority term exists on an affine edge", **data):
                continue
            report.check(w.module is not None and svc.affinity_violation(quot, w.module) is None,
                         "affine witness is not a module structure of the quotient", **data)
        return report

    def audit_thin_soundness(self, alg: FiniteAlgebra, strict: bool = False) -> AuditReport:
        """Thin semilattice witnesses replay to f(a,b) = f(b,a) = b."""
        report = AuditReport(theorem="thin-soundness")
        arcs = self.edges.thin_semilattice_arcs(alg)
        if arcs.inconclusive:
            report.mark_inconclusive("thin semilattice arcs hit a cap", algebra=alg.name)
        for a, b in sorted(arcs.arcs):
            term = arcs.witnesses[(a, b)]
            observed = [term.evaluate(alg, (a, b)), term.evaluate(alg, (b, a))]
            report.check(observed == [b, b], "thin semilattice witness does not replay", algebra=alg.name,
                         arc=[a, b], term=str(term), observed=observed)
        return report

    # ------------------------------------------------------------------
    # Relation audits

    def audit_path_extension(self, rel: Relation, samples: int = 10, seed: int = 0,
                             strict: bool = False) -> AuditReport:
        """Random paths in projections of rel lift to paths in rel from a chosen preimage."""
        report = AuditReport(theorem="path-extension", seed=seed)
        rel = self._gate_relation(report, rel, strict)
        if rel is None:
            return report
        base = self.algebras.relation_algebra(rel)
        tuples = rel.sorted_tuples
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            size = int(rng.integers(1, rel.arity + 1))
            coords = sorted(rng.choice(rel.arity, size=size, replace=False).tolist())
            selector = ("s", "as", "asm")[int(rng.integers(3))]
            kinds = sorted(SELECTOR_TAGS[selector], key="sma".index)
            labels = [tuple(t[i] for i in coords) for t in tuples]
            member = self.edges.member(base, None, Congruence.from_labels(labels))
            local = self._arcs(report, base, member, kinds)
            full = self._arcs(report, base, None, kinds)
            if local is None or full is None:
                continue
            successors: dict[int, set[int]] = {}
            for arcset in local.values():
                for a, b in arcset.arcs:
                    successors.setdefault(a, set()).add(b)
            start = int(rng.integers(base.size))
            walk = [member.project(start)]
            for _ in range(int(rng.integers(1, 4))):
                ahead = sorted(successors.get(walk[-1], ()))
                if not ahead:
                    break
                walk.append(ahead[int(rng.integers(len(ahead)))])
            reached = nx.descendants(self.edges.digraph(base.size, full.values()), start) | {start}
            report.check(any(member.project(c) == walk[-1] for c in reached),
                         "a path in the projection does not lift", relation=rel.name, coordinates=coords,
                         selector=selector, start=list(tuples[start]),
                         path=[list(labels[member.lift[x]]) for x in walk])
        return report

    def _maximal_as_components(self, report: AuditReport, alg: FiniteAlgebra,
                               block: Sequence[int]) -> Optional[list[frozenset[int]]]:
        member = self.edges.member(alg, block)
        view = self.edges.component_view(alg, "as", member)
        if view.inconclusive:
            report.mark_inconclusive("thin arcs of a link block hit a cap", algebra=alg.name, block=list(block))
            return None
        return [frozenset(member.subuniverse[x] for x in comp) for comp in view.maximal_components]

    def audit_rectangularity(self, rel: Relation, samples: int = 10, seed: int = 0,
                             strict: bool = False) -> AuditReport:
        """
        On every coordinate pair: maximal as-components of link blocks that meet
        the projection span a box inside it, and thin-arc configurations close up.
        """
        report = AuditReport(theorem="rectangularity", seed=seed)
        rel = self._gate_relation(report, rel, strict)
        if rel is None:
            return report
        for i, j in combinations(range(rel.arity), 2):
            pair = self.algebras.project(rel, [i, j])
            self._box_part(report, pair)
            self._configuration_part(report, pair)
        return report

    def _box_part(self, report: AuditReport, pair: Relation) -> None:
        sides = []
        for k, alg in enumerate(pair.components):
            components = []
            for block in self.algebras.link_congruence(pair, k).blocks():
                found = self._maximal_as_components(report, alg, block)
                if found is None:
                    return
                components.extend(found)
            sides.append(components)
        for first in sides[0]:
            for second in sides[1]:
                box = set(cartesian(sorted(first), sorted(second)))
                if box & pair.tuples:
                    missing = sorted(box - pair.tuples)
                    report.check(not missing, "as-components meeting the relation do not span a box",
                                 relation=pair.name, first=sorted(first), second=sorted(second), missing=missing)

    def _configuration_part(self, report: AuditReport, pair: Relation) -> None:
        first = self._arcs(report, pair.components[0])
        second = self._arcs(report, pair.components[1], kinds=("s", "a"))
        if first is None or second is None:
            return
        left = {}
        for arcset in first.values():
            for a, b in arcset.arcs:
                left.setdefault(a, set()).add(b)
        right = {}
        for arcset in second.values():
            for c, d in arcset.arcs:
                right.setdefault(c, set()).add(d)
        for a, c in pair.sorted_tuples:
            for b in sorted(left.get(a, ())):
                if (b, c) not in pair.tuples:
                    continue
                for d in sorted(right.get(c, ())):
                    if (a, d) in pair.tuples:
                        report.check((b, d) in pair.tuples, "a thin-arc configuration does not close",
                                     relation=pair.name, a=a, b=b, c=c, d=d)

    def audit_quasi_2_decomp(self, rel: Relation, samples: int = 10, seed: int = 0,
                             strict: bool = False) -> AuditReport:
        """
        Tuples whose pair projections are as-maximal are matched by a tuple of rel
        in the same as-components; sampled coordinate sets are matched exactly.
        """
        report = AuditReport(theorem="quasi-2-decomp", seed=seed)
        rel = self._gate_relation(report, rel, strict)
        if rel is None:
            return report
        n = rel.arity
        if prod(c.size for c in rel.components) > settings.relation_cap:
            report.mark_inconclusive("candidate tuples exceed the relation cap", relation=rel.name)
            return report
        pairs = list(combinations(range(n), 2))
        amax, component = {}, {}
        for i, j in pairs:
            found = self._as_maximal_projection(report, rel, [i, j])
            if found is None:
                return report
            amax[(i, j)], component[(i, j)] = found

        def matches(a, b) -> bool:
            return all(component[p][(b[p[0]], b[p[1]])] == component[p][(a[p[0]], a[p[1]])] for p in pairs)

        candidates = [a for a in cartesian(*(range(c.size) for c in rel.components))
                      if all((a[i], a[j]) in amax[(i, j)] for i, j in pairs)]
        for a in candidates:
            report.check(any(matches(a, b) for b in rel.sorted_tuples),
                         "no tuple lies in the as-components of the pair projections",
                         relation=rel.name, tuple=list(a))

        rng = np.random.default_rng(seed)
        for _ in range(samples):
            size = int(rng.integers(1, n + 1))
            coords = sorted(rng.choice(n, size=size, replace=False).tolist())
            found = self._as_maximal_projection(report, rel, coords)
            if found is None:
                continue
            maximal, _ = found
            for a in candidates:
                key = tuple(a[i] for i in coords)
                if key in maximal:
                    report.check(any(matches(a, b) and tuple(b[i] for i in coords) == key for b in rel.sorted_tuples),
                                 "no matching tuple agrees on an as-maximal projection",
                                 relation=rel.name, tuple=list(a), coordinates=coords)
        return report

    def _as_maximal_projection(self, report: AuditReport, rel: Relation, coords: Sequence[int]):
        """as-maximal tuples of pr_coords rel and the as-component of every tuple, or None on a cap."""
        projected = self.algebras.project(rel, coords)
        view = self.edges.component_view(self.algebras.relation_algebra(projected), "as")
        if view.scc_of_as is None:
            report.mark_inconclusive("thin affine arcs of a projection hit a cap", relation=rel.name,
                                     coordinates=list(coords))
            return None
        tuples = projected.sorted_tuples
        return ({tuples[k] for k in view.amax_set}, {t: view.scc_of_as[k] for k, t in enumerate(tuples)})

    def is_almost_trivial(self, rel: Relation) -> Optional[AlmostTrivialDecomposition]:
        """Coordinate classes joined by bijections whose product is rel, if rel has that form."""
        if not rel.tuples or not self.algebras.is_subdirect(rel):
            return None
        sizes = [c.size for c in rel.components]
        classes = UnionFind(range(rel.arity))
        maps = {}
        for i, j in combinations(range(rel.arity), 2):
            pairs = {(t[i], t[j]) for t in rel.tuples}
            if len(pairs) == sizes[i] == sizes[j]:
                forward = dict(pairs)
                classes.union(i, j)
                maps[(i, j)] = tuple(forward[x] for x in range(sizes[i]))
        blocks = sorted(tuple(sorted(c)) for c in classes.to_sets())
        if len(rel.tuples) != prod(sizes[c[0]] for c in blocks):
            return None
        bijections = tuple((c[0], j, maps[(c[0], j)]) for c in blocks for j in c[1:])
        return AlmostTrivialDecomposition(classes=tuple(blocks), bijections=bijections)

    def _generating_maximal(self, alg: FiniteAlgebra) -> frozenset[int]:
        """Union of the maximal components that generate alg."""
        view = self.edges.component_view(alg, "s")
        universe = frozenset(range(alg.size))
        return frozenset(x for comp in view.maximal_components
                         if self.algebras.sg_closure(alg, comp) == universe for x in comp)

    def audit_almost_trivial(self, rel: Relation, samples: int = 10, seed: int = 0,
                             strict: bool = False) -> AuditReport:
        """Subdirect products of simple maximal generated affine-free algebras are almost trivial."""
        report = AuditReport(theorem="almost-trivial", seed=seed)
        rel = self._gate_relation(report, rel, strict, ("affine-free", "smooth", "no-unary-edges"))
        if rel is None:
            return report
        generating = []
        for comp in rel.components:
            if len(self.algebras.all_congruences(comp)) > 2:
                self._skip(report, "simple", f"{comp.name} has a proper nontrivial congruence", strict)
                return report
            found = self._generating_maximal(comp)
            if not found:
                self._skip(report, "maximal-generated", f"no maximal component generates {comp.name}", strict)
                return report
            generating.append(found)
        for i, j in combinations(range(rel.arity), 2):
            if not any(t[i] in generating[i] and t[j] in generating[j] for t in rel.tuples):
                self._skip(report, "maximal-generated",
                           f"no tuple of {rel.name} meets generating maximal components at {i} and {j}", strict)
                return report
        decomposition = self.is_almost_trivial(rel)
        if report.check(decomposition is not None, "relation is not almost trivial", relation=rel.name,
                        tuples=[list(t) for t in rel.sorted_tuples]):
            report.confirm(f"classes {[list(c) for c in decomposition.classes]}", relation=rel.name)
        return report

    def audit_representation_generates(self, rel: Relation, samples: int = 10, seed: int = 0,
                                       strict: bool = False) -> AuditReport:
        return self.subpowers.audit_representation_generates(rel, samples, seed, strict)

    # ------------------------------------------------------------------
    # Running

    def run(self, audit_id: str, algebras: Sequence[FiniteAlgebra] = (), relations: Sequence[Relation] = (),
            samples: int = 10, seed: int = 0, strict: bool = False) -> AuditReport:
        """
        Run one audit over algebras or relations and merge the per-input reports.

        Raises:
            InputError: unknown audit id
            HypothesisViolation: an input misses a hypothesis and strict is set
        """
        if audit_id not in AUDIT_IDS:
            raise InputError(f"unknown audit {audit_id}; known: {', '.join(AUDIT_IDS)}")
        logger.info(f"Running {audit_id} on {len(algebras)} algebras and {len(relations)} relations")
        if audit_id == "type-preservation":
            return self.audit_type_preservation(algebras, samples, seed, strict)
        if audit_id in self._algebra_audits:
            audit = self._algebra_audits[audit_id]
            reports = [audit(alg, strict=strict) for alg in algebras]
        else:
            audit = self._relation_audits[audit_id]
            reports = [audit(rel, samples, seed, strict) for rel in relations]
        return AuditReport.merged(audit_id, reports, seed)

    def corpus(self, seed: int, random_algebras: int = 2) -> tuple[list[FiniteAlgebra], list[Relation]]:
        """The catalog, a product and seeded random members."""
        rngs = spawn(seed, random_algebras + 2)
        algebras = list(ALGEBRAS.values()) + [self.algebras.product([SEMI2, MAJ2])]
        for k in range(random_algebras):
            algebras.append(self.generator.random_algebra(rngs[k], 2, filters=("no-unary-edges",),
                                                          name=f"RAND{k}"))
        relations = [
            parity_relation(AFF2, 3),
            identity_graph(AFF2),
            full_relation([AFF2, AFF2]),
            disequality(MAJ2),
            full_relation([SEMI2, MAJ2]),
            identity_graph(RPS3),
            full_relation([RPS3, RPS3]),
            self.generator.random_subdirect_relation(rngs[-2], [MAJ2] * 3, 2, name="RMAJ"),
            self.generator.random_subdirect_relation(rngs[-1], [AFF2] * 3, 2, name="RAFF"),
        ]
        return algebras, relations

    def audit_all(self, samples: int = 10, seed: int = 0, random_algebras: int = 2) -> list[AuditReport]:
        """Every audit over the corpus, sorted by audit id."""
        algebras, relations = self.corpus(seed, random_algebras)
        reports = [self.run(audit_id, algebras, relations, samples, seed) for audit_id in AUDIT_IDS]
        return sorted(reports, key=lambda r: r.theorem)


# Global service instance
audit_service = AuditService()


def run_audit(audit_id: str, algebras: Sequence[FiniteAlgebra] = (), relations: Sequence[Relation] = (),
              samples: int = 10, seed: int = 0, strict: bool = False) -> AuditReport:
    """Convenience function for running one audit."""
    return audit_service.run(audit_id, algebras, relations, samples, seed, strict)


def audit_all(samples: int = 10, seed: int = 0, random_algebras: int = 2) -> list[AuditReport]:
    return audit_service.audit_all(samples, seed, random_algebras)


def is_almost_trivial(rel: Relation) -> Optional[AlmostTrivialDecomposition]:
    return audit_service.is_almost_trivial(rel)
