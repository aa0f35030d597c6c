"""
Edge classification and coloured graphs of finite idempotent algebras.

Thick edges come from maximal congruences of 2-generated subalgebras. Thin
arcs are element-level edges; majority and affine arcs are defined through
the ternary term operations satisfying the majority or minority condition
for the class of subalgebras and quotients of a base algebra.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from itertools import product as cartesian
from typing import Iterable, Literal, Optional, Sequence, Union

import networkx as nx
import numpy as np

from ..exceptions import InputError, NoConformingOperation
from ..models import (
    SELECTOR_TAGS,
    ArcSet,
    ClassMember,
    ComponentView,
    Congruence,
    EdgeProfile,
    EdgeType,
    EdgeWitness,
    FiniteAlgebra,
    SearchStatus,
    Selector,
    TermResult,
    ThinArc,
    TypedGraph,
)
from .algebra import AlgebraService, algebra_service
from .closure import table_array

logger = logging.getLogger(__name__)

ConditionKind = Literal["majority", "minority"]


def majority_spec(a: int, b: int) -> list[tuple[tuple[int, int, int], int]]:
    """Requirements for a ternary term to be a majority operation on {a, b}."""
    return [
        ((a, a, b), a), ((a, b, a), a), ((b, a, a), a),
        ((b, b, a), b), ((b, a, b), b), ((a, b, b), b),
    ]


def maltsev_spec(a: int, b: int) -> list[tuple[tuple[int, int, int], int]]:
    return [((a, b, b), a), ((b, a, a), b), ((a, a, b), b), ((b, b, a), a)]


@dataclass
class ConditionOps:
    """Ternary clone members satisfying a condition, one table per class algebra, in discovery order."""

    kind: str
    tables: list[list[np.ndarray]] = field(default_factory=list)
    inconclusive: bool = False
    cap: Optional[str] = None

    def __len__(self) -> int:
        return len(self.tables)


class EdgeGraphService:
    """Service class for edge-graph computations. Memo tables are write-once."""

    def __init__(self, algebras: Optional[AlgebraService] = None):
        self.algebras = algebras or algebra_service
        self._pairs: dict[tuple[FiniteAlgebra, int, int], tuple[EdgeWitness, ...]] = {}
        self._profiles: dict[FiniteAlgebra, EdgeProfile] = {}
        self._semilattice: dict[FiniteAlgebra, ArcSet] = {}
        self._conditions: dict[tuple[tuple[FiniteAlgebra, ...], str], ConditionOps] = {}
        self._thin: dict[tuple[FiniteAlgebra, Optional[ClassMember], str], ArcSet] = {}

    def clear(self) -> None:
        """Drop memo tables after the caps changed."""
        for cache in (self._pairs, self._profiles, self._semilattice, self._conditions, self._thin):
            cache.clear()

    # ------------------------------------------------------------------
    # Thick edges

    def classify_pair(self, alg: FiniteAlgebra, a: int, b: int) -> tuple[EdgeWitness, ...]:
        """One witness per maximal congruence of Sg{a,b} that yields a type."""
        if a == b:
            raise InputError("classify_pair needs distinct elements")
        if not (0 <= a < alg.size and 0 <= b < alg.size):
            raise InputError(f"pair {(a, b)} out of range for {alg.name}")
        key = (alg, a, b)
        if key in self._pairs:
            return self._pairs[key]
        svc = self.algebras
        elements = sorted(svc.sg_closure(alg, {a, b}))
        sub = svc.subalgebra(alg, elements)
        pos = {x: i for i, x in enumerate(elements)}
        witnesses = []
        for theta in svc.all_maximal_congruences(sub):
            quot = svc.quotient(sub, theta)
            qa, qb = theta.index_map[pos[a]], theta.index_map[pos[b]]
            common = dict(
                pair=(a, b),
                subuniverse=tuple(elements),
                theta_blocks=tuple(tuple(elements[i] for i in blk) for blk in theta.blocks()),
            )
            witness = self._classify_quotient(quot, qa, qb, common)
            if witness is not None:
                witnesses.append(witness)
        result = tuple(witnesses)
        self._pairs[key] = result
        return result

    def _classify_quotient(self, quot: FiniteAlgebra, qa: int, qb: int, common: dict) -> Optional[EdgeWitness]:
        svc = self.algebras
        if svc.is_projection_algebra(quot):
            return EdgeWitness(type=EdgeType.UNARY, **common)
        capped = None
        for top, other in ((qb, qa), (qa, qb)):
            found = svc.term_exists(quot, 2, [((other, top), top), ((top, other), top)])
            if found.found:
                return EdgeWitness(type=EdgeType.SEMILATTICE, witness=found.witness, **common)
            capped = capped or found.cap
        if capped:
            return EdgeWitness(inconclusive=True, cap=capped, **common)
        found = svc.term_exists(quot, 3, majority_spec(qa, qb))
        if found.found:
            return EdgeWitness(type=EdgeType.MAJORITY, witness=found.witness, **common)
        if found.inconclusive:
            return EdgeWitness(inconclusive=True, cap=found.cap, **common)
        module = svc.module_structure(quot)
        if module.found:
            return EdgeWitness(type=EdgeType.AFFINE, witness=module.witness, module=module.structure, **common)
        if module.status is SearchStatus.INCONCLUSIVE:
            return EdgeWitness(inconclusive=True, cap=module.cap, **common)
        return None

    def thick_graph(self, alg: FiniteAlgebra) -> TypedGraph:
        """All thick edges of alg."""
        thick = []
        for a, b in combinations(range(alg.size), 2):
            thick.extend(self.classify_pair(alg, a, b))
        return TypedGraph(name=alg.name, size=alg.size, thick=tuple(thick))

    def edge_profile(self, alg: FiniteAlgebra) -> EdgeProfile:
        """Edge types and smoothness."""
        if alg not in self._profiles:
            graph = self.thick_graph(alg)
            offending = None
            for w in graph.thick:
                if w.type in (EdgeType.SEMILATTICE, EdgeType.MAJORITY):
                    union = set(w.block_of(w.pair[0])) | set(w.block_of(w.pair[1]))
                    if self.algebras.sg_closure(alg, union) != frozenset(union):
                        offending = w
                        break
            self._profiles[alg] = EdgeProfile(
                types=graph.types(),
                smooth=offending is None,
                offending=offending,
                inconclusive=any(w.inconclusive for w in graph.thick),
            )
        return self._profiles[alg]

    def edge_types(self, alg: FiniteAlgebra) -> frozenset[EdgeType]:
        return self.edge_profile(alg).types

    def is_smooth(self, alg: FiniteAlgebra) -> tuple[bool, Optional[EdgeWitness]]:
        profile = self.edge_profile(alg)
        return profile.smooth, profile.offending

    # ------------------------------------------------------------------
    # Class members

    def member(self, base: FiniteAlgebra, subuniverse: Optional[Iterable[int]] = None,
               theta: Optional[Congruence] = None) -> ClassMember:
        """The member B/θ of the class of base; defaults give base itself."""
        svc = self.algebras
        elements = tuple(sorted(subuniverse)) if subuniverse is not None else tuple(range(base.size))
        sub = svc.subalgebra(base, elements)
        theta = theta or Congruence.equality(len(elements))
        algebra = sub if theta.is_equality() else svc.quotient(sub, theta)
        leaders = sorted(set(theta.block_of))
        return ClassMember(base=base, subuniverse=elements, theta=theta, algebra=algebra,
                           lift=tuple(elements[i] for i in leaders))

    def subuniverses(self, alg: FiniteAlgebra) -> list[tuple[int, ...]]:
        """All nonempty subuniverses, ordered by size then lexicographically."""
        found = set()
        for r in range(1, alg.size + 1):
            for subset in combinations(range(alg.size), r):
                found.add(tuple(sorted(self.algebras.sg_closure(alg, subset))))
        return sorted(found, key=lambda s: (len(s), s))

    def class_members(self, alg: FiniteAlgebra, quotients: bool = True) -> list[ClassMember]:
        """Subalgebras of alg and all their quotients."""
        members = []
        for elements in self.subuniverses(alg):
            sub = self.algebras.subalgebra(alg, elements)
            thetas = self.algebras.all_congruences(sub) if quotients else (Congruence.equality(len(elements)),)
            for theta in thetas:
                members.append(self.member(alg, elements, theta))
        return members

    def _induced(self, member: Optional[ClassMember], table: np.ndarray) -> np.ndarray:
        """Ternary base operation induced on a member."""
        if member is None or member.is_base:
            return table
        lift = np.asarray(member.lift)
        proj = np.full(member.base.size, -1, dtype=np.int64)
        for i, x in enumerate(member.subuniverse):
            proj[x] = member.theta.index_map[i]
        return proj[table[lift[:, None, None], lift[None, :, None], lift[None, None, :]]]

    # ------------------------------------------------------------------
    # Thin arcs

    def thin_semilattice_arcs(self, alg: FiniteAlgebra) -> ArcSet:
        """a -> b iff some binary term has f(a,b) = f(b,a) = b."""
        if alg not in self._semilattice:
            arcs, witnesses, cap = set(), {}, None
            for a, b in permutations(range(alg.size), 2):
                found = self.algebras.term_exists(alg, 2, [((a, b), b), ((b, a), b)])
                if found.found:
                    arcs.add((a, b))
                    witnesses[(a, b)] = found.witness
                elif found.inconclusive:
                    cap = found.cap
            self._semilattice[alg] = ArcSet(kind="s", arcs=frozenset(arcs), witnesses=witnesses,
                                            inconclusive=cap is not None, cap=cap)
        return self._semilattice[alg]

    def condition_ops(self, algs: Union[FiniteAlgebra, Sequence[FiniteAlgebra]], kind: ConditionKind) -> ConditionOps:
        """Ternary clone members satisfying the majority or minority condition for the class of algs."""
        algs = (algs,) if isinstance(algs, FiniteAlgebra) else tuple(algs)
        key = (algs, kind)
        if key in self._conditions:
            return self._conditions[key]
        columns, inputs = [], []
        for i, alg in enumerate(algs):
            for x, y, z in cartesian(range(alg.size), repeat=3):
                if not x == y == z:
                    columns.append(alg)
                    inputs.append((i, (x, y, z)))
        if not columns:
            ops = ConditionOps(kind=kind, tables=[[np.arange(alg.size).reshape(-1, 1, 1).repeat(alg.size, 1).repeat(alg.size, 2)
                                                   for alg in algs]])
            self._conditions[key] = ops
            return ops
        generators = [[inp[j] for _, inp in inputs] for j in range(3)]
        result = self.algebras.engine.close(columns, generators)
        if result.cap:
            logger.warning(f"{kind} condition operations of {[a.name for a in algs]} are inconclusive")
            ops = ConditionOps(kind=kind, inconclusive=True, cap=result.cap)
            self._conditions[key] = ops
            return ops
        edges = [self._condition_edges(alg, kind) for alg in algs]
        if any(e is None for e in edges):
            ops = ConditionOps(kind=kind, inconclusive=True, cap="classification")
            self._conditions[key] = ops
            return ops
        tables = []
        for row in result.rows:
            member = self._tables_from_row(algs, inputs, row)
            if all(self._satisfies(t, kind, e) for t, e in zip(member, edges)):
                tables.append(member)
        ops = ConditionOps(kind=kind, tables=tables)
        logger.debug(f"{len(tables)} of {result.size} ternary operations meet the {kind} condition")
        self._conditions[key] = ops
        return ops

    @staticmethod
    def _tables_from_row(algs, inputs, row) -> list[np.ndarray]:
        tables = []
        for alg in algs:
            n = alg.size
            t = np.empty((n, n, n), dtype=np.int64)
            for x in range(n):
                t[x, x, x] = x
            tables.append(t)
        for (i, (x, y, z)), v in zip(inputs, row):
            tables[i][x, y, z] = v
        return tables

    def _condition_edges(self, alg: FiniteAlgebra, kind: str):
        """Thick witnesses the condition refers to, as (block labels, a, b); None if unclassifiable."""
        wanted = EdgeType.MAJORITY if kind == "majority" else EdgeType.AFFINE
        profile = self.edge_profile(alg)
        if profile.inconclusive:
            return None
        edges = []
        for w in self.thick_graph(alg).thick:
            if w.type is wanted:
                labels = np.full(alg.size, -1, dtype=np.int64)
                for blk in w.theta_blocks:
                    labels[list(blk)] = blk[0]
                edges.append((labels, w.pair[0], w.pair[1]))
        return edges

    @staticmethod
    def _satisfies(t: np.ndarray, kind: str, edges) -> bool:
        n = t.shape[0]
        xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        mid = t[xs, ys, ys]
        if kind == "majority":
            if not np.array_equal(t[xs, mid, mid], mid):
                return False
            for labels, a, b in edges:
                for x, y in ((a, b), (b, a)):
                    for v in (t[x, x, y], t[x, y, x], t[y, x, x]):
                        if labels[v] != labels[x]:
                            return False
        else:
            if not np.array_equal(t[mid, ys, ys], mid):
                return False
            for labels, a, b in edges:
                for x, y in ((a, b), (b, a)):
                    for v in (t[x, y, y], t[y, y, x]):
                        if labels[v] != labels[x]:
                            return False
        return True

    def _needs_enumeration(self, base: FiniteAlgebra, edge_type: EdgeType) -> bool:
        # Without thick edges of this type the first projection meets the condition and admits no arc.
        profile = self.edge_profile(base)
        return profile.inconclusive or profile.has(edge_type)

    def thin_majority_arcs(self, alg: FiniteAlgebra, member: Optional[ClassMember] = None) -> ArcSet:
        """Arcs a -> b with b in Sg{a, g(a,b,b)}, Sg{a, g(b,a,b)}, Sg{a, g(b,b,a)} for every conforming g."""
        return self._thin_arcs(alg, member, "m")

    def thin_affine_arcs(self, alg: FiniteAlgebra, member: Optional[ClassMember] = None) -> ArcSet:
        """Arcs a -> b with h(b,a,a) = b for the first conforming h and b in Sg{a, h'(a,a,b)} for every h'."""
        return self._thin_arcs(alg, member, "a")

    def _thin_arcs(self, base: FiniteAlgebra, member: Optional[ClassMember], kind: str) -> ArcSet:
        key = (base, member, kind)
        if key in self._thin:
            return self._thin[key]
        edge_type = EdgeType.MAJORITY if kind == "m" else EdgeType.AFFINE
        if not self._needs_enumeration(base, edge_type):
            arcs = ArcSet(kind=kind)
        else:
            ops = self.condition_ops(base, "majority" if kind == "m" else "minority")
            if ops.inconclusive:
                arcs = ArcSet(kind=kind, inconclusive=True, cap=ops.cap)
            elif not ops.tables:
                raise NoConformingOperation(f"no ternary operation of {base.name} meets the "
                                            f"{'majority' if kind == 'm' else 'minority'} condition")
            else:
                arcs = self._arcs_from_ops(base, member, kind, ops)
        self._thin[key] = arcs
        return arcs

    def _arcs_from_ops(self, base, member, kind, ops: ConditionOps) -> ArcSet:
        target = member.algebra if member is not None else base
        induced = [self._induced(member, tables[0]) for tables in ops.tables]
        first = induced[0]
        distinct, seen = [], set()
        for t in induced:
            key = t.tobytes()
            if key not in seen:
                seen.add(key)
                distinct.append(t)
        sg = self.algebras.sg_closure
        arcs = set()
        for a, b in permutations(range(target.size), 2):
            if kind == "m":
                values = {int(v) for t in distinct for v in (t[a, b, b], t[b, a, b], t[b, b, a])}
            else:
                if first[b, a, a] != b:
                    continue
                values = {int(t[a, a, b]) for t in distinct}
            if all(b in sg(target, {a, c}) for c in values):
                arcs.add((a, b))
        return ArcSet(kind=kind, arcs=frozenset(arcs))

    def thin_arcs(self, alg: FiniteAlgebra, member: Optional[ClassMember] = None,
                  kinds: Iterable[str] = ("s", "m", "a")) -> dict[str, ArcSet]:
        """Thin arcs of the requested kinds on alg or on a member of its class."""
        target = member.algebra if member is not None else alg
        result = {}
        for kind in kinds:
            if kind == "s":
                result["s"] = self.thin_semilattice_arcs(target)
            else:
                result[kind] = self._thin_arcs(alg, member, kind)
        return result

    def coloured_graph(self, alg: FiniteAlgebra, member: Optional[ClassMember] = None) -> TypedGraph:
        """Thick edges plus all thin arcs."""
        target = member.algebra if member is not None else alg
        arcsets = self.thin_arcs(alg, member)
        tags: dict[tuple[int, int], set[str]] = {}
        for kind, arcset in arcsets.items():
            for arc in arcset.arcs:
                tags.setdefault(arc, set()).add(kind)
        thin = tuple(ThinArc(source=a, target=b, tags=frozenset(t)) for (a, b), t in sorted(tags.items()))
        return TypedGraph(
            name=target.name,
            size=target.size,
            thick=self.thick_graph(target).thick,
            thin=thin,
            inconclusive_tags=frozenset(k for k, s in arcsets.items() if s.inconclusive),
        )

    @staticmethod
    def to_dot(graph: TypedGraph) -> str:
        """DOT text: one undirected edge per thick witness, one directed edge per thin arc and tag."""
        lines = [f'digraph "{graph.name}" {{']
        lines.extend(f"  {x};" for x in range(graph.size))
        for w in graph.thick:
            if w.type is not None:
                a, b = w.pair
                lines.append(f'  {a} -> {b} [dir=none, type="{w.type.value}"];')
        for arc in graph.thin:
            for tag in sorted(arc.tags, key="sma".index):
                lines.append(f'  {arc.source} -> {arc.target} [thin="{tag}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------
    # Components and paths

    @staticmethod
    def digraph(size: int, arcsets: Iterable[ArcSet]) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(size))
        for arcset in arcsets:
            graph.add_edges_from(arcset.arcs)
        return graph

    @staticmethod
    def _components(graph: nx.DiGraph) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...], tuple[tuple[int, ...], ...]]:
        components = sorted((tuple(sorted(c)) for c in nx.strongly_connected_components(graph)), key=lambda c: c[0])
        scc_of = [0] * graph.number_of_nodes()
        for i, comp in enumerate(components):
            for x in comp:
                scc_of[x] = i
        condensed = nx.condensation(graph, scc=[set(c) for c in components])
        maximal = tuple(components[i] for i in sorted(condensed.nodes) if condensed.out_degree(i) == 0)
        return tuple(components), tuple(scc_of), maximal

    def component_view(self, alg: FiniteAlgebra, selector: Selector = "s",
                       member: Optional[ClassMember] = None) -> ComponentView:
        """SCCs of the selected thin graph together with max and amax."""
        if selector not in SELECTOR_TAGS:
            raise InputError(f"unknown selector {selector}")
        target = member.algebra if member is not None else alg
        kinds = ("s", "a") if selector != "asm" else ("s", "a", "m")
        arcsets = self.thin_arcs(alg, member, kinds)
        s_graph = self.digraph(target.size, [arcsets["s"]])
        _, scc_of_s, s_maximal = self._components(s_graph)
        scc_of_as, amax = None, None
        if not arcsets["a"].inconclusive:
            as_graph = self.digraph(target.size, [arcsets["s"], arcsets["a"]])
            _, scc_of_as, as_maximal = self._components(as_graph)
            amax = frozenset(x for comp in as_maximal for x in comp)
        selected = [arcsets[k] for k in SELECTOR_TAGS[selector]]
        components, scc_of, maximal = self._components(self.digraph(target.size, selected))
        return ComponentView(
            selector=selector,
            components=components,
            scc_of=scc_of,
            scc_of_s=scc_of_s,
            scc_of_as=scc_of_as,
            max_set=frozenset(x for comp in s_maximal for x in comp),
            amax_set=amax,
            maximal_components=maximal,
            inconclusive=any(s.inconclusive for s in selected) or amax is None,
        )

    def find_path(self, alg: FiniteAlgebra, a: int, b: int, tags: Iterable[str], directed: bool = True,
                  member: Optional[ClassMember] = None) -> Optional[list[int]]:
        """Shortest path over thin arcs with the allowed tags; [a] when a == b."""
        target = member.algebra if member is not None else alg
        if not (0 <= a < target.size and 0 <= b < target.size):
            raise InputError(f"path endpoints {(a, b)} out of range")
        if a == b:
            return [a]
        graph = self.digraph(target.size, self.thin_arcs(alg, member, sorted(set(tags))).values())
        if not directed:
            graph = graph.to_undirected()
        try:
            return nx.shortest_path(graph, a, b)
        except nx.NetworkXNoPath:
            return None

    # ------------------------------------------------------------------
    # Special edges and good operations

    def maltsev_edge(self, alg: FiniteAlgebra, a: int, b: int) -> TermResult:
        """A term that is Mal'tsev on {a, b}."""
        if a == b:
            raise InputError("maltsev_edge needs distinct elements")
        return self.algebras.term_exists(alg, 3, maltsev_spec(a, b))

    def undirected_majority_edge(self, alg: FiniteAlgebra, a: int, b: int) -> TermResult:
        """A term that is a majority operation on {a, b}."""
        if a == b:
            raise InputError("undirected_majority_edge needs distinct elements")
        return self.algebras.term_exists(alg, 3, majority_spec(a, b))

    def dot_operation(self, algs: Union[FiniteAlgebra, Sequence[FiniteAlgebra]]) -> TermResult:
        """First binary clone member that is semilattice on every thick semilattice edge and moves only up thin arcs."""
        algs = (algs,) if isinstance(algs, FiniteAlgebra) else tuple(algs)
        columns, inputs = [], []
        for i, alg in enumerate(algs):
            for x, y in permutations(range(alg.size), 2):
                columns.append(alg)
                inputs.append((i, x, y))
        if not columns:
            return TermResult(status=SearchStatus.FOUND, arity=2, witness=None, closure_size=0)
        generators = [[x for _, x, _ in inputs], [y for _, _, y in inputs]]
        result = self.algebras.engine.close(columns, generators)
        semilattice_edges = []
        for alg in algs:
            edges = []
            for w in self.thick_graph(alg).thick:
                if w.type is EdgeType.SEMILATTICE:
                    labels = {x: blk[0] for blk in w.theta_blocks for x in blk}
                    edges.append((labels, w.pair[0], w.pair[1]))
            semilattice_edges.append(edges)
        arcs = [self.thin_semilattice_arcs(alg).arcs for alg in algs]
        for r, row in enumerate(result.rows):
            value = {(i, x, y): int(v) for (i, x, y), v in zip(inputs, row)}
            if self._is_dot(algs, value, semilattice_edges, arcs):
                return TermResult(status=SearchStatus.FOUND, arity=2, witness=result.derivation(r),
                                  closure_size=result.size)
        status = SearchStatus.INCONCLUSIVE if result.cap else SearchStatus.ABSENT
        return TermResult(status=status, arity=2, closure_size=result.size, cap=result.cap)

    @staticmethod
    def _is_dot(algs, value, semilattice_edges, arcs) -> bool:
        for i, alg in enumerate(algs):
            def f(x, y):
                return x if x == y else value[(i, x, y)]
            for labels, a, b in semilattice_edges[i]:
                ab, ba = f(a, b), f(b, a)
                if labels[ab] != labels[ba] or labels[ab] not in (labels[a], labels[b]):
                    return False
            for x, y in permutations(range(alg.size), 2):
                v = f(x, y)
                if v != x and (x, v) not in arcs[i]:
                    return False
        return True


# Global service instance
edge_service = EdgeGraphService()


def classify_pair(alg: FiniteAlgebra, a: int, b: int) -> tuple[EdgeWitness, ...]:
    """Convenience function to classify the pair (a, b)."""
    return edge_service.classify_pair(alg, a, b)


def thick_graph(alg: FiniteAlgebra) -> TypedGraph:
    return edge_service.thick_graph(alg)


def edge_profile(alg: FiniteAlgebra) -> EdgeProfile:
    return edge_service.edge_profile(alg)


def is_smooth(alg: FiniteAlgebra) -> tuple[bool, Optional[EdgeWitness]]:
    return edge_service.is_smooth(alg)


def thin_semilattice_arcs(alg: FiniteAlgebra) -> ArcSet:
    return edge_service.thin_semilattice_arcs(alg)


def thin_majority_arcs(alg: FiniteAlgebra, member: Optional[ClassMember] = None) -> ArcSet:
    return edge_service.thin_majority_arcs(alg, member)


def thin_affine_arcs(alg: FiniteAlgebra, member: Optional[ClassMember] = None) -> ArcSet:
    return edge_service.thin_affine_arcs(alg, member)


def condition_ops(algs: Union[FiniteAlgebra, Sequence[FiniteAlgebra]], kind: ConditionKind) -> ConditionOps:
    return edge_service.condition_ops(algs, kind)


def dot_operation(algs: Union[FiniteAlgebra, Sequence[FiniteAlgebra]]) -> TermResult:
    return edge_service.dot_operation(algs)


def coloured_graph(alg: FiniteAlgebra, member: Optional[ClassMember] = None) -> TypedGraph:
    return edge_service.coloured_graph(alg, member)


def component_view(alg: FiniteAlgebra, selector: Selector = "s",
                   member: Optional[ClassMember] = None) -> ComponentView:
    return edge_service.component_view(alg, selector, member)


def find_path(alg: FiniteAlgebra, a: int, b: int, tags: Iterable[str], directed: bool = True,
              member: Optional[ClassMember] = None) -> Optional[list[int]]:
    return edge_service.find_path(alg, a, b, tags, directed, member)


def maltsev_edge(alg: FiniteAlgebra, a: int, b: int) -> TermResult:
    return edge_service.maltsev_edge(alg, a, b)


def undirected_majority_edge(alg: FiniteAlgebra, a: int, b: int) -> TermResult:
    return edge_service.undirected_majority_edge(alg, a, b)


def class_members(alg: FiniteAlgebra, quotients: bool = True) -> list[ClassMember]:
    return edge_service.class_members(alg, quotients)


def to_dot(graph: TypedGraph) -> str:
    return edge_service.to_dot(graph)
