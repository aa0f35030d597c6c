"""
CSP instances: restriction, partial solutions, (k,l)-minimality, the
congruence-block bounded-width solver and a brute-force oracle.
"""

import logging
from itertools import combinations
from itertools import product as cartesian
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np

from ..config import settings
from ..exceptions import HypothesisViolation, InconclusiveError, InputError, SolverBug
from ..models import (
    Assignment,
    Constraint,
    CspInstance,
    EdgeType,
    MinimalityOutcome,
    Relation,
    Strategy,
)
from .algebra import AlgebraService, algebra_service
from .edges import EdgeGraphService, edge_service

logger = logging.getLogger(__name__)


def _nullary_false() -> Constraint:
    """Marker for a constraint whose relation is empty but whose scope left W."""
    return Constraint(scope=(), relation=Relation(name="FALSE", arity=0, components=(), tuples=frozenset()))


class CspService:
    """Service class for CSP operations."""

    def __init__(self, algebras: Optional[AlgebraService] = None, edges: Optional[EdgeGraphService] = None):
        self.algebras = algebras or algebra_service
        self.edges = edges or edge_service

    # ------------------------------------------------------------------
    # Restriction and partial solutions

    def restrict(self, instance: CspInstance, w: Iterable[str], weak: bool = False) -> CspInstance:
        """
        The restriction P_W: every constraint projected onto its scope inside W.

        With weak set only constraints whose scope lies inside W are kept.
        """
        w = set(w)
        unknown = w - set(instance.variables)
        if unknown:
            raise InputError(f"unknown variables {sorted(unknown)}")
        variables = instance.ordered(w)
        constraints = []
        for c in instance.constraints:
            inside = [i for i, v in enumerate(c.scope) if v in w]
            if weak and len(inside) < len(c.scope):
                continue
            if not inside:
                if not c.relation.tuples:
                    constraints.append(_nullary_false())
                continue
            if len(inside) == len(c.scope):
                constraints.append(c)
            else:
                constraints.append(Constraint(scope=tuple(c.scope[i] for i in inside),
                                              relation=self.algebras.project(c.relation, inside)))
        return CspInstance(
            name=f"{instance.name}|{','.join(variables)}",
            variables=variables,
            domains={v: instance.domains[v] for v in variables},
            constraints=tuple(constraints),
            algebraic=instance.algebraic,
        )

    @staticmethod
    def _projected(instance: CspInstance, w: tuple[str, ...], weak: bool):
        """Constraints of P_W as (positions in w, tuples), filed under their last position; None if P_W is false."""
        pos = {v: i for i, v in enumerate(w)}
        checks: list[list[tuple[tuple[int, ...], frozenset]]] = [[] for _ in w]
        for c in instance.constraints:
            inside = [i for i, v in enumerate(c.scope) if v in pos]
            if weak and len(inside) < len(c.scope):
                continue
            if not inside:
                if not c.relation.tuples:
                    return None
                continue
            where = tuple(pos[c.scope[i]] for i in inside)
            if len(inside) == len(c.scope):
                tuples = c.relation.tuples
            else:
                tuples = frozenset(tuple(t[i] for i in inside) for t in c.relation.tuples)
            checks[max(where)].append((where, tuples))
        return checks

    @staticmethod
    def _search(sizes: Sequence[int], checks, first_only: bool = False) -> list[tuple[int, ...]]:
        """Backtracking in variable order; a constraint is checked once its last variable is set."""
        found: list[tuple[int, ...]] = []
        values = [0] * len(sizes)

        def extend(i: int) -> bool:
            if i == len(sizes):
                found.append(tuple(values))
                return first_only
            for a in range(sizes[i]):
                values[i] = a
                if all(tuple(values[j] for j in where) in tuples for where, tuples in checks[i]):
                    if extend(i + 1):
                        return True
            return False

        extend(0)
        return found

    def partial_solutions(self, instance: CspInstance, w: Iterable[str], weak: bool = False) -> frozenset[tuple[int, ...]]:
        """Solutions of P_W, as value tuples in instance order of W."""
        w = set(w)
        unknown = w - set(instance.variables)
        if unknown:
            raise InputError(f"unknown variables {sorted(unknown)}")
        w = instance.ordered(w)
        checks = self._projected(instance, w, weak)
        if checks is None:
            return frozenset()
        return frozenset(self._search([instance.domains[v].size for v in w], checks))

    # ------------------------------------------------------------------
    # (k,l)-minimality

    def _covered(self, instance: CspInstance, l: int) -> CspInstance:
        """Add full constraints over l-sets that no scope contains."""
        scopes = [set(c.scope) for c in instance.constraints]
        size = min(l, len(instance.variables))
        extra = []
        if size == 0:
            return instance
        for w in combinations(instance.variables, size):
            if not any(set(w) <= s for s in scopes):
                comps = [instance.domains[v] for v in w]
                tuples = frozenset(cartesian(*(range(a.size) for a in comps)))
                extra.append(Constraint(scope=w, relation=Relation(
                    name=f"ALL_{'_'.join(w)}", arity=len(w), components=tuple(comps), tuples=tuples, invariant=True)))
        if not extra:
            return instance
        logger.debug(f"{instance.name}: {len(extra)} covering constraints added")
        return instance.model_copy(update={"constraints": instance.constraints + tuple(extra)})

    def establish_minimality(self, instance: CspInstance, k: Optional[int] = None, l: Optional[int] = None,
                             weak: bool = False, order_seed: Optional[int] = None) -> MinimalityOutcome:
        """
        Prune the instance to its largest (k,l)-strategy.

        Args:
            instance: the instance P
            k: size of the sets checked for compatibility, default settings.default_k
            l: size of the sets carrying partial solutions, default settings.default_l
            weak: use the weak restriction (only constraints inside W count)
            order_seed: shuffle the processing order of the pruning steps

        Returns:
            MinimalityOutcome whose instance carries the pruned input constraints;
            the fixpoint does not depend on the processing order
        """
        outcome = self._fixpoint(instance, k, l, weak, order_seed)
        kept = outcome.instance.constraints[:len(instance.constraints)]
        return outcome.model_copy(update={"instance": outcome.instance.model_copy(update={"constraints": kept})})

    def _fixpoint(self, instance: CspInstance, k: Optional[int], l: Optional[int], weak: bool,
                  order_seed: Optional[int]) -> MinimalityOutcome:
        """The pruned instance keeps the covering constraints."""
        k = k or settings.default_k
        l = l or settings.default_l
        if not 1 <= k <= l <= settings.max_l:
            raise InputError(f"need 1 <= k <= l <= {settings.max_l}, got k={k}, l={l}")
        current = self._covered(instance, l)
        variables = current.variables
        subsets = [w for size in range(1, min(l, len(variables)) + 1) for w in combinations(variables, size)]
        sets = {w: set(self.partial_solutions(current, w, weak)) for w in subsets}
        small = [w for w in subsets if len(w) <= k]

        tasks = []
        for u in subsets:
            for w in small:
                if len(w) < len(u) and set(w) <= set(u):
                    where = tuple(u.index(v) for v in w)
                    tasks.append(("a", w, u, where))
                    tasks.append(("b", w, u, where))
        for ci, c in enumerate(current.constraints):
            tasks.append(("c", ci, None, None))
        order = np.arange(len(tasks))
        if order_seed is not None:
            order = np.random.default_rng(order_seed).permutation(len(tasks))
        relations = [set(c.relation.tuples) for c in current.constraints]
        checks = [self._compatibility_checks(c.scope, small, current) for c in current.constraints]

        sweeps = 0
        changed = True
        while changed:
            changed = False
            sweeps += 1
            pruned_constraints = False
            for t in order:
                kind, first, second, where = tasks[t]
                if kind == "a":
                    images = {tuple(b[i] for i in where) for b in sets[second]}
                    dead = sets[first] - images
                    if dead:
                        sets[first] -= dead
                        changed = True
                elif kind == "b":
                    allowed = sets[first]
                    dead = {b for b in sets[second] if tuple(b[i] for i in where) not in allowed}
                    if dead:
                        sets[second] -= dead
                        changed = True
                else:
                    dead = {a for a in relations[first]
                            if any(tuple(a[i] for i in idx) not in sets[w] for w, idx in checks[first])}
                    if dead:
                        relations[first] -= dead
                        changed = pruned_constraints = True
            if pruned_constraints:
                # keep every S_W a set of partial solutions of the pruned instance
                pruned = self._with_relations(current, relations)
                for w in subsets:
                    keep = self.partial_solutions(pruned, w, weak)
                    if not sets[w] <= keep:
                        sets[w] &= keep
                        changed = True
        logger.debug(f"{instance.name}: ({k},{l})-minimality reached after {sweeps} sweeps")

        pruned = self._with_relations(current, relations)
        empty = [w for w in subsets if not sets[w]]
        if any(not c.scope and not c.relation.tuples for c in pruned.constraints) and not empty:
            empty = [()]
        if empty:
            return MinimalityOutcome(empty=True, instance=pruned, emptied=empty[0])
        strategy = Strategy(k=k, l=l, variables=variables,
                            sets={w: frozenset(s) for w, s in sets.items()})
        return MinimalityOutcome(empty=False, instance=pruned, strategy=strategy)

    @staticmethod
    def _compatibility_checks(scope, small, instance):
        pos = instance.position()
        inside = set(scope)
        result = []
        for w in small:
            if set(w) <= inside:
                result.append((w, tuple(scope.index(v) for v in w)))
        result.sort(key=lambda item: [pos[v] for v in item[0]])
        return result

    @staticmethod
    def _with_relations(instance: CspInstance, relations: list[set]) -> CspInstance:
        constraints = tuple(
            c if len(r) == len(c.relation.tuples) else Constraint(
                scope=c.scope,
                relation=c.relation.with_tuples(r, invariant=c.relation.invariant),
            )
            for c, r in zip(instance.constraints, relations)
        )
        return instance.model_copy(update={"constraints": constraints})

    @staticmethod
    def is_f_compatible(values: Sequence[int], scope: Sequence[str], strategy: Strategy) -> bool:
        """Every subset W of scope with |W| <= k carries a restriction of values that lies in S_W."""
        scope = tuple(scope)
        if len(values) != len(scope):
            raise InputError("values and scope differ in length")
        for size in range(1, min(strategy.k, len(scope)) + 1):
            for w in combinations(scope, size):
                key, restricted = strategy.project(scope, tuple(values), w)
                if restricted not in strategy.sets.get(key, frozenset()):
                    return False
        return True

    # ------------------------------------------------------------------
    # Solving

    def verify_solution(self, instance: CspInstance, assignment: Assignment) -> bool:
        """Every variable is assigned in range and every constraint holds."""
        values = assignment.values
        if set(values) != set(instance.variables):
            return False
        if any(not 0 <= values[v] < instance.domains[v].size for v in instance.variables):
            return False
        return all(tuple(values[v] for v in c.scope) in c.relation.tuples for c in instance.constraints)

    def invariance_check(self, instance: CspInstance) -> bool:
        """All constraint relations are closed under the shared basic operations."""
        return all(c.relation.invariant or self.algebras.is_invariant(c.relation) for c in instance.constraints)

    def brute_force_solve(self, instance: CspInstance) -> Optional[Assignment]:
        """Exhaustive backtracking; authoritative oracle."""
        checks = self._projected(instance, instance.variables, weak=False)
        if checks is None:
            return None
        found = self._search([instance.domains[v].size for v in instance.variables], checks, first_only=True)
        if not found:
            return None
        return Assignment(values=dict(zip(instance.variables, found[0])))

    def check_domains(self, instance: CspInstance) -> None:
        """Raise unless every domain is affine-free, free of unary edges and smooth."""
        for alg in {id(a): a for a in instance.domains.values()}.values():
            profile = self.edges.edge_profile(alg)
            if profile.inconclusive:
                raise InconclusiveError(f"edge types of domain {alg.name} are inconclusive")
            if profile.has(EdgeType.AFFINE):
                raise HypothesisViolation("affine-free", f"domain {alg.name} has an affine edge")
            if profile.has(EdgeType.UNARY):
                raise HypothesisViolation("no-unary-edges", f"domain {alg.name} has a unary edge")
            if not profile.smooth:
                raise HypothesisViolation("smooth", f"domain {alg.name} is not smooth",
                                          witness=profile.offending.describe() if profile.offending else None)

    def solve_bounded_width(self, instance: CspInstance, k: Optional[int] = None,
                            l: Optional[int] = None) -> Optional[Assignment]:
        """
        Solve an instance over affine-free smooth domains by (k,l)-minimality and
        repeated restriction of one domain to a maximal congruence block.

        Returns:
            A verified assignment, or None if minimality empties the instance

        Raises:
            HypothesisViolation: a domain has affine or unary edges, is not smooth,
                or a constraint relation is not invariant
            SolverBug: the reduction lost minimality or the linked/mapping dichotomy failed
        """
        if (l or settings.default_l) < 2:
            raise InputError("the bounded-width solver needs l >= 2")
        self.check_domains(instance)
        if not instance.algebraic and not self.invariance_check(instance):
            raise HypothesisViolation("algebraic", f"instance {instance.name} has a non-invariant constraint")
        result = self._solve(instance, k, l, depth=0)
        if result is not None and not self.verify_solution(instance, result):
            raise SolverBug("bounded-width solution does not verify", witness={"assignment": result.values})
        return result

    def _solve(self, instance: CspInstance, k, l, depth: int) -> Optional[Assignment]:
        outcome = self._fixpoint(instance, k, l, False, None)
        if outcome.empty:
            if depth == 0:
                logger.info(f"{instance.name}: minimality empties the instance, no solution")
                return None
            raise SolverBug("restriction to a congruence block lost minimality",
                            witness={"depth": depth, "emptied": list(outcome.emptied or ())})
        pruned, strategy = outcome.instance, outcome.strategy
        domains = {v: sorted(strategy.domain(v)) for v in pruned.variables}
        pending = [v for v in pruned.variables if len(domains[v]) > 1]
        if not pending:
            return Assignment(values={v: domains[v][0] for v in pruned.variables})

        v = pending[0]
        elements = domains[v]
        sub = self.algebras.subalgebra(pruned.domains[v], elements)
        theta = self.algebras.all_maximal_congruences(sub)[0]
        block = {a: theta.index_map[i] for i, a in enumerate(elements)}

        mapped: dict[str, dict[int, int]] = {}
        for u in pruned.variables:
            if u == v:
                continue
            key = strategy.key((v, u))
            flip = key[0] != v
            pairs = [(b, a) if flip else (a, b) for a, b in strategy.get(key)]
            images: dict[int, set[int]] = {}
            for a, b in pairs:
                images.setdefault(b, set()).add(block[a])
            if all(len(s) == 1 for s in images.values()):
                mapped[u] = {b: next(iter(s)) for b, s in images.items()}
                continue
            graph = nx.Graph()
            graph.add_nodes_from(("block", i) for i in set(block.values()))
            graph.add_nodes_from(("value", b) for b in domains[u])
            graph.add_edges_from((("block", block[a]), ("value", b)) for a, b in pairs)
            if not nx.is_connected(graph):
                raise SolverBug("pair set is neither linked nor the graph of a mapping",
                                witness={"v": v, "u": u, "theta": theta.blocks(), "pairs": sorted(pairs)})

        quot = self.algebras.quotient(sub, theta)
        view = self.edges.component_view(quot, "s")
        target = min(view.max_set)
        keep = {v: {a for a in elements if block[a] == target}}
        for u, mapping in mapped.items():
            keep[u] = {b for b, i in mapping.items() if i == target}
        logger.debug(f"{instance.name}: depth {depth}, {v} restricted to {sorted(keep[v])}, "
                     f"{len(mapped)} variables follow")

        constraints = []
        for c in pruned.constraints:
            where = [(i, keep[x]) for i, x in enumerate(c.scope) if x in keep]
            if not where:
                constraints.append(c)
                continue
            tuples = frozenset(t for t in c.relation.tuples if all(t[i] in allowed for i, allowed in where))
            constraints.append(Constraint(scope=c.scope, relation=c.relation.with_tuples(
                tuples, invariant=c.relation.invariant)))
        reduced = pruned.model_copy(update={"constraints": tuple(constraints)})
        return self._solve(reduced, k, l, depth + 1)


# Global service instance
csp_service = CspService()


def restrict(instance: CspInstance, w: Iterable[str], weak: bool = False) -> CspInstance:
    """Convenience function for the restriction P_W."""
    return csp_service.restrict(instance, w, weak)


def partial_solutions(instance: CspInstance, w: Iterable[str], weak: bool = False) -> frozenset[tuple[int, ...]]:
    return csp_service.partial_solutions(instance, w, weak)


def establish_minimality(instance: CspInstance, k: Optional[int] = None, l: Optional[int] = None,
                         weak: bool = False, order_seed: Optional[int] = None) -> MinimalityOutcome:
    return csp_service.establish_minimality(instance, k, l, weak, order_seed)


def is_f_compatible(values: Sequence[int], scope: Sequence[str], strategy: Strategy) -> bool:
    return csp_service.is_f_compatible(values, scope, strategy)


def solve_bounded_width(instance: CspInstance, k: Optional[int] = None, l: Optional[int] = None) -> Optional[Assignment]:
    return csp_service.solve_bounded_width(instance, k, l)


def brute_force_solve(instance: CspInstance) -> Optional[Assignment]:
    return csp_service.brute_force_solve(instance)


def verify_solution(instance: CspInstance, assignment: Assignment) -> bool:
    return csp_service.verify_solution(instance, assignment)


def invariance_check(instance: CspInstance) -> bool:
    return csp_service.invariance_check(instance)
