"""
Tests for (k,l)-minimality and the bounded-width solver.
"""

import numpy as np
import pytest

from colorgraph.exceptions import HypothesisViolation, InputError
from colorgraph.models import Assignment, Constraint, CspInstance, Relation
from colorgraph.services.catalog import AFF2, MAJ2, SEMI2, parity_relation
from colorgraph.services.csp import csp_service
from colorgraph.services.generator import generator_service, spawn


class TestPartialSolutions:
    """Test restrictions and partial solutions."""

    def test_path_pairs(self, path):
        """Test x and z must be equal on a 2-coloured path."""
        pairs = csp_service.partial_solutions(path, ("x", "y", "z"))
        assert pairs == {(0, 1, 0), (1, 0, 1)}

    def test_weak_restriction_drops_outside_constraints(self, path):
        """Test the weak restriction to {x, z} ignores constraints through y."""
        assert len(csp_service.partial_solutions(path, ("x", "z"), weak=True)) == 4


class TestMinimality:
    """Test (k,l)-minimality."""

    def test_triangle_empties(self, triangle):
        """Test the odd cycle empties at (2,3)."""
        outcome = csp_service.establish_minimality(triangle)
        assert outcome.empty
        assert outcome.emptied is not None

    def test_path_survives(self, path):
        """Test the path keeps both colourings."""
        outcome = csp_service.establish_minimality(path)
        assert not outcome.empty
        assert outcome.strategy.get(("x", "z")) == {(0, 0), (1, 1)}

    def test_order_independent(self, chain):
        """Test two processing orders reach the same fixpoint."""
        first = csp_service.establish_minimality(chain, order_seed=1)
        second = csp_service.establish_minimality(chain, order_seed=2)
        assert first.strategy.sets == second.strategy.sets
        assert first.instance.constraints == second.instance.constraints

    def test_bad_parameters(self, path):
        """Test k > l is rejected."""
        with pytest.raises(InputError):
            csp_service.establish_minimality(path, k=3, l=2)

    def test_strong_prunes_more_than_weak(self):
        """Test a constraint wider than l is seen only by the strong restriction."""
        zero = Relation(name="ZERO", arity=4, components=(MAJ2,) * 4, tuples=frozenset({(0, 0, 0, 0)}))
        inst = CspInstance(
            name="wide",
            variables=("a", "b", "c", "d"),
            domains={v: MAJ2 for v in "abcd"},
            constraints=(Constraint(scope=("a", "b", "c", "d"), relation=zero),),
        )
        weak = csp_service.establish_minimality(inst, weak=True)
        strong = csp_service.establish_minimality(inst)
        assert not weak.empty
        assert not strong.empty
        assert weak.strategy.get(("a",)) == {(0,), (1,)}
        assert strong.strategy.get(("a",)) == {(0,)}
        assert all(strong.strategy.get(w) < weak.strategy.get(w) for w in weak.strategy.sets)

    def test_covering_constraints_not_returned(self, path):
        """Test the pruned instance carries only the input constraints."""
        outcome = csp_service.establish_minimality(path, l=3)
        assert [c.scope for c in outcome.instance.constraints] == [("x", "y"), ("y", "z")]
        assert outcome.strategy.get(("x", "y", "z")) == {(0, 1, 0), (1, 0, 1)}


class TestCompatibility:
    """Test compatibility of tuples with a strategy."""

    @pytest.fixture
    def strategy(self, path):
        return csp_service.establish_minimality(path).strategy

    def test_empty_scope(self, strategy):
        """Test the empty tuple is always compatible."""
        assert csp_service.is_f_compatible((), (), strategy)

    def test_surviving_tuple(self, strategy):
        """Test a colouring edge is compatible in either scope order."""
        assert csp_service.is_f_compatible((0, 1), ("x", "y"), strategy)
        assert csp_service.is_f_compatible((1, 0), ("y", "x"), strategy)
        assert csp_service.is_f_compatible((0, 1, 0), ("x", "y", "z"), strategy)

    def test_pruned_pair(self, strategy):
        """Test equal colours on an edge are not compatible."""
        assert not csp_service.is_f_compatible((0, 0), ("x", "y"), strategy)
        assert not csp_service.is_f_compatible((0, 1), ("x", "z"), strategy)

    def test_length_mismatch(self, strategy):
        """Test values and scope must have the same length."""
        with pytest.raises(InputError):
            csp_service.is_f_compatible((0,), ("x", "y"), strategy)


class TestSolvers:
    """Test the bounded-width and brute-force solvers."""

    def test_triangle_unsat(self, triangle):
        """Test both solvers refute the odd cycle."""
        assert csp_service.solve_bounded_width(triangle) is None
        assert csp_service.brute_force_solve(triangle) is None

    def test_path_sat(self, path):
        """Test the solution of the path verifies."""
        result = csp_service.solve_bounded_width(path)
        assert result is not None
        assert csp_service.verify_solution(path, result)
        assert result["x"] == result["z"] != result["y"]

    def test_chain_forced(self, chain):
        """Test a forced chain over SEMI2 is solved to all ones."""
        result = csp_service.solve_bounded_width(chain)
        assert result.values == {"x": 1, "y": 1, "z": 1}

    def test_verify_rejects(self, path):
        """Test a violating assignment does not verify."""
        assert not csp_service.verify_solution(path, Assignment(values={"x": 0, "y": 0, "z": 0}))

    def test_affine_domain_rejected(self):
        """Test affine domains raise HypothesisViolation."""
        instance = CspInstance(
            name="parity",
            variables=("a", "b", "c"),
            domains={v: AFF2 for v in "abc"},
            constraints=(Constraint(scope=("a", "b", "c"), relation=parity_relation(AFF2, 3)),),
        )
        with pytest.raises(HypothesisViolation) as info:
            csp_service.solve_bounded_width(instance)
        assert info.value.hypothesis == "affine-free"

    def test_non_invariant_relation_rejected(self):
        """Test a non-invariant constraint raises HypothesisViolation."""
        xor = Relation(name="XOR", arity=2, components=(SEMI2, SEMI2), tuples=frozenset({(0, 1), (1, 0)}))
        instance = CspInstance(
            name="xor",
            variables=("a", "b"),
            domains={"a": SEMI2, "b": SEMI2},
            constraints=(Constraint(scope=("a", "b"), relation=xor),),
        )
        with pytest.raises(HypothesisViolation):
            csp_service.solve_bounded_width(instance)

    @pytest.mark.parametrize("seed", range(12))
    def test_agrees_with_brute_force(self, seed):
        """Test the solver agrees with exhaustive search on random instances."""
        rngs = spawn(seed, 2)
        domains = [MAJ2, SEMI2]
        instance = generator_service.random_instance(rngs[0], domains, variables=5, constraints=6, max_arity=3)
        brute = csp_service.brute_force_solve(instance)
        result = csp_service.solve_bounded_width(instance)
        assert (result is None) == (brute is None)
        if result is not None:
            assert csp_service.verify_solution(instance, result)

    def test_instances_are_reproducible(self):
        """Test one seed gives one instance."""
        first = generator_service.random_instance(np.random.default_rng(5), [MAJ2], variables=4)
        second = generator_service.random_instance(np.random.default_rng(5), [MAJ2], variables=4)
        assert first == second
