"""
Tests for seeded random algebras, relations and instances.
"""

import numpy as np
import pytest

from colorgraph.exceptions import InputError
from colorgraph.models import EdgeType
from colorgraph.services.algebra import algebra_service
from colorgraph.services.catalog import AFF2, MAJ2
from colorgraph.services.edges import edge_service
from colorgraph.services.generator import generator_service, spawn


class TestRandomAlgebras:
    """Test filtered random algebras."""

    def test_reproducible(self):
        """Test one seed gives one algebra."""
        first = generator_service.random_algebra(np.random.default_rng(1), 3)
        second = generator_service.random_algebra(np.random.default_rng(1), 3)
        assert first == second

    @pytest.mark.parametrize("seed", range(5))
    def test_affine_free_filter(self, seed):
        """Test affine-free algebras have no affine edge."""
        alg = generator_service.random_algebra(np.random.default_rng(seed), 2, filters=["affine-free"])
        assert EdgeType.AFFINE not in edge_service.edge_types(alg)

    @pytest.mark.parametrize("seed", range(3))
    def test_no_unary_smooth_filter(self, seed):
        """Test combined filters hold together."""
        alg = generator_service.random_algebra(np.random.default_rng(seed), 2,
                                               filters=["no-unary-edges", "smooth"])
        profile = edge_service.edge_profile(alg)
        assert profile.smooth
        assert EdgeType.UNARY not in profile.types

    def test_conservative(self):
        """Test conservative operations return one of their arguments."""
        alg = generator_service.random_algebra(np.random.default_rng(4), 3, conservative=True)
        for subset in ([0, 1], [1, 2], [0, 2]):
            assert algebra_service.sg_closure(alg, subset) == frozenset(subset)

    def test_size_one_passes_everything(self):
        """Test the 1-element algebra passes every filter vacuously."""
        alg = generator_service.random_algebra(np.random.default_rng(0), 1,
                                               filters=["semilattice-free", "majority-free", "affine-free"])
        assert alg.size == 1

    def test_impossible_filters(self):
        """Test 2-element algebras cannot avoid every edge type."""
        filters = ["semilattice-free", "majority-free", "affine-free", "no-unary-edges"]
        with pytest.raises(InputError):
            generator_service.random_algebra(np.random.default_rng(0), 2, filters=filters, max_attempts=30)

    def test_unknown_filter(self):
        """Test unknown filters raise InputError."""
        with pytest.raises(InputError):
            generator_service.random_algebra(np.random.default_rng(0), 2, filters=["abelian"])


class TestRandomRelations:
    """Test random relations and instances."""

    def test_relation_contains_generators(self):
        """Test generated relations are invariant and nonempty."""
        rel = generator_service.random_relation(np.random.default_rng(3), [MAJ2, AFF2, MAJ2], 3)
        assert rel.invariant
        assert rel.tuples

    @pytest.mark.parametrize("seed", range(5))
    def test_subdirect(self, seed):
        """Test subdirect relations project onto every component."""
        rel = generator_service.random_subdirect_relation(np.random.default_rng(seed), [MAJ2] * 3, 1)
        assert algebra_service.is_subdirect(rel)

    def test_instance_shape(self):
        """Test instances have the requested size and algebraic relations."""
        instance = generator_service.random_instance(np.random.default_rng(9), [MAJ2], variables=5,
                                                     constraints=7, max_arity=2)
        assert instance.variables == ("v0", "v1", "v2", "v3", "v4")
        assert len(instance.constraints) == 7
        assert all(c.relation.arity <= 2 for c in instance.constraints)
        assert instance.algebraic

    def test_spawn_independent(self):
        """Test spawned generators are reproducible and distinct."""
        first = [int(g.integers(1 << 30)) for g in spawn(7, 3)]
        second = [int(g.integers(1 << 30)) for g in spawn(7, 3)]
        assert first == second
        assert len(set(first)) == 3
