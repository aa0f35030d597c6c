"""
Tests for signatures, representations and edge terms.
"""

import numpy as np
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from colorgraph.exceptions import HypothesisViolation, InputError
from colorgraph.models import Relation, Verdict
from colorgraph.services.algebra import algebra_service
from colorgraph.services.catalog import AFF2, AFF3, MAJ2, SEMI2, full_relation
from colorgraph.services.generator import generator_service
from colorgraph.services.subpower import edge_term_spec, subpower_service


class TestSignature:
    """Test signatures of subpowers."""

    def test_parity_signature(self, even3):
        """Test every coordinate of even parity admits both values after any prefix."""
        signature = subpower_service.signature_of(even3)
        assert (0, 0, 1) in signature
        assert (1, 1, 0) in signature
        assert all((i, a, a) in signature for i in range(3) for a in range(2))

    def test_last_coordinate_is_determined(self, even3):
        """Test the last coordinate of even parity only has trivial triples."""
        signature = subpower_service.signature_of(even3)
        assert (2, 0, 1) not in signature

    def test_semilattice_component_rejected(self):
        """Test a relation over SEMI2 raises HypothesisViolation."""
        with pytest.raises(HypothesisViolation) as info:
            subpower_service.signature_of(full_relation([SEMI2, AFF2]))
        assert info.value.hypothesis == "semilattice-free"


class TestRepresentation:
    """Test minimal representations."""

    def test_parity_representation(self, even3):
        """Test the representation is small and regenerates the relation."""
        rep = subpower_service.minimal_representation(even3)
        assert len(rep) <= rep.bound
        generated = algebra_service.generate_relation(even3.components, rep.subset)
        assert generated.tuples == even3.tuples

    def test_singleton(self):
        """Test a singleton relation is its own representation."""
        rel = Relation(name="S", arity=3, components=(AFF2,) * 3, tuples=frozenset({(1, 0, 1)}))
        rep = subpower_service.minimal_representation(rel)
        assert rep.subset == rel.tuples

    def test_whole_relation_is_representation(self, even3):
        """Test the relation represents itself."""
        assert subpower_service.is_representation(even3, even3.tuples)

    def test_projection_clause(self, even3):
        """Test a single tuple misses projections."""
        check = subpower_service.is_representation(even3, [(0, 0, 0)])
        assert not check
        assert check.clause == 2

    def test_foreign_tuples_rejected(self, even3):
        """Test a candidate outside the relation raises InputError."""
        with pytest.raises(InputError):
            subpower_service.is_representation(even3, [(1, 0, 0)])

    def test_bound_below_three_coordinates(self):
        """Test the bound uses the full product for binary relations."""
        rel = full_relation([AFF3, AFF2])
        signature = subpower_service.signature_of(rel)
        assert subpower_service.bound(rel, signature) == 2 * len(signature) + 6

    @hsettings(max_examples=20, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1), st.integers(2, 5), st.integers(1, 4))
    def test_random_subpowers(self, seed, arity, generators):
        """Test random subpowers of MAJ2 and AFF2 are regenerated by their representations."""
        rng = np.random.default_rng(seed)
        components = [(MAJ2, AFF2)[int(rng.integers(2))] for _ in range(arity)]
        rel = generator_service.random_relation(rng, components, generators)
        rep = subpower_service.minimal_representation(rel)
        assert len(rep) <= rep.bound
        assert algebra_service.generate_relation(components, rep.subset).tuples == rel.tuples

    def test_generation_audit(self, even3):
        """Test the generation audit passes on even parity."""
        report = subpower_service.audit_representation_generates(even3, samples=5, seed=3)
        assert report.verdict is Verdict.PASS
        assert report.cases > 0

    def test_generation_audit_skips_semilattice(self):
        """Test the generation audit skips semilattice components unless strict."""
        rel = full_relation([SEMI2, SEMI2])
        assert subpower_service.audit_representation_generates(rel).verdict is Verdict.SKIPPED
        with pytest.raises(HypothesisViolation):
            subpower_service.audit_representation_generates(rel, strict=True)


class TestEdgeTerms:
    """Test edge term search."""

    def test_affine(self):
        """Test AFF2 has an edge term with two identities."""
        result = subpower_service.has_edge_term(AFF2, 2)
        assert result.found
        assert result.arity == 3

    def test_majority(self):
        """Test MAJ2 needs three identities."""
        result = subpower_service.has_edge_term(MAJ2, 2)
        assert result.found
        assert result.arity == 4

    def test_semilattice(self):
        """Test SEMI2 has no edge term."""
        assert not subpower_service.has_edge_term(SEMI2, 2).found

    def test_witness_replays(self):
        """Test the found term satisfies every edge identity."""
        result = subpower_service.has_edge_term(MAJ2, 2)
        for row, expected in edge_term_spec(2, result.arity - 1):
            assert result.witness.evaluate(MAJ2, row) == expected

    def test_identity_count_range(self):
        """Test fewer than two identities are rejected."""
        with pytest.raises(InputError):
            subpower_service.has_edge_term(AFF2, 1)
