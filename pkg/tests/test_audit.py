"""
Tests for the audits of the structure theorems.
"""

import pytest

from colorgraph.exceptions import HypothesisViolation, InputError
from colorgraph.models import Verdict
from colorgraph.services.audit import AUDIT_IDS, audit_service, is_almost_trivial, run_audit
from colorgraph.services.catalog import (
    AFF2, AFF3, MAJ2, PROJ2, RPS3, SEMI2, disequality, full_relation, identity_graph, parity_relation,
)


class TestAlgebraAudits:
    """Test audits over single algebras."""

    @pytest.mark.parametrize("alg", [SEMI2, MAJ2, AFF2, AFF3, RPS3])
    def test_connectivity(self, alg):
        """Test catalog algebras are connected in the asm graph."""
        assert audit_service.audit_connectivity(alg).verdict is Verdict.PASS

    def test_unary_algebra_skipped(self):
        """Test projection algebras are skipped, or rejected when strict."""
        report = audit_service.audit_connectivity(PROJ2)
        assert report.verdict is Verdict.SKIPPED
        assert report.reason.startswith("no-unary-edges")
        with pytest.raises(HypothesisViolation) as info:
            audit_service.audit_connectivity(PROJ2, strict=True)
        assert info.value.hypothesis == "no-unary-edges"

    @pytest.mark.parametrize("alg", [MAJ2, AFF2, AFF3])
    def test_semilattice_free(self, alg):
        """Test semilattice-free algebras have directed am paths and an edge term."""
        assert audit_service.audit_semilattice_free(alg).verdict is Verdict.PASS

    def test_semilattice_free_skips_semi2(self):
        """Test SEMI2 does not meet the hypothesis."""
        assert audit_service.audit_semilattice_free(SEMI2).verdict is Verdict.SKIPPED

    @pytest.mark.parametrize("alg", [AFF2, AFF3])
    def test_maltsev_structure(self, alg):
        """Test affine algebras have Mal'tsev edges and a global Mal'tsev term."""
        report = audit_service.audit_maltsev_structure(alg)
        assert report.verdict is Verdict.PASS
        assert report.cases > 0

    def test_maltsev_structure_needs_majority_free(self):
        """Test MAJ2 is rejected when strict."""
        with pytest.raises(HypothesisViolation) as info:
            audit_service.audit_maltsev_structure(MAJ2, strict=True)
        assert info.value.hypothesis == "majority-free"

    @pytest.mark.parametrize("alg", [MAJ2, SEMI2, RPS3])
    def test_undirected_majority(self, alg):
        """Test affine-free algebras pass the majority audit."""
        assert audit_service.audit_undirected_majority(alg).verdict is Verdict.PASS

    def test_double_swap_on_affine(self):
        """Test the swapped pair of AFF2 stays maximal."""
        assert audit_service.double_swap(AFF2, 0, 1) == (0, 1)

    def test_swap_subalgebra(self):
        """Test Sg{(a,b),(b,a)} of MAJ2 is the disequality relation."""
        rel, alg = audit_service.swap_subalgebra(MAJ2, 0, 1)
        assert rel.tuples == {(0, 1), (1, 0)}
        assert alg.size == 2

    @pytest.mark.parametrize("alg", [SEMI2, MAJ2, AFF2, AFF3, RPS3])
    def test_thin_thick_colors(self, alg):
        """Test thin arcs of each kind exist exactly when thick edges of that type do."""
        assert audit_service.audit_thin_thick_colors(alg).verdict is Verdict.PASS

    @pytest.mark.parametrize("alg", [SEMI2, MAJ2, AFF2, AFF3, RPS3])
    def test_thin_lifting(self, alg):
        """Test every thick edge lifts to a thin arc."""
        assert audit_service.audit_thin_lifting(alg).verdict is Verdict.PASS

    @pytest.mark.parametrize("alg", [SEMI2, MAJ2, AFF2, PROJ2, AFF3, RPS3])
    def test_priority(self, alg):
        """Test 2-element quotients get the type of highest priority."""
        assert audit_service.audit_priority(alg).verdict is Verdict.PASS

    @pytest.mark.parametrize("alg", [SEMI2, RPS3])
    def test_thin_soundness(self, alg):
        """Test the semilattice arc witnesses replay."""
        report = audit_service.audit_thin_soundness(alg)
        assert report.verdict is Verdict.PASS
        assert report.cases > 0

    def test_quotient_edge_simple(self):
        """Test simple algebras have no quotients to check."""
        assert audit_service.audit_quotient_edge(SEMI2).verdict is Verdict.PASS

    def test_edge_term(self):
        """Test edge terms are found for AFF2 and MAJ2."""
        assert audit_service.audit_edge_term(AFF2).verdict is Verdict.PASS
        assert audit_service.audit_edge_term(MAJ2).verdict is Verdict.PASS
        assert audit_service.audit_edge_term(SEMI2).verdict is Verdict.SKIPPED


class TestRelationAudits:
    """Test audits over subdirect products."""

    def test_almost_trivial_identity(self):
        """Test the identity graph of RPS3 is almost trivial."""
        report = audit_service.audit_almost_trivial(identity_graph(RPS3))
        assert report.verdict is Verdict.PASS
        assert report.cases == 1

    def test_almost_trivial_full(self):
        """Test the full square of RPS3 is almost trivial."""
        assert audit_service.audit_almost_trivial(full_relation([RPS3, RPS3])).verdict is Verdict.PASS

    def test_almost_trivial_hypotheses(self):
        """Test MAJ2 disequality misses a hypothesis."""
        assert audit_service.audit_almost_trivial(disequality(MAJ2)).verdict is Verdict.SKIPPED
        with pytest.raises(HypothesisViolation):
            audit_service.audit_almost_trivial(disequality(MAJ2), strict=True)

    def test_rectangularity(self):
        """Test the full relation and the identity graph are rectangular."""
        assert audit_service.audit_rectangularity(full_relation([RPS3, RPS3])).verdict is Verdict.PASS
        assert audit_service.audit_rectangularity(identity_graph(AFF2)).verdict is Verdict.PASS

    def test_quasi_2_decomp(self):
        """Test full and parity relations are quasi-2-decomposable."""
        assert audit_service.audit_quasi_2_decomp(full_relation([MAJ2] * 3), seed=1).verdict is Verdict.PASS
        assert audit_service.audit_quasi_2_decomp(parity_relation(AFF2, 3), seed=1).verdict is Verdict.PASS

    def test_path_extension(self, even3):
        """Test path extension holds on even parity."""
        assert audit_service.audit_path_extension(even3, samples=5, seed=2).verdict is not Verdict.FAIL

    def test_non_subdirect_skipped(self):
        """Test a relation missing a value is skipped."""
        rel = identity_graph(AFF2).with_tuples({(0, 0)})
        assert audit_service.audit_rectangularity(rel).verdict is Verdict.SKIPPED


class TestAlmostTrivial:
    """Test the almost trivial decomposition."""

    def test_identity(self):
        """Test the identity graph is one class with the identity bijection."""
        decomposition = is_almost_trivial(identity_graph(AFF2))
        assert decomposition.classes == ((0, 1),)
        assert decomposition.bijections == ((0, 1, (0, 1)),)

    def test_disequality(self):
        """Test disequality is one class with the swap."""
        assert is_almost_trivial(disequality(MAJ2)).bijections == ((0, 1, (1, 0)),)

    def test_full(self):
        """Test the full relation has singleton classes."""
        assert is_almost_trivial(full_relation([AFF2, AFF2])).classes == ((0,), (1,))

    def test_parity_is_not(self, even3):
        """Test even parity is not almost trivial."""
        assert is_almost_trivial(even3) is None


class TestRunner:
    """Test running audits by id."""

    def test_unknown_id(self):
        """Test unknown audit ids raise InputError."""
        with pytest.raises(InputError):
            run_audit("pumping-lemma", [SEMI2])

    def test_merged_report(self):
        """Test reports over several algebras merge their cases."""
        report = run_audit("thin-soundness", [SEMI2, RPS3], seed=0)
        assert report.verdict is Verdict.PASS
        assert report.line().startswith("thin-soundness pass ")

    def test_all_skipped(self):
        """Test a run where no input meets the hypotheses is skipped."""
        report = run_audit("connectivity", [PROJ2])
        assert report.verdict is Verdict.SKIPPED

    def test_type_preservation(self):
        """Test sampled products keep the edge types of their factors."""
        report = run_audit("type-preservation", [SEMI2, MAJ2, AFF2], samples=3, seed=0)
        assert report.verdict is not Verdict.FAIL

    def test_corpus_reproducible(self):
        """Test one seed gives one corpus."""
        first = audit_service.corpus(5, random_algebras=1)
        second = audit_service.corpus(5, random_algebras=1)
        assert first == second

    def test_audit_all(self):
        """Test every audit runs once over the corpus without a failure."""
        reports = audit_service.audit_all(samples=2, seed=0, random_algebras=1)
        assert tuple(r.theorem for r in reports) == AUDIT_IDS
        assert all(r.verdict is not Verdict.FAIL for r in reports)
