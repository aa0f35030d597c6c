"""
Tests for the algebra models and the algebra-core service.
"""

import pytest
from hypothesis import given, settings as hsettings, strategies as st
from pydantic import ValidationError

from colorgraph.exceptions import InputError, InvariantViolation
from colorgraph.models import Congruence, FiniteAlgebra, OperationTable, Relation
from colorgraph.services.algebra import algebra_service
from colorgraph.services.catalog import AFF2, AFF3, MAJ2, PROJ2, RPS3, SEMI2, full_relation, identity_graph


class TestModels:
    """Test validation of the algebra models."""

    def test_table_length_checked(self):
        """Test a table of the wrong length is rejected."""
        with pytest.raises(ValidationError):
            OperationTable(name="f", arity=2, size=2, table=(0, 1, 1))

    def test_idempotency_checked(self):
        """Test a non-idempotent table is rejected."""
        with pytest.raises(ValidationError):
            OperationTable(name="f", arity=2, size=2, table=(1, 0, 0, 1))

    def test_duplicate_operation_names(self):
        """Test two operations with one name are rejected."""
        op = SEMI2.op("f")
        with pytest.raises(ValidationError):
            FiniteAlgebra(name="BAD", size=2, ops=(op, op))

    def test_relation_values_in_range(self):
        """Test a tuple value outside its component is rejected."""
        with pytest.raises(ValidationError):
            Relation(name="R", arity=1, components=(SEMI2,), tuples=frozenset({(2,)}))

    def test_operation_call(self):
        """Test operations evaluate by table lookup."""
        assert SEMI2.op("f")(0, 1) == 0
        assert MAJ2.op("g")(0, 1, 1) == 1
        assert AFF3.op("g")(1, 2, 0) == 2

    def test_congruence_from_blocks(self):
        """Test blocks are canonicalised to least-element labels."""
        theta = Congruence.from_blocks(4, [[1, 3], [0, 2]])
        assert theta.block_of == (0, 1, 0, 1)
        assert theta.blocks() == ((0, 2), (1, 3))
        assert theta.index_map == (0, 1, 0, 1)

    def test_congruence_labels_must_be_canonical(self):
        """Test non-canonical labels are rejected."""
        with pytest.raises(ValidationError):
            Congruence(size=2, block_of=(1, 1))


class TestSubuniverses:
    """Test subuniverse generation and subalgebras."""

    def test_sg_of_pair_in_rps(self):
        """Test a pair of the tournament is a subuniverse."""
        assert algebra_service.sg_closure(RPS3, {0, 1}) == frozenset({0, 1})

    def test_sg_of_pair_in_aff3(self):
        """Test two elements of AFF3 generate everything."""
        assert algebra_service.sg_closure(AFF3, {0, 1}) == frozenset({0, 1, 2})

    def test_sg_rejects_out_of_range(self):
        """Test out-of-range seeds raise InputError."""
        with pytest.raises(InputError):
            algebra_service.sg_closure(SEMI2, {5})

    def test_subalgebra_relabels(self):
        """Test a subalgebra is relabelled in increasing order."""
        sub = algebra_service.subalgebra(RPS3, [1, 2])
        assert sub.size == 2
        assert sub.op("f")(0, 1) == 1

    def test_subalgebra_needs_closed_set(self):
        """Test a non-closed set is not a subuniverse."""
        with pytest.raises(InputError):
            algebra_service.subalgebra(AFF3, [0, 1])


class TestCongruences:
    """Test congruence generation and lattices."""

    @pytest.mark.parametrize("alg", [SEMI2, MAJ2, AFF2, AFF3, RPS3])
    def test_catalog_algebras_are_simple(self, alg):
        """Test the catalog algebras have only the trivial congruences."""
        assert len(algebra_service.all_congruences(alg)) == 2

    def test_cg_in_rps_is_full(self):
        """Test collapsing two elements of the tournament collapses all."""
        assert algebra_service.cg_congruence(RPS3, [(0, 1)]).is_full()

    def test_product_congruences(self):
        """Test SEMI2 x SEMI2 has the kernels of both projections."""
        square = algebra_service.product([SEMI2, SEMI2])
        lattice = algebra_service.all_congruences(square)
        kernels = {Congruence.from_labels([x // 2 for x in range(4)]), Congruence.from_labels([x % 2 for x in range(4)])}
        assert kernels <= set(lattice)
        assert set(algebra_service.all_maximal_congruences(square)) >= kernels

    def test_quotient_by_non_congruence(self):
        """Test quotienting by a non-congruence raises InvariantViolation."""
        with pytest.raises(InvariantViolation):
            algebra_service.quotient(RPS3, Congruence.from_blocks(3, [[0, 1]]))

    def test_quotient_by_kernel(self):
        """Test the quotient of a product by a kernel is the factor."""
        square = algebra_service.product([SEMI2, AFF2])
        quot = algebra_service.quotient(square, Congruence.from_labels([x // 2 for x in range(4)]))
        assert quot.size == 2
        assert quot.op("f").table == SEMI2.op("f").table


class TestProducts:
    """Test direct products."""

    def test_product_size_and_encoding(self):
        """Test the first factor is most significant."""
        square = algebra_service.product([SEMI2, MAJ2])
        assert square.size == 4
        assert square.op("f")(3, 1) == 1

    def test_dissimilar_factors(self):
        """Test dissimilar signatures raise InputError."""
        other = FiniteAlgebra(name="ONE", size=2, ops=(SEMI2.op("f"),))
        with pytest.raises(InputError):
            algebra_service.product([SEMI2, other])


class TestTermSearch:
    """Test term existence."""

    def test_semilattice_term_on_semi2(self):
        """Test SEMI2 has a binary term with t(0,1) = t(1,0) = 0."""
        result = algebra_service.term_exists(SEMI2, 2, [((0, 1), 0), ((1, 0), 0)])
        assert result.found
        assert result.witness.evaluate(SEMI2, (1, 0)) == 0

    def test_no_semilattice_term_on_aff2(self):
        """Test AFF2 has no commutative binary term on {0,1}."""
        assert not algebra_service.term_exists(AFF2, 2, [((0, 1), 0), ((1, 0), 0)]).found

    def test_maltsev_term_on_aff3(self):
        """Test x - y + z is a term of AFF3."""
        spec = [((x, y, z), (x - y + z) % 3) for x in range(3) for y in range(3) for z in range(3)]
        assert algebra_service.term_exists(AFF3, 3, spec).found

    def test_projection_algebra(self):
        """Test PROJ2 is a projection algebra and SEMI2 is not."""
        assert algebra_service.is_projection_algebra(PROJ2)
        assert not algebra_service.is_projection_algebra(SEMI2)

    @pytest.mark.parametrize("alg", [AFF2, AFF3])
    def test_module_structure_found(self, alg):
        """Test affine catalog algebras carry a module structure."""
        result = algebra_service.module_structure(alg)
        assert result.found
        assert algebra_service.affinity_violation(alg, result.structure) is None

    def test_module_structure_absent(self):
        """Test SEMI2 is not affine."""
        assert not algebra_service.module_structure(SEMI2).found


class TestRelations:
    """Test relations, link congruences and decomposability."""

    def test_generate_parity(self, even3):
        """Test three even tuples generate the even-parity relation."""
        rel = algebra_service.generate_relation([AFF2] * 3, [(0, 0, 0), (1, 1, 0), (1, 0, 1)])
        assert rel.tuples == even3.tuples
        assert rel.invariant

    def test_invariance(self, even3):
        """Test even parity is invariant under AFF2 but not under SEMI2."""
        assert algebra_service.is_invariant(even3)
        over_semi = Relation(name="E", arity=3, components=(SEMI2,) * 3, tuples=even3.tuples)
        assert not algebra_service.is_invariant(over_semi)

    def test_project(self, even3):
        """Test pair projections of even parity are full."""
        assert len(algebra_service.project(even3, [0, 2])) == 4

    def test_link_congruences(self):
        """Test the identity graph links nothing and the full relation links everything."""
        assert algebra_service.link_congruence(identity_graph(AFF2), 0).is_equality()
        assert algebra_service.is_linked(full_relation([AFF2, AFF2]))
        assert not algebra_service.is_linked(identity_graph(AFF2))

    def test_two_decomposable(self, even3):
        """Test full relations are 2-decomposable and even parity is not."""
        assert algebra_service.is_two_decomposable(full_relation([MAJ2] * 3))
        assert not algebra_service.is_two_decomposable(even3)

    def test_relation_algebra(self, even3):
        """Test the relation algebra has one element per tuple and is closed."""
        alg = algebra_service.relation_algebra(even3)
        assert alg.size == 4
        assert algebra_service.all_congruences(alg)

    @hsettings(max_examples=25, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), min_size=1, max_size=4))
    def test_generated_relations_are_invariant(self, generators):
        """Test Sg of any tuples is closed under the operations."""
        rel = algebra_service.generate_relation([MAJ2, SEMI2], generators)
        assert set(generators) <= rel.tuples
        assert algebra_service.is_invariant(rel.with_tuples(rel.tuples))
