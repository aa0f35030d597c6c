"""
Tests for the algebra, relation and instance text formats.
"""

import numpy as np
import pytest

from colorgraph.exceptions import InputError
from colorgraph.services.catalog import AFF2, MAJ2, SEMI2, disequality
from colorgraph.services.fileio import file_service
from colorgraph.services.generator import generator_service

SEMI2_TEXT = """algebra SEMI2
size 2
op f 2
0 0
0 1
op g 3
0 0
0 0
0 0
0 1
"""


class TestAlgebras:
    """Test algebra blocks."""

    def test_dump(self):
        """Test tables are written n values per row."""
        assert file_service.dump_algebra(SEMI2) == SEMI2_TEXT

    def test_parse(self):
        """Test a parsed algebra equals the catalog entry."""
        doc = file_service.parse_text(SEMI2_TEXT)
        assert doc.algebras["SEMI2"] == SEMI2

    def test_comments_and_layout(self):
        """Test comments and free line breaks inside tables are accepted."""
        text = "# a semilattice\nalgebra S  # name\nsize 2\nop f 2\n0 0 0 1\nop g 3\n0 0 0 0\n0 0 0 1\n"
        alg = file_service.parse_text(text).algebras["S"]
        assert alg.op("f").table == SEMI2.op("f").table

    def test_round_trip_random(self):
        """Test a random algebra survives emit, parse and emit byte for byte."""
        alg = generator_service.random_algebra(np.random.default_rng(11), 3, name="R3")
        text = file_service.dump_algebra(alg)
        parsed = file_service.parse_text(text).algebras["R3"]
        assert parsed == alg
        assert file_service.dump_algebra(parsed) == text

    def test_short_table(self):
        """Test a short table is reported with its line."""
        with pytest.raises(InputError, match="<text>:3"):
            file_service.parse_text("algebra A\nsize 2\nop f 2\n0 0 1\n")

    def test_missing_size(self):
        """Test an algebra without a size line is rejected."""
        with pytest.raises(InputError, match="size"):
            file_service.parse_text("algebra A\nop f 2\n0 0 0 1\n")

    def test_unknown_block(self):
        """Test unknown top-level keywords are rejected."""
        with pytest.raises(InputError, match="<text>:1"):
            file_service.parse_text("group G\n")

    def test_load_catalog_name(self):
        """Test catalog names load without a file."""
        assert file_service.load_algebra("MAJ2") == MAJ2

    def test_missing_file(self, tmp_path):
        """Test an unreadable file raises InputError."""
        with pytest.raises(InputError):
            file_service.load_algebra(str(tmp_path / "missing.txt"))


class TestRelations:
    """Test relation blocks."""

    def test_parse_catalog_components(self):
        """Test components resolve to catalog algebras."""
        doc = file_service.parse_text("relation NEQ 2\nover MAJ2 MAJ2\n0 1\n1 0\n")
        assert doc.relations["NEQ"].tuples == disequality(MAJ2).tuples
        assert doc.relations["NEQ"].components == (MAJ2, MAJ2)

    def test_round_trip(self, even3):
        """Test emitted relations parse back to the same text."""
        text = file_service.dump_relation(even3)
        assert text.startswith("relation EVEN 3\nover AFF2 AFF2 AFF2\n0 0 0\n")
        rel = file_service.parse_text(text).relations["EVEN"]
        assert file_service.dump_relation(rel) == text

    def test_file_algebra_blocks(self):
        """Test non-catalog components are emitted before the relation."""
        alg = SEMI2.renamed("LOW")
        rel = disequality(MAJ2).model_copy(update={"components": (alg, alg), "name": "N"})
        text = file_service.dump_relation(rel)
        assert text.startswith("algebra LOW\n")
        assert file_service.parse_text(text).relations["N"].components == (alg, alg)

    def test_subset_of(self, even3):
        """Test representations carry a subset-of header."""
        text = file_service.dump_relation(even3.with_tuples({(0, 0, 0)}, name="SUB"), subset_of="EVEN")
        doc = file_service.parse_text(text)
        assert doc.subset_of == {"SUB": "EVEN"}
        assert doc.relations["SUB"].tuples == {(0, 0, 0)}

    def test_wrong_tuple_length(self):
        """Test tuples of the wrong length are rejected with their line."""
        with pytest.raises(InputError, match="<text>:3"):
            file_service.parse_text("relation R 2\nover AFF2 AFF2\n0 1 1\n")

    def test_unknown_algebra(self):
        """Test unknown algebra names are rejected."""
        with pytest.raises(InputError, match="NOPE"):
            file_service.parse_text("relation R 1\nover NOPE\n0\n")

    def test_value_out_of_range(self):
        """Test values outside a component are rejected."""
        with pytest.raises(InputError):
            file_service.parse_text("relation R 1\nover AFF2\n2\n")


class TestInstances:
    """Test instance blocks."""

    def test_round_trip(self, triangle):
        """Test an instance survives emit, parse and emit byte for byte."""
        text = file_service.dump_instance(triangle)
        parsed = file_service.parse_text(text).instances["triangle"]
        assert parsed == triangle
        assert file_service.dump_instance(parsed) == text

    def test_layout(self, path):
        """Test variables, relations and constraints appear in that order."""
        lines = file_service.dump_instance(path).splitlines()
        assert lines[:4] == ["instance path", "var x MAJ2", "var y MAJ2", "var z MAJ2"]
        assert lines[4] == "rel NEQ 2 MAJ2 MAJ2"
        assert lines[-2:] == ["constraint NEQ x y", "constraint NEQ y z"]

    def test_random_instance_round_trip(self):
        """Test random instances over random domains round-trip."""
        rng = np.random.default_rng(2)
        domains = [generator_service.random_algebra(rng, 2, name=f"D{i}") for i in range(2)]
        instance = generator_service.random_instance(rng, domains, variables=6, constraints=10)
        text = file_service.dump_instance(instance)
        assert file_service.dump_instance(file_service.parse_text(text).instances["P"]) == text

    def test_undeclared_relation(self):
        """Test constraints must name a declared relation."""
        with pytest.raises(InputError, match="undeclared"):
            file_service.parse_text("instance P\nvar x AFF2\nconstraint R x\n")

    def test_domain_mismatch(self):
        """Test relation components must match variable domains."""
        text = "instance P\nvar x SEMI2\nrel R 1 AFF2\n0\nconstraint R x\n"
        with pytest.raises(InputError):
            file_service.parse_text(text)

    def test_load_instance(self, tmp_path, path):
        """Test instances load from files."""
        target = tmp_path / "path.txt"
        target.write_text(file_service.dump_instance(path), encoding="utf-8")
        assert file_service.load_instance(target).variables == ("x", "y", "z")

    def test_shared_names_disambiguated(self):
        """Test two relations with one name get distinct names."""
        from colorgraph.models import Constraint, CspInstance

        first = disequality(AFF2)
        second = first.with_tuples({(0, 0), (1, 1)})
        instance = CspInstance(
            name="Q",
            variables=("a", "b"),
            domains={"a": AFF2, "b": AFF2},
            constraints=(Constraint(scope=("a", "b"), relation=first), Constraint(scope=("a", "b"), relation=second)),
        )
        text = file_service.dump_instance(instance)
        assert "rel NEQ 2 AFF2 AFF2" in text
        assert "rel NEQ_1 2 AFF2 AFF2" in text
