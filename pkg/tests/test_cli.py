"""
Tests for the command-line interface.
"""

import json

import pytest

from colorgraph.models import EdgeType
from colorgraph.services.catalog import MAJ2, SEMI2, full_relation
from colorgraph.services.edges import edge_service
from colorgraph.services.fileio import file_service


@pytest.fixture
def write(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""
    def _write(name: str, text: str) -> str:
        target = tmp_path / name
        target.write_text(text, encoding="utf-8")
        return str(target)
    return _write


class TestAlgebraCommands:
    """Test the alg subcommands."""

    def test_edges(self, run_cli):
        """Test SEMI2 has one semilattice edge."""
        code, out, _ = run_cli("alg", "edges", "SEMI2")
        assert code == 0
        assert out.splitlines() == ["01: semilattice (θ=eq)", "types: {s}", "smooth: yes"]

    def test_edges_unary(self, run_cli):
        """Test PROJ2 has one unary edge."""
        _, out, _ = run_cli("alg", "edges", "PROJ2")
        assert "01: unary (θ=eq)" in out
        assert "types: {u}" in out

    def test_edges_json(self, run_cli):
        """Test --json emits one document."""
        code, out, _ = run_cli("--json", "alg", "edges", "MAJ2")
        assert code == 0
        payload = json.loads(out)
        assert payload["profile"]["types"] == ["m"]
        assert payload["profile"]["smooth"] is True

    def test_graph_dot(self, run_cli):
        """Test DOT export of SEMI2."""
        code, out, _ = run_cli("alg", "graph", "SEMI2", "--dot")
        assert code == 0
        assert out == edge_service.to_dot(edge_service.coloured_graph(SEMI2))

    def test_graph_summary(self, run_cli):
        """Test the component summary of the tournament."""
        _, out, _ = run_cli("alg", "graph", "RPS3")
        lines = out.splitlines()
        assert "component 0: 0 1 2" in lines
        assert "max: 0 1 2" in lines

    def test_path(self, run_cli):
        """Test directed paths follow the arcs."""
        assert run_cli("alg", "path", "SEMI2", "1", "0")[1] == "1 -> 0\n"
        assert run_cli("alg", "path", "SEMI2", "0", "1")[1] == "none\n"

    def test_algebra_file(self, run_cli, write):
        """Test algebras load from files."""
        path = write("low.txt", file_service.dump_algebra(SEMI2.renamed("LOW")))
        _, out, _ = run_cli("alg", "info", path)
        assert "name: LOW" in out
        assert "congruences: 2" in out

    def test_unknown_algebra(self, run_cli, tmp_path):
        """Test a missing file is an input error."""
        code, _, err = run_cli("alg", "edges", str(tmp_path / "nope.txt"))
        assert code == 2
        assert "error: input-error: cannot read" in err


class TestAuditCommand:
    """Test the audit subcommand."""

    def test_explicit_input(self, run_cli):
        """Test one audit over a catalog algebra."""
        code, out, _ = run_cli("audit", "connectivity", "--seed", "1", "--input", "AFF2")
        assert code == 0
        assert out.startswith("connectivity pass ")

    def test_strict_input(self, run_cli):
        """Test explicit inputs that miss a hypothesis exit with code 2."""
        code, _, err = run_cli("audit", "maltsev-structure", "--seed", "1", "--input", "MAJ2")
        assert code == 2
        assert "error: hypothesis-violation: majority-free" in err

    def test_seed_required(self, run_cli):
        """Test sampling commands refuse to run without a seed."""
        code, out, err = run_cli("audit", "connectivity")
        assert code == 2
        assert out == ""
        assert "requires --seed" in err

    def test_unknown_audit(self, run_cli):
        """Test argparse rejects unknown audit ids."""
        with pytest.raises(SystemExit) as info:
            run_cli("audit", "nope", "--seed", "1")
        assert info.value.code == 2

    def test_deterministic(self, run_cli):
        """Test one seed gives one report."""
        first = run_cli("audit", "thin-soundness", "--seed", "4", "--random", "1")
        second = run_cli("audit", "thin-soundness", "--seed", "4", "--random", "1")
        assert first[0] == 0
        assert first[1] == second[1]

    def test_relation_file(self, run_cli, write):
        """Test relations are audited from files."""
        path = write("full.txt", file_service.dump_relation(full_relation([MAJ2, MAJ2])))
        code, out, _ = run_cli("audit", "rectangularity", "--seed", "0", "--input", path)
        assert code == 0
        assert out.startswith("rectangularity pass ")


class TestGeneratorCommands:
    """Test the gen subcommands."""

    def test_algebra(self, run_cli):
        """Test a filtered algebra is printed in the algebra format."""
        code, out, _ = run_cli("gen", "algebra", "--size", "2", "--filter", "affine-free", "--seed", "1")
        assert code == 0
        alg = file_service.parse_text(out).algebras["RAND"]
        assert EdgeType.AFFINE not in edge_service.edge_types(alg)

    def test_algebra_reproducible(self, run_cli):
        """Test one seed gives one algebra."""
        assert run_cli("gen", "algebra", "--size", "3", "--seed", "8")[1] == \
            run_cli("gen", "algebra", "--size", "3", "--seed", "8")[1]

    def test_size_one(self, run_cli):
        """Test the 1-element algebra passes every filter."""
        code, out, _ = run_cli("gen", "algebra", "--size", "1", "--filter", "semilattice-free", "--seed", "3")
        assert code == 0
        assert out.startswith("algebra RAND\nsize 1\n")

    def test_signature(self, run_cli):
        """Test --op replaces the default signature."""
        code, out, _ = run_cli("gen", "algebra", "--op", "m:3", "--seed", "1")
        assert code == 0
        alg = file_service.parse_text(out).algebras["RAND"]
        assert alg.signature == (("m", 3),)

    def test_bad_signature(self, run_cli):
        """Test malformed operations are usage errors."""
        with pytest.raises(SystemExit) as info:
            run_cli("gen", "algebra", "--op", "m", "--seed", "1")
        assert info.value.code == 2

    def test_seed_required(self, run_cli):
        """Test generators refuse to run without a seed."""
        assert run_cli("gen", "algebra")[0] == 2

    def test_relation(self, run_cli):
        """Test subdirect relations cover every value."""
        code, out, _ = run_cli("gen", "relation", "--over", "MAJ2", "MAJ2", "--subdirect", "--seed", "2")
        assert code == 0
        rel = file_service.parse_text(out).relations["R"]
        assert {t[0] for t in rel.tuples} == {0, 1}

    def test_instance_round_trip(self, run_cli, tmp_path):
        """Test a written instance loads, solves and re-emits identically."""
        target = tmp_path / "p.txt"
        code, out, _ = run_cli("gen", "instance", "--vars", "5", "--constraints", "6", "--seed", "2",
                               "--out", str(target))
        assert code == 0
        assert out == ""
        text = target.read_text(encoding="utf-8")
        assert file_service.dump_instance(file_service.load_instance(target)) == text
        code, out, _ = run_cli("csp", "solve", str(target), "--method", "brute")
        assert code in (0, 10)
        assert out.splitlines()[0] in ("SAT", "UNSAT")


class TestCspCommands:
    """Test the csp subcommands."""

    def test_solve_sat(self, run_cli, write, path):
        """Test the path prints SAT and a colouring."""
        code, out, _ = run_cli("csp", "solve", write("path.txt", file_service.dump_instance(path)))
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "SAT"
        assert [line.split(" = ")[0] for line in lines[1:]] == ["x", "y", "z"]

    def test_solve_unsat(self, run_cli, write, triangle):
        """Test the triangle prints UNSAT with exit code 10."""
        code, out, _ = run_cli("csp", "solve", write("tri.txt", file_service.dump_instance(triangle)))
        assert code == 10
        assert out == "UNSAT\n"

    def test_weak_restriction(self, run_cli, write, triangle):
        """Test the weak pre-check refutes the triangle."""
        target = write("tri.txt", file_service.dump_instance(triangle))
        assert run_cli("csp", "solve", target, "--weak-restriction")[0] == 10
        assert run_cli("csp", "solve", target, "--weak-restriction=false", "--method", "brute")[0] == 10

    def test_minimality(self, run_cli, write, path):
        """Test the fixpoint sizes of the path."""
        code, out, _ = run_cli("csp", "minimality", write("path.txt", file_service.dump_instance(path)))
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "MINIMAL"
        assert "x z: 2" in lines

    def test_minimality_weak_keeps_more(self, run_cli, write):
        """Test the weak restriction ignores a constraint wider than l."""
        text = ("instance W\nvar a MAJ2\nvar b MAJ2\nvar c MAJ2\nvar d MAJ2\n"
                "rel ZERO 4 MAJ2 MAJ2 MAJ2 MAJ2\n0 0 0 0\nconstraint ZERO a b c d\n")
        target = write("wide.txt", text)
        weak = run_cli("csp", "minimality", target, "--weak-restriction")[1].splitlines()
        strong = run_cli("csp", "minimality", target)[1].splitlines()
        assert weak[0] == strong[0] == "MINIMAL"
        assert "a: 2" in weak
        assert "a: 1" in strong

    def test_minimality_json(self, run_cli, write, triangle):
        """Test an empty fixpoint as JSON."""
        code, out, _ = run_cli("--json", "csp", "minimality", write("tri.txt", file_service.dump_instance(triangle)))
        assert code == 10
        assert json.loads(out)["empty"] is True

    def test_affine_domain(self, run_cli, write):
        """Test affine domains are a hypothesis violation."""
        text = "instance Q\nvar a AFF2\nvar b AFF2\nrel EQ 2 AFF2 AFF2\n0 0\n1 1\nconstraint EQ a b\n"
        code, _, err = run_cli("csp", "solve", write("q.txt", text))
        assert code == 2
        assert "hypothesis-violation" in err


class TestSubpowerCommands:
    """Test the subpower subcommands."""

    def test_sig(self, run_cli, write, even3):
        """Test the signature header of even parity."""
        code, out, _ = run_cli("subpower", "sig", write("even.txt", file_service.dump_relation(even3)))
        assert code == 0
        assert out.startswith("signature: ")
        assert "1 1 0" in out.splitlines()

    def test_rep(self, run_cli, write, even3):
        """Test the representation is a relation block headed by subset-of."""
        code, out, _ = run_cli("subpower", "rep", write("even.txt", file_service.dump_relation(even3)))
        assert code == 0
        doc = file_service.parse_text(out)
        assert doc.subset_of == {"EVEN_rep": "EVEN"}
        assert doc.relations["EVEN_rep"].tuples <= even3.tuples

    def test_semilattice_rejected(self, run_cli, write):
        """Test relations over SEMI2 exit with code 2."""
        path = write("semi.txt", file_service.dump_relation(full_relation([SEMI2, SEMI2])))
        code, _, err = run_cli("subpower", "sig", path)
        assert code == 2
        assert "semilattice-free" in err

    def test_audit(self, run_cli, write, even3):
        """Test the generation audit over a file."""
        code, out, _ = run_cli("subpower", "audit", write("even.txt", file_service.dump_relation(even3)),
                               "--samples", "3", "--seed", "5")
        assert code == 0
        assert out.startswith("representation-generates pass ")
