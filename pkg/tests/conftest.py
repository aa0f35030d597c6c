"""Test configuration and fixtures for pytest."""

import pytest

from colorgraph.main import _main
from colorgraph.models import Constraint, CspInstance, Relation
from colorgraph.services.catalog import AFF2, AFF3, MAJ2, PROJ2, RPS3, SEMI2, TRIVIAL, disequality, parity_relation


@pytest.fixture
def semi2():
    return SEMI2


@pytest.fixture
def maj2():
    return MAJ2


@pytest.fixture
def aff2():
    return AFF2


@pytest.fixture
def aff3():
    return AFF3


@pytest.fixture
def proj2():
    return PROJ2


@pytest.fixture
def rps3():
    return RPS3


@pytest.fixture
def trivial():
    return TRIVIAL


@pytest.fixture
def even3():
    """Even-parity tuples over AFF2^3."""
    return parity_relation(AFF2, 3)


def _neq_instance(name: str, edges: list[tuple[str, str]], variables: tuple[str, ...]) -> CspInstance:
    neq = disequality(MAJ2)
    return CspInstance(
        name=name,
        variables=variables,
        domains={v: MAJ2 for v in variables},
        constraints=tuple(Constraint(scope=e, relation=neq) for e in edges),
    )


@pytest.fixture
def triangle():
    """2-colouring of a triangle over MAJ2: unsatisfiable."""
    return _neq_instance("triangle", [("x", "y"), ("y", "z"), ("x", "z")], ("x", "y", "z"))


@pytest.fixture
def path():
    """2-colouring of a path over MAJ2: satisfiable."""
    return _neq_instance("path", [("x", "y"), ("y", "z")], ("x", "y", "z"))


@pytest.fixture
def chain():
    """x <= y <= z over SEMI2 with x forced to 1."""
    leq = Relation(name="LEQ", arity=2, components=(SEMI2, SEMI2), tuples=frozenset({(0, 0), (0, 1), (1, 1)}))
    one = Relation(name="ONE", arity=1, components=(SEMI2,), tuples=frozenset({(1,)}))
    return CspInstance(
        name="chain",
        variables=("x", "y", "z"),
        domains={v: SEMI2 for v in "xyz"},
        constraints=(
            Constraint(scope=("x", "y"), relation=leq),
            Constraint(scope=("y", "z"), relation=leq),
            Constraint(scope=("x",), relation=one),
        ),
    )


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process and return (exit code, stdout, stderr)."""
    def run(*argv: str):
        code = _main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run
