"""Service layer initialization."""

from .algebra import (
    algebra_service,
    sg_closure,
    cg_congruence,
    all_congruences,
    quotient,
    product,
    term_exists,
    generate_relation,
    relation_algebra,
    link_congruence,
    is_linked
)
from .catalog import ALGEBRAS, get_algebra, parity_relation, identity_graph, full_relation, disequality
from .edges import (
    edge_service,
    classify_pair,
    edge_profile,
    thin_semilattice_arcs,
    thin_majority_arcs,
    thin_affine_arcs,
    coloured_graph,
    component_view,
    find_path,
    maltsev_edge,
    dot_operation,
    to_dot
)
from .subpower import subpower_service, signature_of, is_representation, minimal_representation, has_edge_term
from .csp import (
    csp_service,
    establish_minimality,
    solve_bounded_width,
    brute_force_solve,
    verify_solution
)
from .generator import generator_service, spawn, random_algebra, random_relation, random_instance
from .fileio import file_service, parse_text, load_algebra, load_relation, load_instance
from .audit import audit_service, AUDIT_IDS, run_audit, audit_all, is_almost_trivial

__all__ = [
    "algebra_service",
    "sg_closure",
    "cg_congruence",
    "all_congruences",
    "quotient",
    "product",
    "term_exists",
    "generate_relation",
    "relation_algebra",
    "link_congruence",
    "is_linked",
    "ALGEBRAS",
    "get_algebra",
    "parity_relation",
    "identity_graph",
    "full_relation",
    "disequality",
    "edge_service",
    "classify_pair",
    "edge_profile",
    "thin_semilattice_arcs",
    "thin_majority_arcs",
    "thin_affine_arcs",
    "coloured_graph",
    "component_view",
    "find_path",
    "maltsev_edge",
    "dot_operation",
    "to_dot",
    "subpower_service",
    "signature_of",
    "is_representation",
    "minimal_representation",
    "has_edge_term",
    "csp_service",
    "establish_minimality",
    "solve_bounded_width",
    "brute_force_solve",
    "verify_solution",
    "generator_service",
    "spawn",
    "random_algebra",
    "random_relation",
    "random_instance",
    "file_service",
    "parse_text",
    "load_algebra",
    "load_relation",
    "load_instance",
    "audit_service",
    "AUDIT_IDS",
    "run_audit",
    "audit_all",
    "is_almost_trivial"
]
