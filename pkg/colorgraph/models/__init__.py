"""Pydantic models for algebras, graphs, audits, subpowers and CSP instances."""

from .algebra import (
    OperationTable,
    FiniteAlgebra,
    Congruence,
    ModuleStructure,
    Relation,
    mixed_radix
)
from .term import SearchStatus, Term, TermResult, AffinityViolation, ModuleSearchResult
from .graph import (
    EdgeType,
    EdgeWitness,
    ArcSet,
    ThinArc,
    TypedGraph,
    ComponentView,
    EdgeProfile,
    ClassMember,
    Selector,
    SELECTOR_TAGS
)
from .audit import Verdict, AuditWitness, AuditReport, AlmostTrivialDecomposition
from .subpower import Signature, Representation, RepresentationCheck
from .csp import Constraint, CspInstance, Strategy, Assignment, MinimalityOutcome
from .command import CommandConfig
from .document import Document

__all__ = [
    "OperationTable",
    "FiniteAlgebra",
    "Congruence",
    "ModuleStructure",
    "Relation",
    "mixed_radix",
    "SearchStatus",
    "Term",
    "TermResult",
    "AffinityViolation",
    "ModuleSearchResult",
    "EdgeType",
    "EdgeWitness",
    "ArcSet",
    "ThinArc",
    "TypedGraph",
    "ComponentView",
    "EdgeProfile",
    "ClassMember",
    "Selector",
    "SELECTOR_TAGS",
    "Verdict",
    "AuditWitness",
    "AuditReport",
    "AlmostTrivialDecomposition",
    "Signature",
    "Representation",
    "RepresentationCheck",
    "Constraint",
    "CspInstance",
    "Strategy",
    "Assignment",
    "MinimalityOutcome",
    "CommandConfig",
    "Document"
]
