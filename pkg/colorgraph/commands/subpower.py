"""
Subpower subcommands: signatures, representations and the generation audit.
"""

import argparse
import logging

from ..models import CommandConfig
from ..services.fileio import file_service
from ..services.subpower import subpower_service
from . import EXIT_OK, emit, reports_exit

logger = logging.getLogger(__name__)


def cmd_sig(args: argparse.Namespace, config: CommandConfig) -> int:
    rel = file_service.load_relation(args.relation)
    signature = subpower_service.signature_of(rel)
    lines = [f"signature: {len(signature)} entries, bound {subpower_service.bound(rel, signature)}"]
    lines.extend(f"{i} {a} {b}" for i, a, b in signature.sorted_entries())
    emit(config, lines, signature)
    return EXIT_OK


def cmd_rep(args: argparse.Namespace, config: CommandConfig) -> int:
    """The minimal representation as a relation block headed by subset-of."""
    rel = file_service.load_relation(args.relation)
    rep = subpower_service.minimal_representation(rel)
    emit(config, file_service.dump_representation(rep), rep)
    return EXIT_OK


def cmd_audit(args: argparse.Namespace, config: CommandConfig) -> int:
    rel = file_service.load_relation(args.relation)
    report = subpower_service.audit_representation_generates(rel, args.samples, config.seed, strict=True)
    emit(config, report.line(), report)
    return reports_exit([report])


def register(subparsers) -> None:
    parser = subparsers.add_parser("subpower", help="Compact representations of subpowers")
    commands = parser.add_subparsers(dest="action", required=True)

    sig = commands.add_parser("sig", help="Signature of a relation and the representation size bound")
    sig.add_argument("relation", help="Relation file")
    sig.set_defaults(func=cmd_sig, sampling=False)

    rep = commands.add_parser("rep", help="Minimal representation")
    rep.add_argument("relation", help="Relation file")
    rep.set_defaults(func=cmd_rep, sampling=False)

    audit = commands.add_parser("audit", help="Random representations generate the relation")
    audit.add_argument("relation", help="Relation file")
    audit.add_argument("--samples", type=int, default=10)
    audit.add_argument("--seed", type=int)
    audit.set_defaults(func=cmd_audit, sampling=True)
