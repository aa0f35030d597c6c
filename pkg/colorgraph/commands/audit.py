"""
Audit subcommand: one verdict line `<id> <verdict> <cases>` per audit.
"""

import argparse
import logging

from ..models import CommandConfig
from ..services.audit import AUDIT_IDS, audit_service
from ..services.catalog import ALGEBRAS
from ..services.fileio import file_service
from . import emit, reports_exit

logger = logging.getLogger(__name__)


def _inputs(refs: list[str]):
    """Algebras and relations named by catalog names or contained in files."""
    algebras, relations = [], []
    for ref in refs:
        if ref in ALGEBRAS:
            algebras.append(ALGEBRAS[ref])
            continue
        doc = file_service.load(ref)
        algebras.extend(doc.algebras.values())
        relations.extend(doc.relations.values())
    return algebras, relations


def cmd_audit(args: argparse.Namespace, config: CommandConfig) -> int:
    """
    Run one audit or all of them.

    Without inputs the corpus is the catalog plus seeded random members and
    inputs that miss a hypothesis are skipped. Explicit inputs are audited
    strictly: a missed hypothesis is an error.
    """
    if args.input:
        algebras, relations = _inputs(args.input)
        ids = AUDIT_IDS if args.name == "all" else (args.name,)
        reports = [audit_service.run(i, algebras, relations, args.samples, config.seed, strict=True) for i in ids]
    elif args.name == "all":
        reports = audit_service.audit_all(args.samples, config.seed, args.random)
    else:
        algebras, relations = audit_service.corpus(config.seed, args.random)
        reports = [audit_service.run(args.name, algebras, relations, args.samples, config.seed)]

    lines = [r.line() for r in reports]
    if config.verbose:
        for r in reports:
            for w in r.witnesses:
                lines.append(f"# {r.theorem} {w.kind}: {w.description} {w.data}")
            if r.reason:
                lines.append(f"# {r.theorem} skipped: {r.reason}")
    logger.info(f"{len(reports)} audits, seed {config.seed}")
    emit(config, lines, {"seed": config.seed, "reports": reports})
    return reports_exit(reports)


def register(subparsers) -> None:
    parser = subparsers.add_parser("audit", help="Run structural audits")
    parser.add_argument("name", choices=AUDIT_IDS + ("all",), help="Audit id or 'all'")
    parser.add_argument("--samples", type=int, default=10, help="Samples per randomised audit")
    parser.add_argument("--seed", type=int, help="Seed of the corpus and the samplers")
    parser.add_argument("--random", type=int, default=2, help="Random algebras added to the corpus")
    parser.add_argument("--input", nargs="+", metavar="REF", help="Catalog names or files to audit instead")
    parser.set_defaults(func=cmd_audit, sampling=True)
