"""
Command-line entry point.
"""

import argparse
import logging
import sys
from typing import Optional

from pydantic import ValidationError

from colorgraph import __version__
from colorgraph.commands import EXIT_USAGE, register_all
from colorgraph.config import settings
from colorgraph.exceptions import ColorgraphError
from colorgraph.models import CommandConfig
from colorgraph.services.algebra import algebra_service
from colorgraph.services.edges import edge_service

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Coloured edge graphs, structural audits, subpower representations and a bounded-width CSP solver",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="Emit one JSON document instead of text")
    parser.add_argument("--closure-cap", type=int, default=settings.closure_cap)
    parser.add_argument("--work-cap", type=int, default=settings.closure_work_cap)
    parser.add_argument("--arity-cap", type=int, default=settings.term_arity_cap)
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging and witness dumps")
    register_all(parser.add_subparsers(dest="command", required=True))
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.logging_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )


def _main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    subcommand = " ".join(filter(None, (args.command, getattr(args, "action", None))))

    try:
        config = CommandConfig(
            subcommand=subcommand,
            seed=getattr(args, "seed", None),
            sampling=args.sampling,
            closure_cap=args.closure_cap,
            work_cap=args.work_cap,
            arity_cap=args.arity_cap,
            json_output=args.json,
            verbose=args.verbose,
        )
    except ValidationError as e:
        message = e.errors()[0]["msg"]
        logger.warning(f"Invalid options for {subcommand}: {message}")
        print(f"error: usage: {message}", file=sys.stderr)
        return EXIT_USAGE

    algebra_service.configure(config.closure_cap, config.work_cap, config.arity_cap)
    edge_service.clear()
    logger.debug(f"Running {subcommand} with caps {config.closure_cap}/{config.work_cap}/{config.arity_cap}")

    try:
        return args.func(args, config)
    except ColorgraphError as e:
        logger.warning(f"{subcommand}: {e.kind}: {e}")
        print(f"error: {e.kind}: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected error: {str(e)}", exc_info=True)
        print(f"error: internal: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
