"""
CSP subcommands. `csp solve` prints SAT and one `v = a` line per variable, or UNSAT with exit code 10.
"""

import argparse
import logging

from ..models import CommandConfig
from ..services.csp import csp_service
from ..services.fileio import file_service
from . import EXIT_FAIL, EXIT_OK, emit

logger = logging.getLogger(__name__)


def _flag(value: str) -> bool:
    if value.lower() in ("true", "1", "yes"):
        return True
    if value.lower() in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {value}")


def cmd_solve(args: argparse.Namespace, config: CommandConfig) -> int:
    """
    Solve an instance file.

    With --weak-restriction the weak (k,l)-minimality fixpoint runs first; an
    empty fixpoint is a proof of unsatisfiability. The bounded-width recursion
    itself always uses the strong restriction.
    """
    instance = file_service.load_instance(args.instance)
    result = None
    refuted = False
    if args.method == "brute":
        result = csp_service.brute_force_solve(instance)
    else:
        if args.weak_restriction:
            outcome = csp_service.establish_minimality(instance, args.k, args.l, weak=True, order_seed=config.seed)
            refuted = outcome.empty
            logger.info(f"{instance.name}: weak minimality {'empties' if refuted else 'keeps'} the instance")
        if not refuted:
            result = csp_service.solve_bounded_width(instance, args.k, args.l)

    if result is None:
        emit(config, "UNSAT", {"instance": instance.name, "satisfiable": False})
        return EXIT_FAIL
    lines = ["SAT"] + [f"{v} = {result[v]}" for v in instance.variables]
    emit(config, lines, {"instance": instance.name, "satisfiable": True, "assignment": result.values})
    return EXIT_OK


def cmd_minimality(args: argparse.Namespace, config: CommandConfig) -> int:
    """Sizes of the partial-solution sets at the (k,l)-minimality fixpoint."""
    instance = file_service.load_instance(args.instance)
    outcome = csp_service.establish_minimality(instance, args.k, args.l, weak=args.weak_restriction,
                                               order_seed=config.seed)
    if outcome.empty:
        emptied = list(outcome.emptied or ())
        emit(config, " ".join(["EMPTY"] + emptied), {"instance": instance.name, "empty": True, "emptied": emptied})
        return EXIT_FAIL
    sets = outcome.strategy.sets
    keys = sorted(sets, key=lambda w: (len(w), w))
    lines = ["MINIMAL"] + [f"{' '.join(w)}: {len(sets[w])}" for w in keys]
    payload = {"instance": instance.name, "empty": False,
               "sets": {" ".join(w): sorted(list(t) for t in sets[w]) for w in keys}}
    emit(config, lines, payload)
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("csp", help="Local consistency and the bounded-width solver")
    commands = parser.add_subparsers(dest="action", required=True)

    def common(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("instance", help="Instance file")
        sub.add_argument("--k", type=int, default=None)
        sub.add_argument("--l", type=int, default=None)
        sub.add_argument("--weak-restriction", type=_flag, nargs="?", const=True, default=False,
                         help="Only constraints inside W restrict S_W")
        sub.add_argument("--seed", type=int, help="Shuffle the processing order of the pruning steps")

    solve = commands.add_parser("solve", help="Decide an instance and print a solution")
    common(solve)
    solve.add_argument("--method", choices=("bw", "brute"), default="bw")
    solve.set_defaults(func=cmd_solve, sampling=False)

    minimality = commands.add_parser("minimality", help="Establish (k,l)-minimality")
    common(minimality)
    minimality.set_defaults(func=cmd_minimality, sampling=False)
