"""
Generator subcommands. Every component draws from its own child of one SeedSequence.
"""

import argparse
import logging
from pathlib import Path

from ..exceptions import InputError
from ..models import CommandConfig
from ..services.fileio import file_service
from ..services.generator import DEFAULT_SIGNATURE, FILTERS, generator_service, spawn
from . import EXIT_OK, emit

logger = logging.getLogger(__name__)


def _write(args: argparse.Namespace, config: CommandConfig, text: str, payload) -> None:
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot write {args.out}: {e.strerror}") from None
        logger.info(f"Wrote {args.out}")
        return
    emit(config, text, payload)


def _operation(value: str) -> tuple[str, int]:
    name, _, arity = value.partition(":")
    if not name or not arity.isdigit() or int(arity) < 1:
        raise argparse.ArgumentTypeError(f"expected NAME:ARITY, got {value}")
    return name, int(arity)


def cmd_algebra(args: argparse.Namespace, config: CommandConfig) -> int:
    rng = spawn(config.seed, 1)[0]
    signature = tuple(args.op) if args.op else DEFAULT_SIGNATURE
    if len({name for name, _ in signature}) != len(signature):
        raise InputError("operation names must be distinct")
    alg = generator_service.random_algebra(rng, args.size, signature=signature, filters=args.filter,
                                           conservative=args.conservative, name=args.name)
    _write(args, config, file_service.dump_algebra(alg), alg)
    return EXIT_OK


def cmd_relation(args: argparse.Namespace, config: CommandConfig) -> int:
    components = [file_service.load_algebra(ref) for ref in args.over]
    rng = spawn(config.seed, 1)[0]
    if args.subdirect:
        rel = generator_service.random_subdirect_relation(rng, components, args.generators, name=args.name)
    else:
        rel = generator_service.random_relation(rng, components, args.generators, name=args.name)
    _write(args, config, file_service.dump_relation(rel), rel)
    return EXIT_OK


def cmd_instance(args: argparse.Namespace, config: CommandConfig) -> int:
    """Random domains D0.. (or the given algebras) and constraints generated by random tuples."""
    rngs = spawn(config.seed, args.domains + 1)
    if args.over:
        domains = [file_service.load_algebra(ref) for ref in args.over]
    else:
        domains = [generator_service.random_algebra(rngs[i], args.domain_size, filters=args.filter,
                                                    name=f"D{i}") for i in range(args.domains)]
    instance = generator_service.random_instance(rngs[-1], domains, args.vars, args.constraints,
                                                 args.max_arity, args.generators, name=args.name)
    _write(args, config, file_service.dump_instance(instance), instance)
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="Generate random algebras, relations and instances")
    commands = parser.add_subparsers(dest="action", required=True)

    def common(sub: argparse.ArgumentParser, name: str) -> None:
        sub.add_argument("--seed", type=int, help="Seed of the generator")
        sub.add_argument("--name", default=name)
        sub.add_argument("--out", help="Write to this file instead of stdout")

    algebra = commands.add_parser("algebra", help="A random idempotent algebra in the signature f/2, g/3")
    algebra.add_argument("--size", type=int, default=2)
    algebra.add_argument("--op", action="append", type=_operation, metavar="NAME:ARITY",
                         help="Operation of the signature, repeatable (default f:2 g:3)")
    algebra.add_argument("--filter", action="append", choices=FILTERS, default=[])
    algebra.add_argument("--conservative", action="store_true", help="Every value is one of the arguments")
    common(algebra, "RAND")
    algebra.set_defaults(func=cmd_algebra, sampling=True)

    relation = commands.add_parser("relation", help="Sg of random tuples in a product")
    relation.add_argument("--over", nargs="+", required=True, metavar="ALG")
    relation.add_argument("--generators", type=int, default=2)
    relation.add_argument("--subdirect", action="store_true", help="Add tuples until every value occurs")
    common(relation, "R")
    relation.set_defaults(func=cmd_relation, sampling=True)

    instance = commands.add_parser("instance", help="A random algebraic CSP instance")
    instance.add_argument("--vars", type=int, default=4)
    instance.add_argument("--constraints", type=int, default=4)
    instance.add_argument("--max-arity", type=int, default=3)
    instance.add_argument("--generators", type=int, default=2)
    instance.add_argument("--domains", type=int, default=2, help="Number of random domain algebras")
    instance.add_argument("--domain-size", type=int, default=2)
    instance.add_argument("--filter", action="append", choices=FILTERS, default=[])
    instance.add_argument("--over", nargs="+", metavar="ALG", help="Use these algebras as domains")
    common(instance, "P")
    instance.set_defaults(func=cmd_instance, sampling=True)
