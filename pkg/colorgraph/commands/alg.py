"""
Algebra subcommands: edge classification, graph export and summaries.
"""

import argparse
import logging

from ..models import CommandConfig, EdgeType, SELECTOR_TAGS
from ..services.algebra import algebra_service
from ..services.edges import edge_service
from ..services.fileio import file_service
from . import EXIT_OK, emit

logger = logging.getLogger(__name__)


def _type_set(types) -> str:
    order = [t.value for t in (EdgeType.SEMILATTICE, EdgeType.MAJORITY, EdgeType.AFFINE, EdgeType.UNARY)]
    return "{" + ",".join(t for t in order if EdgeType(t) in types) + "}"


def cmd_edges(args: argparse.Namespace, config: CommandConfig) -> int:
    """
    Classify every pair of an algebra.

    One line per witness, e.g. `01: semilattice (θ=eq)`, then `types: {s}`.
    """
    alg = file_service.load_algebra(args.algebra)
    graph = edge_service.thick_graph(alg)
    profile = edge_service.edge_profile(alg)
    logger.info(f"{alg.name}: {len(graph.thick)} witnesses, types {_type_set(profile.types)}")
    lines = [w.describe() for w in graph.thick]
    lines.append(f"types: {_type_set(profile.types)}")
    lines.append(f"smooth: {'yes' if profile.smooth else 'no'}")
    emit(config, lines, {"graph": graph, "profile": profile})
    return EXIT_OK


def cmd_graph(args: argparse.Namespace, config: CommandConfig) -> int:
    """DOT export, or a summary of the components of the selected thin graph."""
    alg = file_service.load_algebra(args.algebra)
    if args.dot:
        graph = edge_service.coloured_graph(alg)
        emit(config, edge_service.to_dot(graph), graph)
        return EXIT_OK
    view = edge_service.component_view(alg, args.selector)
    lines = [f"selector: {args.selector}"]
    lines.extend(f"component {i}: {' '.join(map(str, comp))}" for i, comp in enumerate(view.components))
    lines.append("max: " + " ".join(map(str, sorted(view.max_set))))
    if view.amax_set is not None:
        lines.append("amax: " + " ".join(map(str, sorted(view.amax_set))))
    if view.inconclusive:
        lines.append("inconclusive: thin arcs hit a cap")
    emit(config, lines, view)
    return EXIT_OK


def cmd_path(args: argparse.Namespace, config: CommandConfig) -> int:
    alg = file_service.load_algebra(args.algebra)
    path = edge_service.find_path(alg, args.source, args.target, SELECTOR_TAGS[args.selector],
                                  directed=not args.undirected)
    text = "none" if path is None else " -> ".join(map(str, path))
    emit(config, text, {"path": path})
    return EXIT_OK


def cmd_info(args: argparse.Namespace, config: CommandConfig) -> int:
    alg = file_service.load_algebra(args.algebra)
    profile = edge_service.edge_profile(alg)
    congruences = algebra_service.all_congruences(alg)
    module = algebra_service.module_structure(alg)
    lines = [
        f"name: {alg.name}",
        f"size: {alg.size}",
        "signature: " + " ".join(f"{name}/{arity}" for name, arity in alg.signature),
        f"congruences: {len(congruences)}",
        f"types: {_type_set(profile.types)}",
        f"smooth: {'yes' if profile.smooth else 'no'}",
        f"module: {module.status.value}",
    ]
    emit(config, lines, {"algebra": alg, "profile": profile, "congruences": congruences, "module": module})
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser("alg", help="Inspect and classify an algebra")
    commands = parser.add_subparsers(dest="action", required=True)

    edges = commands.add_parser("edges", help="Classify every pair")
    edges.add_argument("algebra", help="Catalog name or algebra file")
    edges.set_defaults(func=cmd_edges, sampling=False)

    graph = commands.add_parser("graph", help="Thin-arc graph as DOT or a component summary")
    graph.add_argument("algebra", help="Catalog name or algebra file")
    graph.add_argument("--dot", action="store_true", help="Emit DOT text")
    graph.add_argument("--selector", choices=sorted(SELECTOR_TAGS), default="s")
    graph.set_defaults(func=cmd_graph, sampling=False)

    path = commands.add_parser("path", help="Shortest thin path between two elements")
    path.add_argument("algebra", help="Catalog name or algebra file")
    path.add_argument("source", type=int)
    path.add_argument("target", type=int)
    path.add_argument("--selector", choices=sorted(SELECTOR_TAGS), default="asm")
    path.add_argument("--undirected", action="store_true")
    path.set_defaults(func=cmd_path, sampling=False)

    info = commands.add_parser("info", help="Size, signature, congruences and edge types")
    info.add_argument("algebra", help="Catalog name or algebra file")
    info.set_defaults(func=cmd_info, sampling=False)
