"""
CLI Commands
Subcommand parsers and handlers for the rainbowindex command line
"""

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO

from rainbowindex.domain.entities.domain_entities import (
    ClassLabel,
    Coloring,
    Graph,
    SteinerQuery,
    SweepMode,
)
from rainbowindex.domain.services.graph_structure_service import edge_order
from rainbowindex.domain.services.rainbow_verifier import is_k_rainbow
from rainbowindex.domain.services.steiner_service import enumerate_trees, steiner_distance
from rainbowindex.infrastructure.config.dependency_container import Container
from rainbowindex.shared.exceptions.custom_exceptions import RainbowIndexException
from rainbowindex.shared.exceptions.domain_exceptions import SearchBudgetExceededError
from rainbowindex.shared.utils.logger_utility import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3

Handler = Callable[[argparse.Namespace, Container, TextIO], int]


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with the documented exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(out: TextIO, payload: Dict[str, Any]) -> None:
    out.write(json.dumps(payload, indent=2) + "\n")


def _terminal_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}")


def _coloring_payload(graph: Graph, coloring: Coloring) -> Dict[str, Any]:
    return {
        "q": coloring.q,
        "colors": list(coloring.colors),
        "color_count": coloring.color_count,
        "edges": [list(e) for e in edge_order(graph)],
    }


def _label_payload(label: ClassLabel) -> Dict[str, Any]:
    return {
        "bucket": label.bucket.value,
        "reason": label.reason.value,
        "value": label.value,
        "entry_id": label.entry_id,
        "isomorphism": list(label.isomorphism) if label.isomorphism is not None else None,
        "predicted_value": label.predicted_value,
        "description": label.describe(),
    }


def cmd_rx(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    graph = container.codec().decode(args.g6)
    result = container.solver().rx_exact(graph, args.k)
    payload: Dict[str, Any] = {
        "graph6": args.g6,
        "k": result.k,
        "status": result.status.value,
        "value": result.value,
        "lower": result.lower,
        "upper": result.upper,
        "nodes": result.stats.nodes,
        "proof": result.stats.proof,
    }
    if result.coloring is not None:
        payload["coloring"] = _coloring_payload(graph, result.coloring)
    _emit(out, payload)
    return EXIT_OK if result.solved else EXIT_BUDGET


def cmd_classify(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    graph = container.codec().decode(args.g6)
    label = container.classifier().classify_rx3(graph)
    _emit(out, {"graph6": args.g6, "n": label.n, **_label_payload(label)})
    return EXIT_OK


def cmd_color(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    graph = container.codec().decode(args.g6)
    service = container.coloring_service()
    recipe_id: Optional[str] = None
    if args.mode == "table":
        constructed = service.color_outside_class(graph)
        coloring, method, recipe_id = constructed.coloring, constructed.method.value, constructed.recipe_id
    elif args.mode == "partition":
        coloring, method = service.partition_upper_bound(graph), "partition"
    else:
        coloring, method = service.optimal_coloring(graph), "optimal"

    if args.out:
        container.coloring_repository().save(args.out, graph, coloring, k=3, method=method)

    _emit(
        out,
        {
            "graph6": args.g6,
            "mode": args.mode,
            "method": method,
            "recipe_id": recipe_id,
            **_coloring_payload(graph, coloring),
        },
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    graph = container.codec().decode(args.g6)
    stored_graph, coloring = container.coloring_repository().load(args.coloring)
    if stored_graph != graph:
        _emit(out, {"graph6": args.g6, "ok": False, "error": "coloring file belongs to another graph"})
        return EXIT_MISMATCH

    verdict = is_k_rainbow(graph, coloring, args.k)
    _emit(
        out,
        {
            "graph6": args.g6,
            "k": args.k,
            "ok": verdict.ok,
            "color_count": coloring.color_count,
            "failing_set": list(verdict.failing_set) if verdict.failing_set else None,
        },
    )
    return EXIT_OK if verdict.ok else EXIT_MISMATCH


def cmd_steiner(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    graph = container.codec().decode(args.g6)
    distance = steiner_distance(graph, args.set)
    trees = list(enumerate_trees(SteinerQuery(graph, frozenset(args.set), distance)))
    _emit(
        out,
        {
            "graph6": args.g6,
            "set": sorted(args.set),
            "distance": distance,
            "minimal_trees": len(trees),
            "tree": [list(e) for e in sorted(trees[0])] if trees else [],
        },
    )
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    mode = SweepMode.FULL if args.full else SweepMode.CLASSIFY_ONLY
    report = container.sweep_service().sweep(args.n, mode)
    container.report_repository().write_sweep(args.out, report)
    _emit(
        out,
        {
            "n_max": report.n_max,
            "mode": report.mode.value,
            "out": str(args.out),
            "summary": report.summary,
            "mismatches": report.mismatches,
            "budget_exhausted": report.budget_exhausted,
        },
    )
    if report.mismatches:
        return EXIT_MISMATCH
    if report.budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    family = container.extremal_service().reconstruct_extremal(args.n)
    if args.out:
        container.report_repository().write_extremal(args.out, family)
    _emit(
        out,
        {
            "n": family.n,
            "members": family.members,
            "maximal": family.maximal,
            "hosts": family.hosts,
        },
    )
    return EXIT_OK


def cmd_calibrate(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    report = container.calibration_service().calibrate_catalog()
    if args.out:
        container.report_repository().write_calibration(args.out, report)
    _emit(
        out,
        {
            "ok": report.ok,
            "results": [
                {
                    "entry_id": r.entry_id,
                    "status": r.status,
                    "graphs_checked": r.graphs_checked,
                    "witnesses_checked": r.witnesses_checked,
                    "consistent_candidates": r.consistent_candidates,
                }
                for r in report.results
            ],
        },
    )
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_catalog(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    entries = list(container.catalog())
    written = container.catalog_repository().export(args.export, entries)
    _emit(out, {"entries": [e.entry_id for e in entries], "files": [str(p) for p in written]})
    return EXIT_OK


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="rainbowindex",
        description="Exact 3-rainbow index computation, classification and constructive colorings.",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        type=str.upper,
        default=None,
        help="Log level for stderr output (default from RAINBOW_LOG_LEVEL).",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    rx = commands.add_parser("rx", help="Exact rx_k with witness coloring.")
    rx.add_argument("--g6", required=True, help="Graph in graph6 format.")
    rx.add_argument("-k", type=int, default=3, help="Terminal set size (default: 3).")
    rx.add_argument("--budget", type=int, default=None, help="Search node budget.")
    rx.set_defaults(handler=cmd_rx)

    classify = commands.add_parser("classify", help="Decide the rx_3 bucket.")
    classify.add_argument("--g6", required=True)
    classify.set_defaults(handler=cmd_classify)

    color = commands.add_parser("color", help="Build a 3-rainbow coloring.")
    color.add_argument("--g6", required=True)
    color.add_argument("--mode", choices=["table", "partition", "optimal"], default="table")
    color.add_argument("--out", default=None, help="Write the coloring as JSON.")
    color.set_defaults(handler=cmd_color)

    verify = commands.add_parser("verify", help="Check a stored coloring.")
    verify.add_argument("--g6", required=True)
    verify.add_argument("--coloring", required=True, help="Coloring JSON file.")
    verify.add_argument("-k", type=int, default=3)
    verify.set_defaults(handler=cmd_verify)

    steiner = commands.add_parser("steiner", help="Steiner distance of a vertex set.")
    steiner.add_argument("--g6", required=True)
    steiner.add_argument("--set", required=True, type=_terminal_list, help="Vertices, e.g. 0,2,5.")
    steiner.set_defaults(handler=cmd_steiner)

    sweep = commands.add_parser("sweep", help="Classifier sweep over all connected graphs.")
    sweep.add_argument("--n", required=True, type=int, help="Largest order.")
    sweep.add_argument("--full", action="store_true", help="Also run the exact solver.")
    sweep.add_argument("--out", required=True, help="Report path (.csv or .json).")
    sweep.add_argument("--workers", type=int, default=None, help="Worker processes.")
    sweep.set_defaults(handler=cmd_sweep)

    extremal = commands.add_parser("extremal", help="2-edge-connected graphs with rx_3 = n-2.")
    extremal.add_argument("--n", required=True, type=int)
    extremal.add_argument("--out", default=None)
    extremal.set_defaults(handler=cmd_extremal)

    calibrate = commands.add_parser("calibrate", help="Calibrate reconstructed catalog entries.")
    calibrate.add_argument("--out", default=None)
    calibrate.set_defaults(handler=cmd_calibrate)

    catalog = commands.add_parser("catalog", help="Export the catalog.")
    catalog.add_argument("--export", required=True, metavar="DIR")
    catalog.set_defaults(handler=cmd_catalog)

    return parser


def run_command(args: argparse.Namespace, container: Container, out: TextIO) -> int:
    """Run one parsed subcommand and map library errors to exit codes."""
    handler: Handler = args.handler
    try:
        return handler(args, container, out)
    except SearchBudgetExceededError as e:
        logger.warning("cli.budget_exhausted", command=args.command, **e.details)
        _emit(out, {"error": e.to_dict()})
        return EXIT_BUDGET
    except RainbowIndexException as e:
        logger.error("cli.failed", command=args.command, error_type=e.error_type, message=e.message)
        _emit(out, {"error": e.to_dict()})
        return e.exit_code
