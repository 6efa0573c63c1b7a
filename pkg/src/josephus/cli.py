"""Command Line Interface for the josephus package.

Solvers, kill traces, the equivalence check between the circle and the
imperative models, internal diagrams, operation-count benchmarks and the
literate tangle/weave pipeline. Results go to stdout (or --output),
diagnostics to stderr.

Exit codes: 0 success, 1 domain failure or counterexample, 2 usage error.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .benchmarks.harness import Benchmark, geometric_sizes
from .config import (
    BENCH_COUNT,
    BENCH_FACTOR,
    BENCH_START,
    DEFAULT_M,
    DEFAULT_N,
    DEMO_M,
    DEMO_UNIVERSE,
    DIAGRAM_CAP,
    RunConfig,
    color_enabled,
)
from .data.fetcher import DocumentFetcher
from .dynamics.states import READINGS, demonstration_systems, verify_equivalence
from .errors import JosephusError
from .literate.document import list_chunks, parse
from .literate.tangle import tangle
from .literate.weave import weave
from .log import set_verbosity, setup_logger
from .solvers.problem import Problem
from .solvers.registry import SOLVERS, get_solver
from .visualization.diagram import export_internal_diagram, read_dot
from .visualization.formatting import format_kill_sequence, format_table, format_verdict, to_json

# Module logger
logger = setup_logger(__name__)

ORDER_SOLVERS = [name for name, info in SOLVERS.items() if info.produces_order]
STATE_SOLVERS = [name for name, info in SOLVERS.items() if info.records_states]


def positive_int(text: str) -> int:
    """argparse type for parameters that must be at least 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def create_parser() -> argparse.ArgumentParser:
    """
    Create and configure the argument parser for the josephus CLI.

    Returns:
        argparse.ArgumentParser: Configured argument parser
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log progress to stderr (-vv for debug)")
    common.add_argument("-o", "--output", default=None, help="Write the result to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="josephus",
        description="Josephus problem solvers, dynamical system checks and a literate tangle/weave pipeline",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # solve command
    solve_parser = subparsers.add_parser("solve", parents=[common], help="Print the survivor")
    solve_parser.add_argument("-n", type=positive_int, default=DEFAULT_N, help=f"Number of prisoners (default: {DEFAULT_N})")
    solve_parser.add_argument("-m", type=positive_int, default=DEFAULT_M, help=f"Kill every m-th prisoner (default: {DEFAULT_M})")
    solve_parser.add_argument("-a", "--algorithm", choices=list(SOLVERS), default=None,
                              help="Solver (default: recurrence, or order-statistic with --order)")
    solve_parser.add_argument("--order", dest="show_order", action="store_true", help="Also print the elimination order")
    solve_parser.add_argument("--format", dest="output_format", choices=["text", "json"], default="text")

    # trace command
    trace_parser = subparsers.add_parser("trace", parents=[common], help="Record the elimination kill by kill")
    trace_parser.add_argument("-n", type=positive_int, default=DEMO_UNIVERSE, help=f"Number of prisoners (default: {DEMO_UNIVERSE})")
    trace_parser.add_argument("-m", type=positive_int, default=DEMO_M, help=f"Kill every m-th prisoner (default: {DEMO_M})")
    trace_parser.add_argument("-a", "--algorithm", choices=ORDER_SOLVERS, default="imperative")
    trace_parser.add_argument("--states", dest="show_states", action="store_true",
                              help=f"Include the solver state after each kill ({', '.join(STATE_SOLVERS)} only)")
    trace_parser.add_argument("--format", dest="output_format", choices=["text", "json", "csv"], default="json")

    # verify command
    verify_parser = subparsers.add_parser("verify", parents=[common],
                                          help="Check that the circle and imperative models are isomorphic")
    verify_parser.add_argument("--universe", type=positive_int, default=DEMO_UNIVERSE,
                               help=f"Labels 1..universe are enumerated (default: {DEMO_UNIVERSE})")
    verify_parser.add_argument("-m", type=positive_int, default=DEMO_M, help=f"Kill step (default: {DEMO_M})")
    verify_parser.add_argument("--reading", choices=READINGS, default="kill-step",
                               help="Which step function the two models are compared under")
    verify_parser.add_argument("-j", "--jobs", type=positive_int, default=1, help="Worker processes for the checks")
    verify_parser.add_argument("--format", dest="output_format", choices=["json", "text"], default="json")

    # diagram command
    diagram_parser = subparsers.add_parser("diagram", parents=[common], help="Export an internal diagram as DOT")
    diagram_parser.add_argument("--universe", type=positive_int, default=2, help="Labels 1..universe (default: 2)")
    diagram_parser.add_argument("-m", type=positive_int, default=DEMO_M, help=f"Kill step (default: {DEMO_M})")
    diagram_parser.add_argument("--system", choices=["h", "p"], default="h", help="System to draw without --map")
    diagram_parser.add_argument("--map", dest="with_map", action="store_true",
                                help="Draw both systems and the canonical map between them")
    diagram_parser.add_argument("--reachable", action="store_true", help="Only states reachable from the start circle")
    diagram_parser.add_argument("--reading", choices=READINGS, default="kill-step")
    diagram_parser.add_argument("--cap", type=positive_int, default=DIAGRAM_CAP,
                                help=f"Maximum number of drawn states (default: {DIAGRAM_CAP})")
    diagram_parser.add_argument("--check", action="store_true", help="Re-parse the DOT text before writing it")

    # bench command
    bench_parser = subparsers.add_parser("bench", parents=[common], help="Tabulate operation counters")
    bench_parser.add_argument("--start", type=positive_int, default=BENCH_START)
    bench_parser.add_argument("--factor", type=positive_int, default=BENCH_FACTOR)
    bench_parser.add_argument("--count", type=positive_int, default=BENCH_COUNT)
    bench_parser.add_argument("-m", type=positive_int, default=DEFAULT_M)
    bench_parser.add_argument("--solvers", nargs="+", choices=list(SOLVERS), default=None)
    bench_parser.add_argument("--wall", action="store_true", help="Also record wall clock seconds")
    bench_parser.add_argument("--format", dest="output_format", choices=["text", "csv", "json"], default="text")

    # literate commands
    tangle_parser = subparsers.add_parser("tangle", parents=[common], help="Extract the program from a literate file")
    tangle_parser.add_argument("source", help="Literate file, or the name of a bundled one (e.g. romans.py.web)")
    tangle_parser.add_argument("--root", default=None, help="Chunk to expand (default: the unreferenced chunk)")

    weave_parser = subparsers.add_parser("weave", parents=[common], help="Render a literate file as markdown")
    weave_parser.add_argument("source", help="Literate file, or the name of a bundled one")

    chunks_parser = subparsers.add_parser("chunks", parents=[common], help="List the chunks of a literate file")
    chunks_parser.add_argument("source", help="Literate file, or the name of a bundled one")
    chunks_parser.add_argument("--format", dest="output_format", choices=["text", "csv", "json"], default="text")

    return parser


def emit(text: str, output: Optional[str] = None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    Path(output).write_text(text, encoding="utf-8", newline="\n")
    logger.info("wrote %s", output)


def handle_solve(config: RunConfig, parser: argparse.ArgumentParser) -> int:
    name = config.algorithm or ("order-statistic" if config.show_order else "recurrence")
    solver = get_solver(name)
    if config.show_order and not solver.produces_order:
        parser.error(f"--order needs a solver that produces the order, not {name!r}")
    problem = Problem(config.n, config.m)
    result = solver.run(problem)
    survivor = result.survivor if solver.produces_order else result
    if config.output_format == "json":
        data = {"n": config.n, "m": config.m, "algorithm": name, "survivor": survivor}
        if config.show_order:
            data["order"] = list(result.order)
        emit(to_json(data), config.output)
    elif config.show_order:
        emit(f"order: {' '.join(str(label) for label in result.order)}\nsurvivor: {survivor}\n", config.output)
    else:
        emit(f"{survivor}\n", config.output)
    return 0


def handle_trace(config: RunConfig, parser: argparse.ArgumentParser) -> int:
    solver = get_solver(config.algorithm)
    if config.show_states and not solver.records_states:
        parser.error(f"--states needs one of {', '.join(STATE_SOLVERS)}")
    problem = Problem(config.n, config.m)
    if config.show_states:
        sequence = solver.function(problem, record_states=True)
    else:
        sequence = solver.run(problem)
    emit(format_kill_sequence(sequence, config.output_format, include_states=config.show_states), config.output)
    return 0


def handle_verify(config: RunConfig) -> int:
    verdict = verify_equivalence(config.universe, config.m, config.reading, config.jobs)
    color = config.output is None and color_enabled(sys.stdout)
    emit(format_verdict(verdict, config.output_format, color=color), config.output)
    return 0 if verdict["isomorphism"] else 1


def handle_diagram(config: RunConfig, check: bool = False) -> int:
    demo = demonstration_systems(config.universe, config.m, config.reading)
    if config.reachable:
        h, p, mapping = demo.h_reachable, demo.p_reachable, demo.f_reachable
    else:
        h, p, mapping = demo.h, demo.p, demo.f
    if config.with_map:
        text = export_internal_diagram([h, p], mapping, cap=config.cap)
    else:
        text = export_internal_diagram(h if config.system == "h" else p, cap=config.cap)
    if check:
        graph = read_dot(text)
        logger.info("diagram check: %d nodes, %d edges", len(graph.nodes), len(graph.edges))
    emit(text, config.output)
    return 0


def handle_bench(config: RunConfig) -> int:
    benchmark = Benchmark(m=config.m, solvers=config.solvers or None, wall=config.wall)
    frame = benchmark.run(config.sizes)
    emit(format_table(frame, config.output_format), config.output)
    return 0


def load_document(source: str):
    return parse(DocumentFetcher().fetch(source))


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the josephus CLI.

    Args:
        argv (Optional[list[str]]): Command line arguments (defaults to sys.argv)

    Returns:
        int: Exit code (0 for success, non-zero for error)
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 0

    set_verbosity(args.verbose)
    if args.command == "bench":
        if args.factor < 2:
            parser.error("--factor must be at least 2")
        args.sizes = tuple(geometric_sizes(args.start, args.factor, args.count))
        args.solvers = tuple(args.solvers or ())
    config = RunConfig.from_namespace(args)
    logger.debug("running %s", config)

    try:
        if config.command == "solve":
            return handle_solve(config, parser)
        elif config.command == "trace":
            return handle_trace(config, parser)
        elif config.command == "verify":
            return handle_verify(config)
        elif config.command == "diagram":
            return handle_diagram(config, check=args.check)
        elif config.command == "bench":
            return handle_bench(config)
        elif config.command == "tangle":
            emit(tangle(load_document(config.source), config.root), config.output)
        elif config.command == "weave":
            emit(weave(load_document(config.source)), config.output)
        elif config.command == "chunks":
            emit(format_table(list_chunks(load_document(config.source)), config.output_format), config.output)
        return 0
    except (JosephusError, OSError) as e:
        print(f"josephus: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
