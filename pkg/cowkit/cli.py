"""Command line entry point: cowkit <command> [options]
"""
import argparse
import logging
import sys
from os import getenv
from random import Random
from typing import Callable
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import TextIO

from .abstracts import CliqueCover
from .abstracts import Graph
from .abstracts import Limits
from .abstracts import Method
from .abstracts import SolveResult
from .abstracts import Witness
from .clocks import PerfClock
from .dispatcher import Dispatcher
from .document import Problem
from .document import ResultDocument
from .document import load_certificate
from .exceptions import ConfigurationError
from .exceptions import CowkitError
from .exceptions import FormatError
from .exceptions import GraphDomainError
from .exceptions import LimitExceededError
from .exceptions import UnsolvedError
from .formats import emit_graph6
from .formats import read_graph
from .fpt import decide_k
from .fpt import fpt_cow
from .fpt import gk
from .oracle import exact_biclique_cover
from .oracle import exact_cow
from .oracle import exact_ecc
from .oracle import verify_cover
from .oracle import verify_witness
from .patterns import Recognition
from .patterns import WidthClass
from .patterns import chain_ordering
from .patterns import find_obstruction
from .patterns import pseudo_split_partition
from .patterns import small_width_class
from .patterns import split_partition
from .reductions import biclique_to_cow
from .utils import Stopwatch
from .utils import input_digest
from .utils import random_graph

logger = logging.getLogger("cowkit")

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_UNSOLVED = 3


class Context:
    """Per-invocation state shared by the command handlers"""

    args: argparse.Namespace
    stdin: TextIO
    stdout: TextIO
    watch: Stopwatch
    limits: Limits

    def __init__(self, args: argparse.Namespace, stdin: TextIO, stdout: TextIO):
        self.args = args
        self.stdin = stdin
        self.stdout = stdout
        self.watch = Stopwatch(PerfClock())
        self.limits = Limits.from_env()

    def read_graph(self) -> Graph:
        with self.watch.phase("parse"):
            if self.args.graph6 is not None:
                return read_graph(self.args.graph6, "graph6")

            if self.args.file is not None:
                with open(self.args.file, encoding="utf-8") as handle:
                    return read_graph(handle.read(), self.args.format)

            return read_graph(self.stdin.read(), self.args.format)

    def emit(self, document: ResultDocument, human: List[str]) -> None:
        if not self.args.no_timings:
            document.timings = self.watch.to_dict()

        if self.args.json:
            self.stdout.write(document.to_json() + "\n")
        else:
            self.stdout.write("\n".join(human) + "\n")


def _format_set(vertices) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vertices)) + "}"


def _witness_lines(result: SolveResult) -> List[str]:
    return [f"  N{i + 1} = {_format_set(s)}" for i, s in enumerate(result.witness)]


def _trace_of(result: SolveResult) -> Optional[dict]:
    return result.reduction_prefix.to_dict() if result.reduction_prefix is not None else None


def _solve_cow(ctx: Context, graph: Graph) -> SolveResult:
    args = ctx.args

    if args.exact:
        width, witness = exact_cow(graph, ctx.limits)
        return SolveResult(width, witness, Method.ORACLE)

    if args.fpt:
        return fpt_cow(graph, ctx.limits)

    return Dispatcher(limits=ctx.limits).dispatch(graph)


def cmd_cow(ctx: Context) -> int:
    graph = ctx.read_graph()
    digest = input_digest(graph)
    k = ctx.args.k

    with ctx.watch.phase("solve"):
        if k is not None and ctx.args.fpt:
            witness = decide_k(graph, k, ctx.limits)
            result = SolveResult(len(witness), witness, Method.FPT) if witness is not None else None
            accepted = witness is not None
        else:
            result = _solve_cow(ctx, graph)
            accepted = k is None or result.width <= k

    if result is not None and accepted:
        with ctx.watch.phase("verify"):
            assert verify_witness(graph, result.witness), "Solver produced an invalid witness"

    if k is None:
        document = ResultDocument(
            Problem.COW,
            result.width,
            input_digest=digest,
            method=result.method.value,
            certificate=result.witness.as_lists(),
            trace=_trace_of(result),
        )
        ctx.emit(document, [f"complete width: {result.width} (method: {result.method.value})"] + _witness_lines(result))
        return EXIT_OK

    if not accepted:
        document = ResultDocument(Problem.COW, "no", input_digest=digest, method=_method_name(ctx))
        ctx.emit(document, [f"NO: complete width > {k}"])
        return EXIT_NO

    document = ResultDocument(
        Problem.COW,
        "yes",
        input_digest=digest,
        method=result.method.value,
        certificate=result.witness.as_lists(),
        trace=_trace_of(result),
    )
    ctx.emit(document, [f"YES: complete width <= {k} (method: {result.method.value})"] + _witness_lines(result))
    return EXIT_OK


def _method_name(ctx: Context) -> str:
    if ctx.args.exact:
        return Method.ORACLE.value

    return Method.FPT.value if ctx.args.fpt else "auto"


def cmd_ecc(ctx: Context) -> int:
    graph = ctx.read_graph()

    with ctx.watch.phase("solve"):
        if ctx.args.exact:
            count, cover = exact_ecc(graph, ctx.limits)
            method = Method.ORACLE.value
        else:
            result = Dispatcher(limits=ctx.limits).dispatch(graph.complement())
            count, cover, method = result.width, CliqueCover(result.witness.sets), result.method.value

    with ctx.watch.phase("verify"):
        assert verify_cover(graph, cover), "Solver produced an invalid clique cover"

    document = ResultDocument(
        Problem.ECC,
        count,
        input_digest=input_digest(graph),
        method=method,
        certificate=cover.as_lists(),
    )
    lines = [f"edge clique cover number: {count} (method: {method})"]
    lines.extend(f"  C{i + 1} = {_format_set(c)}" for i, c in enumerate(cover))
    ctx.emit(document, lines)
    return EXIT_OK


def cmd_biclique(ctx: Context) -> int:
    graph = ctx.read_graph()
    bipartition = graph.bipartition()

    if bipartition is None:
        raise GraphDomainError("Biclique cover needs a bipartite graph")

    with ctx.watch.phase("solve"):
        count, cover = exact_biclique_cover(graph, bipartition, ctx.limits)

    with ctx.watch.phase("verify"):
        assert verify_cover(graph, cover), "Solver produced an invalid biclique cover"

    document = ResultDocument(
        Problem.BICLIQUE,
        count,
        input_digest=input_digest(graph),
        method=Method.ORACLE.value,
        certificate=cover.as_lists(),
    )
    lines = [f"biclique cover number: {count}"]
    lines.extend(f"  B{i + 1} = {_format_set(xs)} x {_format_set(ys)}" for i, (xs, ys) in enumerate(cover))
    ctx.emit(document, lines)
    return EXIT_OK


def cmd_recognize(ctx: Context) -> int:
    graph = ctx.read_graph()

    with ctx.watch.phase("solve"):
        chain = chain_ordering(graph)
        split = split_partition(graph)
        pseudo = pseudo_split_partition(graph)
        width_class = small_width_class(graph, ctx.args.method)
        obstruction = find_obstruction(graph, int(width_class) - 1) if width_class > 0 else None

    excluded = None

    if obstruction is not None:
        found, embedding = obstruction
        excluded = {"pattern": found.name, "embedding": {str(p): v for p, v in sorted(embedding.items())}}

    certificate = {
        "chain": None,
        "split": split.to_dict() if split else None,
        "pseudo_split": pseudo.to_dict() if pseudo else None,
        "small_width": {"class": width_class.tag(), "excluded_by": excluded},
    }

    if chain is not None:
        bipartition, ordering = chain
        certificate["chain"] = {
            "x_side": sorted(bipartition.x_side),
            "y_side": sorted(bipartition.y_side),
            "order": list(ordering.order),
        }

    summary = width_class.tag().replace("<=", " <= ").replace(">", " > ")

    if excluded is not None and width_class is not WidthClass.MORE:
        summary += f", not <= {int(width_class) - 1}: contains {excluded['pattern']}"
    elif excluded is not None:
        summary += f": contains {excluded['pattern']}"

    lines = [
        summary,
        f"chain: {'yes' if chain else 'no'}",
        f"split: {'yes' if split else 'no'}",
        f"pseudo-split: {'yes' if pseudo else 'no'}",
    ]
    document = ResultDocument(
        Problem.RECOGNIZE,
        width_class.tag(),
        input_digest=input_digest(graph),
        method=Recognition(ctx.args.method).value,
        certificate=certificate,
    )
    ctx.emit(document, lines)
    return EXIT_OK


def cmd_transform(ctx: Context) -> int:
    graph = ctx.read_graph()
    bipartition = graph.bipartition()

    if bipartition is None:
        raise GraphDomainError("The reduction needs a bipartite graph")

    with ctx.watch.phase("solve"):
        instance = biclique_to_cow(graph, bipartition, ctx.args.k)

    g_prime = emit_graph6(instance.graph)
    certificate = dict(instance.to_dict(), g_prime=g_prime)
    document = ResultDocument(
        Problem.TRANSFORM,
        g_prime,
        input_digest=input_digest(graph),
        method="biclique2cow",
        certificate=certificate,
    )
    ctx.emit(document, [g_prime, f"k' = {instance.k}"])
    return EXIT_OK


def cmd_gen(ctx: Context) -> int:
    args = ctx.args

    if args.family == "gk":
        if args.k is None:
            raise GraphDomainError("gen gk needs --k")

        graph = gk(args.k, ctx.limits)
    else:
        if args.n is None:
            raise GraphDomainError("gen random needs --n")

        graph = random_graph(args.n, args.p, Random(args.seed))

    line = emit_graph6(graph)
    document = ResultDocument(Problem.GEN, line, input_digest=input_digest(graph), method=args.family)
    ctx.emit(document, [line])
    return EXIT_OK


def cmd_verify(ctx: Context) -> int:
    graph = ctx.read_graph()

    with open(ctx.args.witness, encoding="utf-8") as handle:
        certificate = load_certificate(handle.read(), ctx.args.kind)

    with ctx.watch.phase("verify"):
        if isinstance(certificate, Witness):
            report = verify_witness(graph, certificate)
        else:
            report = verify_cover(graph, certificate)

    document = ResultDocument(
        Problem.VERIFY,
        "ok" if report else "violation",
        input_digest=input_digest(graph),
        certificate=report.to_dict(),
    )
    ctx.emit(document, [f"{'OK' if report else 'VIOLATION'}: {report.message}"])
    return EXIT_OK if report else EXIT_NO


COMMANDS: Dict[str, Callable[[Context], int]] = {
    "cow": cmd_cow,
    "ecc": cmd_ecc,
    "biclique": cmd_biclique,
    "recognize": cmd_recognize,
    "transform": cmd_transform,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="Write a JSON result document")
    output.add_argument("--no-timings", action="store_true", help="Leave phase timings out of the document")
    output.add_argument("--verbose", action="store_true", help="Log debug output to stderr")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group()
    group.add_argument("--graph6", help="Input graph as a graph6 string")
    group.add_argument("--file", help="Read the input graph from a file instead of stdin")
    source.add_argument("--format", choices=["auto", "graph6", "edges"], default="auto")

    parser = argparse.ArgumentParser(prog="cowkit", description="Complete width and edge clique cover toolkit")
    commands = parser.add_subparsers(dest="command", required=True)

    cow = commands.add_parser("cow", parents=[source, output], help="Complete width")
    route = cow.add_mutually_exclusive_group()
    route.add_argument("--exact", action="store_true", help="Exact cover oracle")
    route.add_argument("--fpt", action="store_true", help="Kernel plus label search")
    route.add_argument("--auto", action="store_true", help="Dispatch to the cheapest applicable solver (default)")
    cow.add_argument("--k", type=int, help="Decide whether complete width is at most k")

    ecc = commands.add_parser("ecc", parents=[source, output], help="Edge clique cover number")
    ecc_route = ecc.add_mutually_exclusive_group()
    ecc_route.add_argument("--exact", action="store_true")
    ecc_route.add_argument("--auto", action="store_true")

    commands.add_parser("biclique", parents=[source, output], help="Biclique cover number of a bipartite graph")

    recognize = commands.add_parser("recognize", parents=[source, output], help="Structural classes and small width")
    recognize.add_argument("--method", choices=[m.value for m in Recognition], default=Recognition.FORBIDDEN.value)

    transform = commands.add_parser("transform", parents=[source, output], help="Reduce biclique cover to complete width")
    transform.add_argument("reduction", choices=["biclique2cow"])
    transform.add_argument("--k", type=int, required=True)

    gen = commands.add_parser("gen", parents=[output], help="Generate a graph as graph6")
    gen.add_argument("family", choices=["gk", "random"])
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--p", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)

    verify = commands.add_parser("verify", parents=[source, output], help="Check a certificate against a graph")
    verify.add_argument("--witness", required=True, help="Result document or bare JSON list of sets")
    verify.add_argument("--kind", choices=["witness", "cliques", "bicliques"])

    return parser


def _configure_logging(verbose: bool) -> None:
    level = "DEBUG" if verbose else getenv("COWKIT_LOG_LEVEL", "WARNING")
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None) -> int:
    """Parse `argv`, run one command and return its exit code"""
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)

    _configure_logging(args.verbose)

    try:
        ctx = Context(args, stdin or sys.stdin, stdout or sys.stdout)
    except ConfigurationError as err:
        logger.error("%s", err)
        sys.stderr.write(f"cowkit: error: {err}\n")
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](ctx)
    except (FormatError, GraphDomainError, OSError) as err:
        logger.error("%s", err)
        sys.stderr.write(f"cowkit: error: {err}\n")
        return EXIT_USAGE
    except (LimitExceededError, UnsolvedError) as err:
        logger.error("%s", err)
        document = ResultDocument(Problem(args.command), "unsolved", error=str(err))
        ctx.emit(document, [f"UNSOLVED: {err}"])
        return EXIT_UNSOLVED
    except CowkitError as err:
        logger.error("%s", err)
        sys.stderr.write(f"cowkit: error: {err}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
