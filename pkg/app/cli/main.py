"""
Command-line surface.

    python -m app.cli classify fixtures/trefoil-c3.tg

Exit status: 0 trivial / ok, 1 nontrivial, 2 indeterminate, 3 input error.
Reports go to stdout, logs to stderr.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, NoReturn, Optional, TextIO

from app.classify.bouquet import contract_to_bouquet, is_bouquet_trivial, is_primitive
from app.classify.knots import knot_type
from app.classify.links import find_nonsplit_link
from app.classify.verdict import classify
from app.cli.graph_file import (
    GraphFile,
    grid_embedding_from_file,
    parse_corpus,
    parse_graph_document,
    serialize_corpus,
)
from app.cli.render import render_diagram
from app.cli.report import CycleRecord, build_report, render_machine, render_text
from app.config.settings import get_settings
from app.enumerate.generator import enumerate_grid_embeddings
from app.enumerate.oracle import search_reduction
from app.fixtures import get_abstract_fixture
from app.homology.cycles import cycle_class, enumerate_simple_cycles, spanning_tree
from app.schemas.grid import OracleOutcome
from app.schemas.homology import SpanningTree
from app.schemas.torus import AbstractGraph, TorusGraph
from app.schemas.validation import Violation
from app.schemas.verdict import KnotStatus, VerdictResult
from app.torus.embedding import validate_embedding
from app.utils.errors import (
    EnumerationTruncated,
    GraphFileError,
    ScanIncomplete,
    TorusGraphError,
)
from app.workflows.consistency_sweep import run_consistency_sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NONTRIVIAL = 1
EXIT_INDETERMINATE = 2
EXIT_INPUT_ERROR = 3

EXIT_BY_RESULT = {
    VerdictResult.TRIVIAL: EXIT_OK,
    VerdictResult.NONTRIVIAL: EXIT_NONTRIVIAL,
    VerdictResult.INDETERMINATE: EXIT_INDETERMINATE,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; that status belongs to Indeterminate here."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="torus-graphs", description="Triviality of spatial graphs on a torus")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    validate = sub.add_parser("validate", help="check that a graph file is an embedding")
    validate.add_argument("file")

    classify_cmd = sub.add_parser("classify", help="decide triviality")
    classify_cmd.add_argument("file")
    classify_cmd.add_argument("--cap", type=int, default=None)
    classify_cmd.add_argument("--format", choices=("text", "machine"), default="text")

    knots = sub.add_parser("knots", help="list simple cycles with their classes and knot types")
    knots.add_argument("file")
    knots.add_argument("--cap", type=int, default=None)

    links = sub.add_parser("links", help="look for a nonsplit link")
    links.add_argument("file")
    links.add_argument("--cap", type=int, default=None)

    bouquet = sub.add_parser("bouquet", help="contract a spanning tree")
    bouquet.add_argument("file")
    bouquet.add_argument("--tree", default=None, help="comma-separated tree edge ids")

    primitive = sub.add_parser("primitive", help="check every spanning-tree bouquet")
    primitive.add_argument("file")
    primitive.add_argument("--tree-cap", type=int, default=None)

    enumerate_cmd = sub.add_parser("enumerate", help="list grid embeddings of a graph")
    enumerate_cmd.add_argument("--graph", required=True, help="graph file or builtin:K5|K33|theta3")
    enumerate_cmd.add_argument("--grid", type=int, default=None)
    enumerate_cmd.add_argument("--limit", type=int, default=None)

    reduce_cmd = sub.add_parser("reduce", help="run the reduction oracle on grid records")
    reduce_cmd.add_argument("file", help="one record or a corpus of records, each with a `grid` line")
    reduce_cmd.add_argument("--budget", type=int, default=None)

    verify = sub.add_parser("verify", help="run the exhaustive consistency sweep")
    verify.add_argument("--grid", type=int, default=None)
    verify.add_argument("--max-edges", type=int, default=None)
    verify.add_argument("--budget", type=int, default=None)
    verify.add_argument(
        "--limit", type=int, default=None, help="per-graph embedding limit (default: every embedding)"
    )
    verify.add_argument("--bouquets-only", action="store_true", help="sweep one-vertex graphs only")
    verify.add_argument("--format", choices=("text", "machine"), default="text")

    render = sub.add_parser("render", help="write an SVG diagram")
    render.add_argument("file")
    render.add_argument("-o", "--output", required=True)
    return parser


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str) -> GraphFile:
    return parse_graph_document(_read(path))


def _describe(violation: Violation) -> str:
    line = (
        f"violation: {violation.kind} {violation.ids[0]} {violation.ids[1]} "
        f"at ({violation.point[0]},{violation.point[1]}) translate {violation.translate}"
    )
    return f"{line} ({violation.detail})\n" if violation.detail else line + "\n"


def _load_valid(path: str, out: TextIO) -> TorusGraph:
    g = _load(path).graph
    report = validate_embedding(g)
    if not report.ok:
        for violation in report.violations:
            out.write(_describe(violation))
        raise UsageError(f"{path} is not an embedding")
    return g


def _cmd_validate(args, out: TextIO) -> int:
    g = _load(args.file).graph
    report = validate_embedding(g)
    for violation in report.violations:
        out.write(_describe(violation))
    out.write("ok\n" if report.ok else f"{len(report.violations)} violation(s)\n")
    return EXIT_OK if report.ok else EXIT_INPUT_ERROR


def _cmd_classify(args, out: TextIO) -> int:
    g = _load_valid(args.file, out)
    verdict = classify(g, args.cap, assume_valid=True)
    report = build_report(g, verdict, source=args.file)
    out.write((render_machine(report) if args.format == "machine" else render_text(report)) + "\n")
    return EXIT_BY_RESULT[verdict.result]


def _cmd_knots(args, out: TextIO) -> int:
    g = _load_valid(args.file, out)
    knotted = False
    try:
        for cycle in enumerate_simple_cycles(g, args.cap):
            verdict = knot_type(cycle_class(g, cycle), g.torus)
            knotted = knotted or verdict.status != KnotStatus.UNKNOT
            out.write(CycleRecord.from_cycle(g, cycle, verdict.status.value).describe() + "\n")
    except ScanIncomplete as exc:
        out.write(f"incomplete: {exc}\n")
        return EXIT_NONTRIVIAL if knotted else EXIT_INDETERMINATE
    return EXIT_NONTRIVIAL if knotted else EXIT_OK


def _cmd_links(args, out: TextIO) -> int:
    g = _load_valid(args.file, out)
    try:
        witness = find_nonsplit_link(g, args.cap)
    except ScanIncomplete as exc:
        out.write(f"incomplete: {exc}\n")
        return EXIT_INDETERMINATE
    if witness is None:
        out.write("no nonsplit link\n")
        return EXIT_OK
    for cycle in witness.cycles:
        out.write("link component: " + CycleRecord.from_cycle(g, cycle).describe() + "\n")
    return EXIT_NONTRIVIAL


def _cmd_bouquet(args, out: TextIO) -> int:
    g = _load_valid(args.file, out)
    if args.tree is None:
        tree = spanning_tree(g)
    else:
        chosen = frozenset(part.strip() for part in args.tree.split(",") if part.strip())
        tree = SpanningTree(edges=chosen, roots=(g.vertex_ids()[0],) if g.vertices else ())
    bouquet = contract_to_bouquet(g, tree)
    out.write(f"base: {bouquet.base}\n")
    out.write("tree: " + " ".join(sorted(tree.edges)) + "\n")
    for cls in bouquet.loop_classes:
        out.write(f"loop {cls} {knot_type(cls, g.torus).status.value}\n")
    trivial = is_bouquet_trivial(bouquet, g.torus)
    out.write("trivial bouquet\n" if trivial else "knotted bouquet\n")
    return EXIT_OK if trivial else EXIT_NONTRIVIAL


def _cmd_primitive(args, out: TextIO) -> int:
    g = _load_valid(args.file, out)
    try:
        primitive = is_primitive(g, args.tree_cap)
    except ScanIncomplete as exc:
        out.write(f"incomplete: {exc}\n")
        return EXIT_INDETERMINATE
    out.write("primitive\n" if primitive else "not primitive\n")
    return EXIT_OK if primitive else EXIT_NONTRIVIAL


def _abstract_graph(source: str) -> AbstractGraph:
    if source.startswith("builtin:"):
        try:
            return get_abstract_fixture(source.split(":", 1)[1])
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
    return _load(source).graph.abstract()


def _cmd_enumerate(args, out: TextIO) -> int:
    settings = get_settings()
    graph = _abstract_graph(args.graph)
    grid = args.grid or settings.GRID_SIZE
    found: List[GraphFile] = []
    truncated = False
    try:
        for embedding in enumerate_grid_embeddings(graph, grid, args.limit):
            found.append(GraphFile(graph=embedding.to_torus_graph(), grid=grid))
    except EnumerationTruncated:
        truncated = True
    if found:
        out.write(serialize_corpus(found))
    out.write(f"# {len(found)} embedding(s){' (truncated)' if truncated else ''}\n")
    return EXIT_OK


def _cmd_reduce(args, out: TextIO) -> int:
    budget = args.budget or get_settings().ORACLE_BUDGET
    records = parse_corpus(_read(args.file))
    if not records:
        raise UsageError(f"{args.file} holds no records")
    exhausted = 0
    for index, record in enumerate(records, start=1):
        result = search_reduction(grid_embedding_from_file(record), budget)
        line = f"record {index}: {result.outcome.value} after {result.states_explored} state(s)"
        if result.outcome == OracleOutcome.REDUCED:
            out.write(f"{line}; {result.rule}\n")
        else:
            exhausted += 1
            out.write(line + "\n")
    out.write(f"# {len(records) - exhausted} reduced, {exhausted} exhausted\n")
    return EXIT_OK if exhausted == 0 else EXIT_NONTRIVIAL


def _cmd_verify(args, out: TextIO) -> int:
    report = run_consistency_sweep(
        args.grid, args.max_edges, args.budget, args.limit, bouquets_only=args.bouquets_only
    )
    if args.format == "machine":
        out.write(report.model_dump_json() + "\n")
    else:
        out.write(f"run: {report.run_id}\n")
        out.write(f"graphs: {report.graphs} (nonplanar {report.nonplanar_graphs})\n")
        out.write(
            f"instances: {report.instances} trivial={report.trivial} "
            f"nontrivial={report.nontrivial} indeterminate={report.indeterminate}\n"
        )
        out.write(f"oracle: reduced={report.reduced} exhausted={report.exhausted}\n")
        out.write(
            f"checked: bouquets={report.bouquets_checked} theta={report.theta_checked} "
            f"chain={report.chain_checked} (skipped {report.chain_skipped}) "
            f"homology-skipped={report.homology_skipped}\n"
        )
        for graph in report.truncated_graphs:
            out.write(f"truncated: {graph}\n")
        for violation in report.violations:
            out.write(f"violation [{violation.criterion}] {violation.graph}: {violation.detail}\n")
        out.write(f"elapsed: {report.elapsed_seconds}s\n")
    return EXIT_OK if report.ok else EXIT_NONTRIVIAL


def _cmd_render(args, out: TextIO) -> int:
    g = _load_valid(args.file, out)
    Path(args.output).write_text(render_diagram(g))
    out.write(f"wrote {args.output}\n")
    return EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "knots": _cmd_knots,
    "links": _cmd_links,
    "bouquet": _cmd_bouquet,
    "primitive": _cmd_primitive,
    "enumerate": _cmd_enumerate,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Run one command and return its exit status."""
    stream = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else get_settings().LOG_LEVEL,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args, stream)
    except GraphFileError as exc:
        for line, reason in exc.errors:
            sys.stderr.write(f"line {line}: {reason}\n")
        return EXIT_INPUT_ERROR
    except (UsageError, TorusGraphError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR


def main() -> NoReturn:
    sys.exit(run())
