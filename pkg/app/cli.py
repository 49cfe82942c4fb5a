import argparse
import logging
import sys
from typing import List, Optional

from app.exceptions import SequenceAnalysisError
from app.models import ClassificationMatrix, PairClass, PairMethod
from app.services import reports
from app.services.envelope import intersection_envelope, union_envelope
from app.services.graphicality import erdos_gallai_sides
from app.services.notation import format_creation, format_matrix, format_sequence, to_dot
from config import settings

logger = logging.getLogger(__name__)

RELATION_SYMBOLS = {
    "majorizes": "A ⪰ B",
    "majorized": "A ⪯ B",
    "equal": "A = B",
    "incomparable": "A and B are incomparable",
    "mismatch": "A and B differ in length or sum",
}


class CliParser(argparse.ArgumentParser):
    """Usage errors exit with 1, the validation-error code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"error: {message}\n")


def _yes_no(flag: Optional[bool]) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _matrix_of(report) -> ClassificationMatrix:
    entries = {(pair.i, pair.j): PairClass(pair.status) for pair in report.pairs}
    return ClassificationMatrix(n=report.n, entries=entries)


def _print_analysis(report) -> None:
    lhs, rhs = erdos_gallai_sides(report.sequence)
    print(f"n: {report.n}")
    print(f"sequence: {format_sequence(report.sequence)}")
    print(f"graphic: {_yes_no(report.graphic)}")
    print(f"m: {report.m}")
    print("  k    LHS    RHS  delta")
    for k, diff in enumerate(report.delta):
        print(f"{k:>3} {lhs[k]:>6} {rhs[k]:>6} {diff:>6}")
    print(f"eg zeros: {format_sequence(report.eg_zeros)}")
    print(f"split: {_yes_no(report.split)}")
    print(f"threshold: {_yes_no(report.threshold)}")


def run_analyze(args) -> int:
    report = reports.analysis_report(reports.read_sequence(args.sequence, args.normalize))
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        _print_analysis(report)
    return 0


def run_pairs(args) -> int:
    d = reports.read_sequence(args.sequence, args.normalize)
    report = reports.pairs_report(d, args.method, args.cap)
    if args.json:
        print(report.model_dump_json(indent=2))
        return 0
    print(format_matrix(_matrix_of(report)))
    print(f"{report.forced_count} of {len(report.pairs)} pairs forced ({report.method})")
    return 0


def run_envelope(args) -> int:
    d = reports.read_sequence(args.sequence, args.normalize)
    if args.json:
        print(reports.envelope_report(d, args.which).model_dump_json(indent=2))
        return 0
    graph, creation = intersection_envelope(d) if args.which == "I" else union_envelope(d)
    if args.format == "creation":
        print(format_creation(creation))
    elif args.format == "dot":
        print(to_dot(graph))
    else:
        for a, b in graph.sorted_edges():
            print(f"{a} {b}")
    return 0


def run_decompose(args) -> int:
    report = reports.decompose_report(reports.read_sequence(args.sequence, args.normalize))
    if args.json:
        print(report.model_dump_json(indent=2))
        return 0
    print(f"components: {report.components}")
    for index, block in enumerate(report.blocks, start=1):
        print(f"block {index}: clique {{{format_sequence(block.clique)}}} independent {{{format_sequence(block.independent)}}}")
    tail = report.tail
    print(f"tail: {{{format_sequence(tail.vertices)}}} split={_yes_no(tail.split)} p={tail.p} q={tail.q}")
    if not tail.split:
        print(f"  A' {{{format_sequence(tail.a_prime)}}} B' {{{format_sequence(tail.b_prime)}}}")
        print(f"  A'' {{{format_sequence(tail.a_double_prime)}}} B'' {{{format_sequence(tail.b_double_prime)}}}")
    return 0


def run_dominance(args) -> int:
    a = reports.read_partition(args.a, args.normalize)
    b = reports.read_partition(args.b, args.normalize)
    report = reports.relation_report(a, b)
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(f"{report.relation} ({RELATION_SYMBOLS[report.relation]})")
    return 0


def run_covers(args) -> int:
    report = reports.covers_report(reports.read_partition(args.sequence, args.normalize))
    if args.json:
        print(report.model_dump_json(indent=2))
        return 0
    for cover in report.covers:
        print(f"{format_sequence(cover.result)}  (p={cover.p}, q={cover.q})")
    return 0


def run_lift(args) -> int:
    report = reports.lift_report(reports.read_sequence(args.sequence, args.normalize))
    if args.json:
        print(report.model_dump_json(indent=2))
        return 0
    print(f"target: {format_sequence(report.lift.target, compact=True)}")
    for index, step in enumerate(report.lift.steps, start=1):
        print(f"step {index}: p={step.p} q={step.q}")
    return 0


def run_oracle(args) -> int:
    d = reports.read_sequence(args.sequence, args.normalize)
    report = reports.oracle_result(d, args.cap)
    if args.json:
        print(report.model_dump_json(indent=2))
        return 0
    print(f"realizations: {report.realization_count}")
    print(format_matrix(_matrix_of(report)))
    print(f"envelopes match the Erdos-Gallai classifier: {_yes_no(report.agrees)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = CliParser(add_help=False)
    common.add_argument("--normalize", action="store_true", help="sort the input descending before analysis")
    common.add_argument("--json", action="store_true", help="emit a single JSON document")

    parser = CliParser(prog="forced-pairs", description="Forced pairs and envelope graphs of degree sequences")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="stderr log level (default WARNING)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="graphicality, Erdos-Gallai table, flags")
    analyze.add_argument("sequence")
    analyze.set_defaults(handler=run_analyze)

    pairs = commands.add_parser("pairs", parents=[common], help="classify every vertex pair")
    pairs.add_argument("sequence")
    pairs.add_argument("--method", choices=[m.value for m in PairMethod], default=settings.DEFAULT_PAIR_METHOD)
    pairs.add_argument("--cap", type=int, default=None, help="largest n the oracle may enumerate")
    pairs.set_defaults(handler=run_pairs)

    envelope = commands.add_parser("envelope", parents=[common], help="intersection or union envelope")
    envelope.add_argument("sequence")
    envelope.add_argument("--which", choices=["I", "U"], required=True)
    envelope.add_argument("--format", choices=["edges", "creation", "dot"], default="edges")
    envelope.set_defaults(handler=run_envelope)

    decompose = commands.add_parser("decompose", parents=[common], help="canonical skeleton")
    decompose.add_argument("sequence")
    decompose.set_defaults(handler=run_decompose)

    dominance = commands.add_parser("dominance", parents=[common], help="compare two lists in the dominance order")
    dominance.add_argument("a")
    dominance.add_argument("b")
    dominance.set_defaults(handler=run_dominance)

    covers = commands.add_parser("covers", parents=[common], help="elementary transformations")
    covers.add_argument("sequence")
    covers.set_defaults(handler=run_covers)

    lift = commands.add_parser("lift", parents=[common], help="nearby split or decomposable sequence")
    lift.add_argument("sequence")
    lift.set_defaults(handler=run_lift)

    oracle = commands.add_parser("oracle", parents=[common], help="enumerate realizations and cross-check")
    oracle.add_argument("sequence")
    oracle.add_argument("--cap", type=int, default=None)
    oracle.set_defaults(handler=run_oracle)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr)
    try:
        return args.handler(args)
    except SequenceAnalysisError as e:
        logger.debug(f"{args.command} failed: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
