#!/usr/bin/env python3
"""
Command-line interface for multiset_gray
Subcommands for enumeration, verification, motion, graphs, the marked
combination lemma and tensor polynomials.
"""

import argparse
import csv
import json
import logging
import sys
from typing import List, Optional, TextIO

from . import config
from .core import format_permutation, parse_multiset
from .errors import InvalidArgs, MultisetGrayError
from .experiment_store import ExperimentStore
from .metrics import ALGORITHMS, compare_motion, motion_for_algorithm, rows_to_csv
from .multiperm import generate_all, new_generator
from .tensorpoly import (
    AGAOKA_B2222,
    build_polynomial,
    build_tableau,
    compare_polynomials,
    parse_partition,
    stream_cardinality,
    vertical_group_order,
)
from .verify import (
    check_circular,
    check_exactly_once,
    graph_to_dot,
    transposition_graph,
    verify_marked_lemma,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("lines", "csv", "json")


def _sign(value: int) -> str:
    return "+1" if value > 0 else "-1"


def _emit_json(out: TextIO, record) -> None:
    out.write(json.dumps(record, sort_keys=True) + "\n")


def cmd_enum(args: argparse.Namespace, out: TextIO) -> int:
    spec = parse_multiset(args.multiset)
    gen = new_generator(spec)
    writer = csv.writer(out, lineterminator="\n") if args.format == "csv" else None
    if writer:
        writer.writerow(["index", "permutation", "move", "sign"])

    sign = 1
    for index, record in enumerate(gen, start=1):
        if args.limit is not None and index > args.limit:
            break
        text = gen.oriented_view(1) if args.oriented else format_permutation(record.permutation)
        move = str(record.move) if record.move else "-"

        if writer:
            writer.writerow([index, text, move, _sign(sign)])
        elif args.format == "json":
            entry = {"index": index, "permutation": text}
            if args.trace:
                entry.update(move=str(record.move) if record.move else None, sign=sign)
            _emit_json(out, entry)
        elif args.trace:
            out.write(f"{text}\t{move}\t{_sign(sign)}\n")
        else:
            out.write(text + "\n")
        sign = -sign
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    spec = parse_multiset(args.multiset)
    trace = generate_all(spec, args.cap)
    report = check_exactly_once(trace, spec, args.cap)
    circular = check_circular(trace)

    if args.format == "json":
        _emit_json(out, {"exactly_once": report.to_dict(), "circular": circular.to_dict()})
    else:
        for line in report.to_lines():
            out.write(line + "\n")
        out.write(f"circular: {circular.is_transposition and circular.strong_homogeneous}\n")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_motion(args: argparse.Namespace, out: TextIO) -> int:
    stats = motion_for_algorithm(args.n, args.k, args.algo, args.cap)

    if args.format == "json":
        _emit_json(out, {"n": args.n, "k": args.k, "algo": args.algo, **stats.to_dict()})
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["width", "count"])
        for width, count in stats.width_histogram.items():
            writer.writerow([width, count])
    else:
        for line in stats.to_lines():
            out.write(line + "\n")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, out: TextIO) -> int:
    if args.store:
        with ExperimentStore(args.store) as store:
            done = store.completed_sizes()
            n_min = 2
            while n_min in done:
                n_min += 1
            if n_min <= args.max_n:
                store.save_rows(compare_motion(args.max_n, args.cap, args.workers, n_min=n_min))
            else:
                logger.info(f"All sizes up to {args.max_n} already stored")
            rows = store.load_rows(args.max_n)
    else:
        rows = compare_motion(args.max_n, args.cap, args.workers)

    if args.format == "json":
        for row in rows:
            _emit_json(out, row.to_dict())
    else:
        out.write(rows_to_csv(rows))
    return EXIT_OK if all(row.holds for row in rows) else EXIT_CHECK_FAILED


def cmd_graph(args: argparse.Namespace, out: TextIO) -> int:
    spec = parse_multiset(args.multiset)
    report = transposition_graph(spec, args.max_width, hamilton=not args.no_hamilton)

    if args.dot:
        out.write(graph_to_dot(report))
    elif args.format == "json":
        _emit_json(out, report.to_dict())
    else:
        for line in report.to_lines():
            out.write(line + "\n")
    return EXIT_OK


def cmd_lemma(args: argparse.Namespace, out: TextIO) -> int:
    report = verify_marked_lemma(args.n, args.k)

    if args.format == "json":
        _emit_json(out, report.to_dict())
    else:
        for line in report.to_lines():
            out.write(line + "\n")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_poly(args: argparse.Namespace, out: TextIO) -> int:
    partition = parse_partition(args.partition)
    tableau = build_tableau(partition)

    if args.count:
        out.write(f"vertical_group_order: {vertical_group_order(tableau)}\n")
        out.write(f"stream_cardinality: {stream_cardinality(tableau)}\n")
        return EXIT_OK

    if args.check_agaoka:
        if tableau.partition != (2, 2, 2, 2):
            raise InvalidArgs("--check-agaoka needs --partition 2,2,2,2")
        poly = build_polynomial(tableau, cap=args.cap)
        differences = compare_polynomials(poly, AGAOKA_B2222)
        if differences:
            out.write("MISMATCH\n")
            for line in differences:
                out.write(line + "\n")
            return EXIT_CHECK_FAILED
        out.write(f"MATCH ({len(poly)} terms)\n")
        return EXIT_OK

    poly = build_polynomial(tableau, identify_equal_factors=not args.raw, cap=args.cap)
    if args.format == "json":
        _emit_json(out, poly.to_dict())
    elif args.machine:
        for line in poly.format_machine():
            out.write(line + "\n")
    else:
        out.write(poly.format_human() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="lines", help="Output format (default: lines)")
    common.add_argument("--cap", type=int, default=None,
                        help=f"Largest list to materialize (default: {config.DEFAULT_CAP:,})")
    common.add_argument("--output", "-o", default=None, help="Write to this file instead of stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="graycode",
        description="Gray codes for multiset permutations with homogeneous transpositions.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # -- enum --
    p_enum = subparsers.add_parser("enum", parents=[common], help="Stream the permutations of a multiset")
    p_enum.add_argument("--multiset", required=True, help="Multiplicities, e.g. 2,2,2")
    p_enum.add_argument("--trace", action="store_true", help="Add the move and sign of each step")
    p_enum.add_argument("--oriented", action="store_true", help="Show type 1 as '<'/'>' with its directions")
    p_enum.add_argument("--limit", type=int, default=None, help="Stop after this many permutations")

    # -- verify --
    p_verify = subparsers.add_parser("verify", parents=[common], help="Exactly-once and circularity checks")
    p_verify.add_argument("--multiset", required=True, help="Multiplicities, e.g. 2,2,1,1")

    # -- motion --
    p_motion = subparsers.add_parser("motion", parents=[common], help="Total motion of a k-out-of-n list")
    p_motion.add_argument("--n", type=int, required=True)
    p_motion.add_argument("--k", type=int, required=True)
    p_motion.add_argument("--algo", choices=ALGORITHMS, default="ours", help="List to measure (default: ours)")

    # -- compare --
    p_compare = subparsers.add_parser("compare", parents=[common], help="Motion comparison against Eades-McKay")
    p_compare.add_argument("--max-n", type=int, required=True)
    p_compare.add_argument("--store", default=None, help="SQLite file caching computed rows")
    p_compare.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")

    # -- graph --
    p_graph = subparsers.add_parser("graph", parents=[common], help="Transposition graph of a small multiset")
    p_graph.add_argument("--multiset", required=True)
    p_graph.add_argument("--max-width", type=int, default=1, help="Widest transposition edge (default: 1)")
    p_graph.add_argument("--dot", action="store_true", help="Emit the graph in DOT")
    p_graph.add_argument("--no-hamilton", action="store_true", help="Skip the Hamilton path search")

    # -- lemma --
    p_lemma = subparsers.add_parser("lemma", parents=[common], help="Check the marked combination list C'(n,k)")
    p_lemma.add_argument("--n", type=int, required=True)
    p_lemma.add_argument("--k", type=int, required=True)

    # -- poly --
    p_poly = subparsers.add_parser("poly", parents=[common], help="Invariant polynomial of a paired tableau")
    p_poly.add_argument("--partition", default="2,2,2,2", help="Row lengths (default: 2,2,2,2)")
    p_poly.add_argument("--raw", action="store_true", help="Do not collect equal terms")
    p_poly.add_argument("--check-agaoka", action="store_true", help="Compare 2,2,2,2 with the reference")
    p_poly.add_argument("--count", action="store_true", help="Print group order and stream length only")
    p_poly.add_argument("--machine", action="store_true", help="One term per line")

    return parser


COMMANDS = {
    "enum": cmd_enum,
    "verify": cmd_verify,
    "motion": cmd_motion,
    "compare": cmd_compare,
    "graph": cmd_graph,
    "lemma": cmd_lemma,
    "poly": cmd_poly,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        0 on success, 1 when a check fails, 2 on a usage or domain error
    """
    args = build_parser().parse_args(argv)
    config.setup_logging("DEBUG" if args.verbose else None)

    out = sys.stdout
    try:
        if args.output:
            out = open(args.output, "w")
        return COMMANDS[args.command](args, out)
    except MultisetGrayError as e:
        logger.debug(f"{args.command} failed: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK
    except OSError as e:
        logger.debug(f"cannot write {args.output}: {e!r}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


run_cli = main


if __name__ == "__main__":
    sys.exit(main())
