"""Batch command-line front end.

Machine output goes to stdout only and is byte-identical across runs
for the same input; progress and diagnostics go to stderr.  Exit codes:
0 success, 2 parse error, 3 precondition violation, 4 self-check
mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import io as mio
from .bruteforce import GroundSetTooLargeError, brute_flats
from .engine import EnumerationReport, NotSimpleError, enumerate_flats
from .labels import format_label, format_members
from .oracles import GraphicOracle, IndependenceOracle, UniformOracle, VectorialOracle
from .zonotope import RankDeficientError, hrep

__all__ = ["BruteForceMismatch", "RunConfig", "diff_reports", "main", "run"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4


@dataclass
class RunConfig:
    input: str
    command: str
    kind: str = "matrix"
    extremes: bool = True
    centered: bool = False
    format: str = "text"
    threads: int = 1
    count_queries: bool = False
    allow_floats: bool = False


class BruteForceMismatch(RuntimeError):
    """Engine and brute-force flat sets disagree."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroid-flats",
        description="Enumerate matroid flats and compute zonotope "
                    "H-representations from segment generators.",
    )
    parser.add_argument("--input", required=True,
                        help="input file; for --kind uniform, the literal 'k,n'")
    parser.add_argument("--kind", choices=("matrix", "edges", "uniform"),
                        default="matrix",
                        help="input interpretation (default: matrix)")
    parser.add_argument("--command", required=True,
                        choices=("flats", "pointers", "hrep", "bruteforce-check"))
    parser.add_argument("--extremes", action=argparse.BooleanOptionalAction,
                        default=True,
                        help="include the rank-0 flat and the full ground set")
    parser.add_argument("--centered", action="store_true",
                        help="hrep only: center the zonotope at the origin")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--threads", type=int, default=1,
                        help="reserved; the engine currently runs sequentially")
    parser.add_argument("--count-queries", action="store_true",
                        help="report the oracle query tally on stderr")
    parser.add_argument("--allow-floats", action="store_true",
                        help="accept float entries in JSON matrices via their "
                             "exact binary expansion")
    return parser


def _build_oracle(config: RunConfig) -> IndependenceOracle:
    if config.kind == "matrix":
        return VectorialOracle(mio.load_matrix(config.input, config.allow_floats))
    if config.kind == "edges":
        num_vertices, edges = mio.load_edges(config.input)
        return GraphicOracle(num_vertices, edges)
    rank_cap, ground_size = mio.parse_uniform_spec(config.input)
    return UniformOracle(ground_size, rank_cap)


def _progress(rank: int, count: int) -> None:
    print(f"rank {rank}: {count} pointers", file=sys.stderr)


def diff_reports(engine_report: EnumerationReport,
                 brute_records: tuple) -> list[str]:
    """Human-readable differences between engine and brute-force flats."""
    n = engine_report.ground_size

    def key(record):
        return (record.rank, record.pointer, record.members)

    def describe(record):
        return (f"rank {record.rank} pointer {format_label(record.pointer, n)} "
                f"members {format_members(record.members)}")

    engine_set = {key(r): r for r in engine_report.flats}
    brute_set = {key(r): r for r in brute_records}
    differences = []
    for k in sorted(engine_set.keys() - brute_set.keys()):
        differences.append("engine only:      " + describe(engine_set[k]))
    for k in sorted(brute_set.keys() - engine_set.keys()):
        differences.append("brute force only: " + describe(brute_set[k]))
    return differences


def run(config: RunConfig) -> int:
    """Execute one command; writes results to stdout, diagnostics to stderr."""
    try:
        if config.command == "hrep":
            if config.kind != "matrix":
                print("error: hrep requires --kind matrix", file=sys.stderr)
                return EXIT_PRECONDITION
            matrix = mio.load_matrix(config.input, config.allow_floats)
            representation = hrep(matrix, centered=config.centered,
                                  progress=_progress)
            emit = (mio.hrep_to_json if config.format == "json"
                    else mio.hrep_to_text)
            sys.stdout.write(emit(representation))
            if config.count_queries:
                print("oracle queries: 0 (echelon fast path)", file=sys.stderr)
            return EXIT_OK

        oracle = _build_oracle(config)

        if config.command == "bruteforce-check":
            engine_report = enumerate_flats(oracle, include_extremes=True)
            brute_records = brute_flats(oracle)
            differences = diff_reports(engine_report, brute_records)
            if config.count_queries:
                print(f"oracle queries: {oracle.query_count}", file=sys.stderr)
            if differences:
                for line in differences:
                    print(line, file=sys.stderr)
                print(f"bruteforce-check: MISMATCH ({len(differences)} differences)")
                return EXIT_MISMATCH
            print(f"bruteforce-check: OK, {engine_report.total} flats match")
            return EXIT_OK

        report = enumerate_flats(
            oracle,
            include_extremes=config.extremes,
            expand=(config.command == "flats"),
            progress=_progress,
        )
        include_members = config.command == "flats"
        emit = (mio.flats_to_json if config.format == "json"
                else mio.flats_to_text)
        sys.stdout.write(emit(report, include_members=include_members))
        if config.count_queries:
            print(f"oracle queries: {report.query_count}", file=sys.stderr)
        return EXIT_OK

    except (mio.InputFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (RankDeficientError, GroundSetTooLargeError, NotSimpleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        input=args.input,
        command=args.command,
        kind=args.kind,
        extremes=args.extremes,
        centered=args.centered,
        format=args.format,
        threads=args.threads,
        count_queries=args.count_queries,
        allow_floats=args.allow_floats,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
