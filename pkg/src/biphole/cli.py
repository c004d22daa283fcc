"""Command-line frontend.

Subcommands: ``invariants``, ``gen``, ``check`` and ``search-q54``.  Reports
go to stdout as JSON (schema 1); diagnostics go to stderr.  Exit codes:
0 success, 1 theorem violation, 2 usage or parse error, 3 internal
consistency breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections.abc import Iterator
from importlib.metadata import PackageNotFoundError, version

from . import verify
from .families import FamilyError, FamilySpec, generate
from .graph import Graph, GraphFormatError, parse_edge_list, parse_graph6, read_graph6_lines, write_edge_list, write_graph6
from .report import invariant_report

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BREACH = 3
SCHEMA = 1
THREADS_ENV = "BIPHOLE_THREADS"


class UsageError(Exception):
    pass


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0.0.0"


def _envelope(command: str, argv: list[str]) -> dict:
    return {"schema": SCHEMA, "tool": "biphole", "version": _version(), "command": [command, *argv]}


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _threads(args) -> int | None:
    if args.threads is not None:
        return args.threads
    env = os.environ.get(THREADS_ENV)
    return int(env) if env else None


def _g6_source(path: str) -> Iterator[Graph]:
    if path == "-":
        yield from read_graph6_lines(sys.stdin.buffer)
        return
    with open(path, "rb") as fh:
        yield from read_graph6_lines(fh)


def _stream(args):
    if args.enumerate is not None:
        try:
            return verify.enumerate_labeled(args.enumerate)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.g6_file is not None:
        # materialise so parse errors surface before any work starts
        return list(_g6_source(args.g6_file))
    raise UsageError("one of --enumerate or --g6-file is required")


def _graphs_for_invariants(args) -> list[tuple[str, Graph]]:
    if args.g6 is not None:
        return [(args.g6, parse_graph6(args.g6))]
    if args.g6_file is not None:
        return [(write_graph6(g).decode(), g) for g in _g6_source(args.g6_file)]
    if args.edgelist is not None:
        if args.edgelist == "-":
            g = parse_edge_list(sys.stdin)
        else:
            with open(args.edgelist) as fh:
                g = parse_edge_list(fh)
        return [(write_graph6(g).decode(), g)]
    if args.family is not None:
        g = generate(FamilySpec.parse(args.family[0], args.family[1:]))
        return [(write_graph6(g).decode(), g)]
    raise UsageError("give one of --g6, --g6-file, --edgelist or --family")


def cmd_invariants(args, argv) -> int:
    graphs = _graphs_for_invariants(args)
    rows = []
    for g6, g in graphs:
        rows.append({"graph6": g6, **invariant_report(g, oracle=args.oracle).to_dict()})
    if args.csv:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
        return EXIT_OK
    report = _envelope("invariants", argv)
    report["graphs"] = rows
    _emit(report)
    return EXIT_OK


def cmd_gen(args, argv) -> int:
    g = generate(FamilySpec.parse(args.name, args.params))
    if args.format == "edgelist":
        sys.stdout.write(write_edge_list(g))
    else:
        sys.stdout.write(write_graph6(g).decode() + "\n")
    return EXIT_OK


def cmd_check(args, argv) -> int:
    ids = [part for token in args.theorems for part in token.split(",") if part]
    try:
        verify._validate_checkers(ids)
    except verify.UnknownTheoremError as exc:
        raise UsageError(str(exc)) from None
    result = verify.run_suite(_stream(args), ids, max_listed=args.max_listed, threads=_threads(args))
    report = _envelope("check", argv)
    report["result"] = result.to_dict()
    _emit(report)
    print(f"scanned {result.graphs_scanned} graphs in {result.elapsed:.1f}s: "
          f"{result.violation_count} violations, {result.flag_count} flags", file=sys.stderr)
    return EXIT_VIOLATION if result.violation_count else EXIT_OK


def cmd_search_q54(args, argv) -> int:
    result = verify.search_q54(_stream(args), threads=_threads(args))
    report = _envelope("search-q54", argv)
    report["result"] = result.to_dict()
    _emit(report)
    print(f"scanned {result.graphs_scanned} graphs in {result.elapsed:.1f}s: "
          f"{len(result.candidates)} candidates, {len(result.breaches)} breaches", file=sys.stderr)
    return EXIT_BREACH if result.breaches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biphole", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant report for one or more graphs")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--g6", help="a single graph6 string")
    src.add_argument("--g6-file", help="graph6 file, one graph per line ('-' for stdin)")
    src.add_argument("--edgelist", help="edge-list file: 'n m' then m lines 'u v' ('-' for stdin)")
    src.add_argument("--family", nargs="+", metavar="ARG", help="family name followed by its parameters")
    p.add_argument("--oracle", action="store_true", help="also run the independent oracles")
    p.add_argument("--csv", action="store_true", help="CSV table instead of JSON")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("gen", help="generate a family member")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("check", cmd_check, "run theorem checks over a graph stream"),
        ("search-q54", cmd_search_q54, "search for 2-connected graphs with kappa < alpha"),
    ):
        p = sub.add_parser(name, help=helptext)
        if name == "check":
            p.add_argument("theorems", nargs="+", help="theorem ids (T1.1 ... LOG2) or 'all'")
            p.add_argument("--max-listed", type=int, default=100, help="flags listed per theorem")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--enumerate", type=int, metavar="N", help="all labelled graphs on N <= 7 vertices")
        src.add_argument("--g6-file", help="graph6 file ('-' for stdin)")
        p.add_argument("--threads", type=int, help=f"worker threads (env {THREADS_ENV})")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv[1:])
    except (UsageError, FamilyError, GraphFormatError, ValueError, OSError) as exc:
        print(f"biphole {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
