"""Command-line front end.

Exit codes: 0 = YES / true / valid / unique, 1 = NO / false / invalid /
not-unique, 2 = usage or parse error, 3 = resource limit exceeded.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .core import Code, Palette, score
from .errors import InvalidInputError, ParseError, PreconditionError, ResourceLimitError
from .io import parse_graph, parse_instance, serialize_instance
from .reduction import (Graph, brute_force_vertex_cover, construct_witness,
                        extract_cover, is_vertex_cover, reduce_vertex_cover)
from .solver import DEFAULT_EXHAUSTIVE_CAP, enumerate_all, solve, verify
from .uniqueness import is_unique

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _parse_code(text: str) -> Code:
    try:
        pegs = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise InvalidInputError(f"code must be space-separated integers, got {text!r}") from None
    if not pegs:
        raise InvalidInputError("code must contain at least one peg")
    return pegs


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from None


def cmd_score(args: argparse.Namespace) -> int:
    result = score(_parse_code(args.code_a), _parse_code(args.code_b),
                   Palette(args.kappa))
    print(f"{result.black} {result.white}")
    return EXIT_YES


def cmd_solve(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.instance))
    if args.all:
        enumeration = enumerate_all(instance, cap=args.cap)
        if enumeration.truncated:
            print(f"note: output truncated at {args.cap} solutions", file=sys.stderr)
        if not enumeration.codes:
            print("UNSAT")
            return EXIT_NO
        for code in enumeration.codes:
            print(" ".join(str(p) for p in code))
        return EXIT_YES
    outcome = solve(instance, mode=args.mode, cap=args.cap)
    if not outcome.satisfiable:
        print("UNSAT")
        return EXIT_NO
    print(" ".join(str(p) for p in outcome.witness))
    return EXIT_YES


def cmd_verify(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.instance))
    if verify(instance, _parse_code(args.code)):
        print("VALID")
        return EXIT_YES
    print("INVALID")
    return EXIT_NO


def cmd_reduce(args: argparse.Namespace) -> int:
    graph = parse_graph(_read(args.graph))
    variant = "compact" if args.compact else "standard"
    artifact = reduce_vertex_cover(graph, args.cover_size, variant)
    instance = artifact.instance
    summary = f"{instance.kappa} {instance.length} {len(instance.guesses)}"
    if args.output:
        Path(args.output).write_text(serialize_instance(instance))
        print(summary)
    else:
        sys.stdout.write(serialize_instance(instance))
        print(summary, file=sys.stderr)
    return EXIT_YES


def cmd_extract(args: argparse.Namespace) -> int:
    graph = parse_graph(_read(args.graph))
    variant = "compact" if args.compact else "standard"
    artifact = reduce_vertex_cover(graph, args.cover_size, variant)
    instance = parse_instance(_read(args.instance))
    if instance != artifact.instance:
        raise InvalidInputError(
            "instance file does not match the reduction of this graph")
    witness = _parse_code(args.code)
    try:
        cover = extract_cover(artifact, witness)
    except InvalidInputError as exc:
        _fail(str(exc))
        return EXIT_NO
    print(" ".join(str(v) for v in sorted(cover)))
    return EXIT_YES


def cmd_unique(args: argparse.Namespace) -> int:
    instance = parse_instance(_read(args.instance))
    report = is_unique(instance)
    if not report.satisfiable:
        print(f"UNSAT {report.followups_tried}")
        return EXIT_NO
    if report.unique:
        print(f"UNIQUE {report.followups_tried}")
        return EXIT_YES
    print(f"NOT-UNIQUE {report.followups_tried}")
    return EXIT_NO


def _roundtrip_row(graph: Graph, n: int) -> tuple[str, bool]:
    vc = brute_force_vertex_cover(graph, n)
    agree = True

    def run(variant: str) -> str:
        nonlocal agree
        artifact = reduce_vertex_cover(graph, n, variant)
        outcome = solve(artifact.instance)
        if outcome.satisfiable != vc:
            agree = False
        if outcome.satisfiable:
            cover = extract_cover(artifact, outcome.witness)
            if len(cover) != n or not is_vertex_cover(graph, cover):
                agree = False
        return "yes" if outcome.satisfiable else "no"

    std = run("standard")
    compact = "-"
    if n != graph.vertex_count or n > 1:
        compact = run("compact")
    word = {True: "yes", False: "no"}[vc]
    row = f"{n} {word} {std} {compact} {'yes' if agree else 'MISMATCH'}"
    return row, agree


def cmd_roundtrip(args: argparse.Namespace) -> int:
    graph = parse_graph(_read(args.graph))
    top = graph.vertex_count if args.max_n is None else min(args.max_n, graph.vertex_count)
    if top < 1:
        raise InvalidInputError(f"--max-n must be at least 1, got {args.max_n}")
    print("n vc standard compact agree")
    all_agree = True
    for n in range(1, top + 1):
        row, agree = _roundtrip_row(graph, n)
        print(row)
        all_agree = all_agree and agree
    return EXIT_YES if all_agree else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mspkit",
        description="Mastermind satisfiability: solve, verify, and reduce vertex cover.")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized helpers (reserved)")
    parser.add_argument("--cap", type=int, default=DEFAULT_EXHAUSTIVE_CAP,
                        help="candidate/result cap for exhaustive work")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score one code against another")
    p.add_argument("--kappa", type=int, required=True, help="palette size")
    p.add_argument("code_a", help="first code, e.g. '1 2 3 4'")
    p.add_argument("code_b", help="second code")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("solve", help="decide an instance file")
    p.add_argument("instance", help="instance file")
    p.add_argument("--mode", choices=("backtrack", "exhaustive"), default="backtrack")
    p.add_argument("--all", action="store_true", help="list every solution")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a candidate against an instance file")
    p.add_argument("instance", help="instance file")
    p.add_argument("code", help="candidate code, e.g. '1 2 3 4'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="encode vertex cover as an instance")
    p.add_argument("graph", help="graph file")
    p.add_argument("--cover-size", type=int, required=True, dest="cover_size")
    p.add_argument("--compact", action="store_true", help="use the shorter code layout")
    p.add_argument("-o", "--output", help="write the instance here instead of stdout")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("extract", help="read a vertex cover off a witness")
    p.add_argument("graph", help="graph file")
    p.add_argument("--cover-size", type=int, required=True, dest="cover_size")
    p.add_argument("--compact", action="store_true")
    p.add_argument("instance", help="instance file (must match the reduction)")
    p.add_argument("code", help="witness code")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("unique", help="does the instance pin down one secret?")
    p.add_argument("instance", help="instance file")
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("roundtrip", help="agreement table: reduction vs brute force")
    p.add_argument("graph", help="graph file")
    p.add_argument("--max-n", type=int, default=None, dest="max_n",
                   help="largest cover size to test (default: vertex count)")
    p.set_defaults(func=cmd_roundtrip)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # the reader went away (e.g. piping into head); die quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_NO
    except ParseError as exc:
        _fail(str(exc))
        return EXIT_USAGE
    except PreconditionError as exc:
        _fail(str(exc))
        return EXIT_USAGE
    except InvalidInputError as exc:
        _fail(str(exc))
        return EXIT_USAGE
    except ResourceLimitError as exc:
        _fail(str(exc))
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
