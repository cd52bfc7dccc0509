"""Command-line interface: construct, decompose, pack, rotate, search, verify, classify.

Every command is a thin adapter over the library; results go to stdout
(or --output), diagnostics to stderr.  Exit codes: 0 success or pass,
1 verification failure or exhausted search, 2 usage error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import build_leading_tournament, edge_type, edges_of_type
from .io_formats import (
    export_dot,
    export_json,
    export_matrix,
    parse_json,
    parse_matrix,
)
from .oracle import (
    BUDGET_EXCEEDED,
    DECOMPOSED,
    EXHAUSTED,
    SearchBudget,
    find_decomposition,
    verify_decomposition,
)
from .rotation import rotation_decomposition, rotation_tournament
from .steps import CompositeOrderError, decompose_prime, pack_leading

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    """User error reported on stderr with exit status 2."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _resolve_color(fmt: str, color: str | None, dot_default: str) -> str:
    if fmt != "dot":
        if color is not None:
            raise CliError("--color applies only to --format dot")
        return "none"
    return color if color is not None else dot_default


def _load_tournament(args: argparse.Namespace):
    if args.order is not None:
        return build_leading_tournament(args.order)
    return parse_matrix(_read(args.input))


def _cmd_build(args: argparse.Namespace) -> int:
    t = build_leading_tournament(args.order)
    color = _resolve_color(args.format, args.color, "none")
    if args.format == "matrix":
        text = export_matrix(t)
    else:
        text = export_dot(t, coloring=color)
    _write(args.output, text)
    return EXIT_OK


def _emit_packing(args: argparse.Namespace, t, packing) -> None:
    color = _resolve_color(args.format, args.color, "by-circuit")
    if args.format == "json":
        text = export_json(packing)
    else:
        text = export_dot(t, packing, coloring=color)
    _write(args.output, text)


def _cmd_decompose(args: argparse.Namespace) -> int:
    try:
        packing = decompose_prime(args.order)
    except CompositeOrderError:
        raise CliError(
            f"order {args.order} is not prime, so the fixed-step decomposition "
            "does not apply; use `pack` for the circuits-plus-residual packing "
            "or `search` for an exhaustive decomposition"
        )
    _emit_packing(args, build_leading_tournament(args.order), packing)
    return EXIT_OK


def _cmd_pack(args: argparse.Namespace) -> int:
    packing = pack_leading(args.order)
    _emit_packing(args, build_leading_tournament(args.order), packing)
    return EXIT_OK


def _cmd_rotate(args: argparse.Namespace) -> int:
    if args.emit == "both":
        if args.format is not None:
            raise CliError("--format cannot be combined with --emit both")
        if args.color is not None:
            raise CliError("--color cannot be combined with --emit both")
        text = export_matrix(rotation_tournament(args.order))
        text += export_json(rotation_decomposition(args.order))
        _write(args.output, text)
        return EXIT_OK
    if args.emit == "tournament":
        fmt = args.format or "matrix"
        if fmt not in ("matrix", "dot"):
            raise CliError("--emit tournament supports --format matrix or dot")
        color = _resolve_color(fmt, args.color, "none")
        t = rotation_tournament(args.order)
        text = export_matrix(t) if fmt == "matrix" else export_dot(t, coloring=color)
        _write(args.output, text)
        return EXIT_OK
    fmt = args.format or "json"
    if fmt not in ("json", "dot"):
        raise CliError("--emit decomposition supports --format json or dot")
    packing = rotation_decomposition(args.order)
    color = _resolve_color(fmt, args.color, "by-circuit")
    if fmt == "json":
        text = export_json(packing)
    else:
        text = export_dot(rotation_tournament(args.order), packing, coloring=color)
    _write(args.output, text)
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    t = _load_tournament(args)
    budget = SearchBudget(max_nodes=args.budget_nodes, time_limit=args.budget_seconds)
    outcome = find_decomposition(t, budget, jobs=args.jobs)
    if outcome.decomposition is None:
        packing_text = "null"
    else:
        packing_text = export_json(outcome.decomposition).rstrip("\n").replace("\n", "\n  ")
    document = (
        "{\n"
        f'  "status": {json.dumps(outcome.status)},\n'
        f'  "nodes_explored": {outcome.nodes_explored},\n'
        f'  "decomposition": {packing_text}\n'
        "}\n"
    )
    _write(args.output, document)
    return {DECOMPOSED: EXIT_OK, EXHAUSTED: EXIT_FAIL, BUDGET_EXCEEDED: EXIT_BUDGET}[
        outcome.status
    ]


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.order is not None:
        t = build_leading_tournament(args.order)
    else:
        t = parse_matrix(_read(args.tournament))
    packing = parse_json(_read(args.input))
    report = verify_decomposition(t, packing)
    if report.ok:
        _write(args.output, "PASS\n")
        return EXIT_OK
    _write(args.output, "FAIL\n" + "".join(f"{p}\n" for p in report.problems))
    return EXIT_FAIL


def _cmd_classify(args: argparse.Namespace) -> int:
    t = _load_tournament(args)
    n = (t.order - 1) // 2
    lines = ["tail head type"]
    for e in sorted(t.edges()):
        lines.append(f"{e.tail} {e.head} {edge_type(t, e)}")
    lines.append("")
    lines.append("type count")
    for ty in range(1, n + 1):
        lines.append(f"{ty} {len(edges_of_type(t, ty))}")
    _write(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", default="-", metavar="PATH", help="output file, - for stdout")


def _add_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--order", type=int, help="build the leading tournament of this order")
    group.add_argument("--input", metavar="PATH", help="adjacency-matrix file, - for stdin")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamtour",
        description="Hamilton-circuit packings and decompositions of diregular tournaments.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    build = sub.add_parser("build", help="construct a leading tournament")
    build.add_argument("--order", type=int, required=True)
    build.add_argument("--format", choices=("matrix", "dot"), default="matrix")
    build.add_argument("--color", choices=("by-edge-type", "none"), default=None)
    _add_output(build)
    build.set_defaults(func=_cmd_build)

    decompose = sub.add_parser(
        "decompose", help="Hamilton decomposition of a prime-order leading tournament"
    )
    decompose.add_argument("--order", type=int, required=True)
    decompose.add_argument("--format", choices=("json", "dot"), default="json")
    decompose.add_argument("--color", choices=("by-circuit", "none"), default=None)
    _add_output(decompose)
    decompose.set_defaults(func=_cmd_decompose)

    pack = sub.add_parser(
        "pack", help="step circuits plus residual cycle systems for any odd order"
    )
    pack.add_argument("--order", type=int, required=True)
    pack.add_argument("--format", choices=("json", "dot"), default="json")
    pack.add_argument("--color", choices=("by-circuit", "none"), default=None)
    _add_output(pack)
    pack.set_defaults(func=_cmd_pack)

    rotate = sub.add_parser(
        "rotate", help="rotationally constructed tournament and its decomposition"
    )
    rotate.add_argument("--order", type=int, required=True)
    rotate.add_argument(
        "--emit", choices=("tournament", "decomposition", "both"), default="decomposition"
    )
    rotate.add_argument("--format", choices=("matrix", "json", "dot"), default=None)
    rotate.add_argument("--color", choices=("by-circuit", "none"), default=None)
    _add_output(rotate)
    rotate.set_defaults(func=_cmd_rotate)

    search = sub.add_parser(
        "search", help="exhaustive backtracking search for a Hamilton decomposition"
    )
    _add_source(search)
    search.add_argument("--budget-nodes", type=int, default=None, metavar="N")
    search.add_argument("--budget-seconds", type=float, default=None, metavar="S")
    search.add_argument("--jobs", type=int, default=1, metavar="J")
    _add_output(search)
    search.set_defaults(func=_cmd_search)

    verify = sub.add_parser("verify", help="verify a packing document against a tournament")
    verify.add_argument("--input", required=True, metavar="PATH", help="packing JSON, - for stdin")
    target = verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--order", type=int, help="verify against the leading tournament")
    target.add_argument("--tournament", metavar="PATH", help="adjacency-matrix file to verify against")
    _add_output(verify)
    verify.set_defaults(func=_cmd_verify)

    classify = sub.add_parser(
        "classify", help="edge distance types of a leading tournament"
    )
    _add_source(classify)
    _add_output(classify)
    classify.set_defaults(func=_cmd_classify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
