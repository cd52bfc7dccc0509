"""Serialization: adjacency-matrix text, DOT digraphs, and packing JSON.

Formats
-------
matrix
    m lines of m space-separated 0/1 entries, newline-terminated; row i
    lists the out-neighbors of vertex i.
dot
    a deterministic ``digraph`` with nodes v1..vm and one edge line per
    arc, sorted by (tail, head), with optional color attributes.
json
    ``{"order": m, "circuits": [[...], ...], "residual": [{"step": s,
    "cycles": [[...], ...]}, ...]}`` with fixed key order, so equal
    packings serialize byte-identically.

The DOT color wheel for circuits is :data:`PALETTE` (eight colors,
reused cyclically in circuit order); residual edges always use
:data:`RESIDUAL_COLOR`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .core import Tournament, edge_type
from .steps import CycleSystem, PackingResult, cycle_edges
from .oracle import verify_decomposition

PALETTE = (
    "brown",
    "green",
    "orange",
    "purple",
    "red",
    "goldenrod",
    "turquoise",
    "magenta",
)
RESIDUAL_COLOR = "blue"

FORMATS = ("matrix", "dot", "json")
COLORINGS = ("by-circuit", "by-edge-type", "none")


class MatrixFormatError(ValueError):
    """Malformed adjacency-matrix text; the message names row/column."""


class PackingJSONError(ValueError):
    """Packing document violates the schema; the message carries a JSON path."""


@dataclass(frozen=True)
class ExportStyle:
    """Output format plus edge coloring; coloring applies to dot only."""

    format: str
    coloring: str = "none"

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.coloring not in COLORINGS:
            raise ValueError(f"unknown coloring {self.coloring!r}")
        if self.coloring != "none" and self.format != "dot":
            raise ValueError("coloring applies only to the dot format")


def export_matrix(t: Tournament) -> str:
    """Adjacency matrix as 0/1 text; round-trips through parse_matrix."""
    return "".join(
        " ".join(str(cell) for cell in row) + "\n" for row in t.to_matrix()
    )


def parse_matrix(text: str) -> Tournament:
    """Parse 0/1 adjacency text back into a validated tournament.

    Raises MatrixFormatError for shape or token problems, naming the
    first bad row/column, and NotATournamentError or InvalidOrderError
    when the grid is not a tournament of odd order >= 3.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixFormatError("empty input")
    matrix: list[list[int]] = []
    for i, line in enumerate(lines, start=1):
        row: list[int] = []
        for j, token in enumerate(line.split(), start=1):
            if token == "0":
                row.append(0)
            elif token == "1":
                row.append(1)
            else:
                raise MatrixFormatError(
                    f"row {i}, column {j}: expected 0 or 1, got {token!r}"
                )
        matrix.append(row)
    size = len(matrix)
    for i, row in enumerate(matrix, start=1):
        if len(row) != size:
            raise MatrixFormatError(
                f"row {i}: expected {size} entries, found {len(row)}"
            )
    return Tournament.from_matrix(matrix)


def export_dot(
    t: Tournament,
    packing: PackingResult | None = None,
    coloring: str = "none",
) -> str:
    """Render the tournament as a DOT digraph with deterministic line order.

    With ``by-circuit`` coloring (requires a packing that verifies
    against t) each circuit's edges share one palette color and residual
    edges use the reserved residual color.  ``by-edge-type`` colors each
    distance class of a leading tournament.
    """
    if coloring not in COLORINGS:
        raise ValueError(f"unknown coloring {coloring!r}")
    if packing is not None:
        report = verify_decomposition(t, packing)
        if not report:
            raise ValueError(
                f"packing does not match the tournament: {report.problems[0]}"
            )
    colors: dict[tuple[int, int], str] = {}
    if coloring == "by-circuit":
        if packing is None:
            raise ValueError("by-circuit coloring requires a packing")
        for i, circuit in enumerate(packing.circuits):
            color = PALETTE[i % len(PALETTE)]
            for arc in cycle_edges(circuit):
                colors[arc] = color
        for system in packing.residual:
            for cycle in system.cycles:
                for arc in cycle_edges(cycle):
                    colors[arc] = RESIDUAL_COLOR
    elif coloring == "by-edge-type":
        for e in t.edges():
            colors[(e.tail, e.head)] = PALETTE[(edge_type(t, e) - 1) % len(PALETTE)]

    lines = ["digraph tournament {"]
    for v in range(1, t.order + 1):
        lines.append(f"  v{v};")
    for e in sorted(t.edges()):
        key = (e.tail, e.head)
        attr = f' [color="{colors[key]}"]' if key in colors else ""
        lines.append(f"  v{e.tail} -> v{e.head}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def packing_to_dict(p: PackingResult) -> dict[str, Any]:
    """Plain-data form of a packing, in the JSON schema's field order."""
    return {
        "order": p.order,
        "circuits": [list(c) for c in p.circuits],
        "residual": [
            {"step": s.step, "cycles": [list(c) for c in s.cycles]}
            for s in p.residual
        ],
    }


def export_json(p: PackingResult) -> str:
    """Packing as JSON text; round-trips through parse_json byte-stably.

    Fixed key order and one cycle list per line, so equal packings
    always serialize to identical bytes.
    """

    def block(items: list[str]) -> str:
        if not items:
            return "[]"
        return "[\n" + ",\n".join("    " + item for item in items) + "\n  ]"

    circuits = block([json.dumps(list(c)) for c in p.circuits])
    residual = block(
        [
            json.dumps({"step": s.step, "cycles": [list(c) for c in s.cycles]})
            for s in p.residual
        ]
    )
    return (
        "{\n"
        f'  "order": {p.order},\n'
        f'  "circuits": {circuits},\n'
        f'  "residual": {residual}\n'
        "}\n"
    )


def parse_json(text: str) -> PackingResult:
    """Parse and validate a packing document.

    Schema violations raise PackingJSONError with a JSON-path diagnostic
    such as ``$.residual[0].step``.  Validation is structural only;
    whether the packing actually covers a tournament is the verifier's
    job.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PackingJSONError(f"$: not valid JSON ({exc.msg} at line {exc.lineno})") from exc
    _expect(isinstance(doc, dict), "$", "expected an object")
    unknown = set(doc) - {"order", "circuits", "residual"}
    _expect(not unknown, "$", f"unexpected key {sorted(unknown)[0]!r}" if unknown else "")
    for key in ("order", "circuits", "residual"):
        _expect(key in doc, "$", f"missing key {key!r}")

    order = doc["order"]
    _expect(_is_int(order), "$.order", "expected an integer")
    _expect(order >= 3 and order % 2 == 1, "$.order", f"expected an odd integer >= 3, got {order}")

    circuits_doc = doc["circuits"]
    _expect(isinstance(circuits_doc, list), "$.circuits", "expected an array")
    circuits = []
    for i, circuit in enumerate(circuits_doc):
        path = f"$.circuits[{i}]"
        circuits.append(_parse_cycle(circuit, path, order, expect_length=order))

    residual_doc = doc["residual"]
    _expect(isinstance(residual_doc, list), "$.residual", "expected an array")
    residual = []
    for i, entry in enumerate(residual_doc):
        path = f"$.residual[{i}]"
        _expect(isinstance(entry, dict), path, "expected an object")
        unknown = set(entry) - {"step", "cycles"}
        _expect(not unknown, path, f"unexpected key {sorted(unknown)[0]!r}" if unknown else "")
        for key in ("step", "cycles"):
            _expect(key in entry, path, f"missing key {key!r}")
        step = entry["step"]
        _expect(_is_int(step), f"{path}.step", "expected an integer")
        _expect(
            1 <= step <= (order - 1) // 2,
            f"{path}.step",
            f"expected a step in 1..{(order - 1) // 2}, got {step}",
        )
        cycles_doc = entry["cycles"]
        _expect(isinstance(cycles_doc, list), f"{path}.cycles", "expected an array")
        cycles = []
        for j, cycle in enumerate(cycles_doc):
            cycles.append(_parse_cycle(cycle, f"{path}.cycles[{j}]", order))
        residual.append(CycleSystem(order=order, step=step, cycles=tuple(cycles)))

    return PackingResult(order=order, circuits=tuple(circuits), residual=tuple(residual))


def _parse_cycle(
    value: Any,
    path: str,
    order: int,
    expect_length: int | None = None,
) -> tuple[int, ...]:
    _expect(isinstance(value, list), path, "expected an array")
    if expect_length is not None:
        _expect(
            len(value) == expect_length,
            path,
            f"expected {expect_length} vertices, found {len(value)}",
        )
    else:
        _expect(len(value) >= 3, path, f"expected at least 3 vertices, found {len(value)}")
    seen = set()
    for k, label in enumerate(value):
        entry_path = f"{path}[{k}]"
        _expect(_is_int(label), entry_path, "expected an integer")
        _expect(1 <= label <= order, entry_path, f"vertex {label} outside 1..{order}")
        _expect(label not in seen, entry_path, f"vertex {label} repeated")
        seen.add(label)
    _expect(
        value[0] == min(value),
        path,
        f"cycle must be rooted at its smallest vertex {min(value)}, starts at {value[0]}",
    )
    return tuple(value)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise PackingJSONError(f"{path}: {message}")
