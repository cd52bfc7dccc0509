"""Data model for tournaments on 1-based labeled vertices.

A tournament of order m is a complete digraph: between every pair of
distinct vertices exactly one of the two possible directed edges is
present.  Only odd orders m >= 3 are supported, since those are the
orders at which every vertex can have equal in- and out-degree.

Adjacency is bit-packed: row i (0-based) is an int whose bit j is set
iff the edge (i+1) -> (j+1) is present.  Bit positions are an internal
detail; every public interface speaks 1-based vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


class InvalidOrderError(ValueError):
    """Order is not an odd integer >= 3."""


class NotATournamentError(ValueError):
    """Adjacency structure violates the tournament axioms."""


def validate_order(m: int) -> None:
    """Reject orders that are not odd integers >= 3."""
    if not isinstance(m, int):
        raise InvalidOrderError(f"order must be an integer, got {m!r}")
    if m < 3 or m % 2 == 0:
        raise InvalidOrderError(f"order must be an odd integer >= 3, got {m}")


class DirectedEdge(NamedTuple):
    """Directed edge tail -> head between distinct 1-based vertices."""

    tail: int
    head: int

    def __str__(self) -> str:
        return f"{self.tail}->{self.head}"


class Didegree(NamedTuple):
    """The (in-degree, out-degree) pair of a vertex."""

    in_degree: int
    out_degree: int


@dataclass(frozen=True)
class Tournament:
    """Immutable tournament; axioms are validated eagerly on construction.

    ``rows[i]`` holds the out-neighborhood of vertex i+1 as a bitmask.
    Construct from a 0/1 grid with :meth:`from_matrix`, or use
    :func:`build_leading_tournament`.
    """

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.rows)
        validate_order(m)
        for i, row in enumerate(self.rows):
            if row < 0 or row >> m:
                raise NotATournamentError(
                    f"row {i + 1} addresses vertices outside 1..{m}"
                )
            if (row >> i) & 1:
                raise NotATournamentError(f"loop at vertex {i + 1}")
        for i in range(m):
            for j in range(i + 1, m):
                forward = (self.rows[i] >> j) & 1
                backward = (self.rows[j] >> i) & 1
                if forward == backward:
                    kind = "both directions" if forward else "no direction"
                    raise NotATournamentError(f"pair ({i + 1}, {j + 1}) has {kind}")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Tournament":
        """Build from a square 0/1 grid, row i = out-neighbors of vertex i+1."""
        size = len(matrix)
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != size:
                raise NotATournamentError(
                    f"row {i + 1} has {len(row)} entries, expected {size}"
                )
            bits = 0
            for j, cell in enumerate(row):
                if cell not in (0, 1):
                    raise NotATournamentError(
                        f"entry ({i + 1}, {j + 1}) is {cell!r}, expected 0 or 1"
                    )
                bits |= cell << j
            rows.append(bits)
        return cls(tuple(rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    def has_edge(self, tail: int, head: int) -> bool:
        self._check_vertex(tail)
        self._check_vertex(head)
        return bool((self.rows[tail - 1] >> (head - 1)) & 1)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Heads of edges leaving v, in ascending label order."""
        self._check_vertex(v)
        return tuple(
            j + 1 for j in range(self.order) if (self.rows[v - 1] >> j) & 1
        )

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Tails of edges entering v, in ascending label order."""
        self._check_vertex(v)
        return tuple(
            i + 1 for i in range(self.order) if (self.rows[i] >> (v - 1)) & 1
        )

    def edges(self) -> Iterator[DirectedEdge]:
        """All edges, sorted by (tail, head)."""
        for i, row in enumerate(self.rows):
            for j in range(self.order):
                if (row >> j) & 1:
                    yield DirectedEdge(i + 1, j + 1)

    def to_matrix(self) -> list[list[int]]:
        return [
            [(row >> j) & 1 for j in range(self.order)] for row in self.rows
        ]

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.order:
            raise ValueError(f"vertex {v!r} outside 1..{self.order}")

    def __repr__(self) -> str:
        return f"Tournament(order={self.order})"


def build_leading_tournament(m: int) -> Tournament:
    """Tournament on 1..m with edge i -> j exactly when (j - i) mod m is in 1..(m-1)/2.

    Each vertex beats the next (m-1)/2 vertices around the cycle, so the
    result is diregular by construction.
    """
    validate_order(m)
    n = (m - 1) // 2
    rows = []
    for i in range(m):
        bits = 0
        for d in range(1, n + 1):
            bits |= 1 << ((i + d) % m)
        rows.append(bits)
    return Tournament(tuple(rows))


def didegree(t: Tournament, v: int) -> Didegree:
    """In- and out-degree of vertex v; the components sum to order - 1."""
    t._check_vertex(v)
    out_degree = t.rows[v - 1].bit_count()
    in_degree = sum((row >> (v - 1)) & 1 for row in t.rows)
    return Didegree(in_degree, out_degree)


def is_diregular(t: Tournament) -> bool:
    """True iff every vertex has didegree ((m-1)/2, (m-1)/2)."""
    n = (t.order - 1) // 2
    return all(didegree(t, v) == (n, n) for v in range(1, t.order + 1))


def edge_type(t: Tournament, e: tuple[int, int]) -> int:
    """Cyclic distance (head - tail) mod m of an edge of a leading tournament.

    Raises ValueError if the edge is absent, or if its distance exceeds
    (m-1)/2, which cannot happen for a leading tournament and therefore
    signals a non-leading input.
    """
    tail, head = e
    if not t.has_edge(tail, head):
        raise ValueError(f"edge {tail}->{head} is not present in the tournament")
    m = t.order
    n = (m - 1) // 2
    distance = (head - tail) % m
    if distance > n:
        raise ValueError(
            f"edge {tail}->{head} has cyclic distance {distance} > {n}; "
            "the tournament is not leading"
        )
    return distance


def edges_of_type(t: Tournament, ty: int) -> set[DirectedEdge]:
    """The m edges of one distance type in a leading tournament.

    These are (i, i + ty mod m) for every vertex i; each vertex carries
    exactly one outgoing and one incoming edge of each type.
    """
    m = t.order
    n = (m - 1) // 2
    if not isinstance(ty, int) or not 1 <= ty <= n:
        raise ValueError(f"type must be in 1..{n}, got {ty!r}")
    edges = set()
    for i in range(1, m + 1):
        head = (i - 1 + ty) % m + 1
        if not t.has_edge(i, head):
            raise ValueError(
                f"tournament is not leading: edge {i}->{head} of type {ty} is absent"
            )
        edges.add(DirectedEdge(i, head))
    return edges
