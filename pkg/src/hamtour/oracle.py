"""Exhaustive backtracking search for Hamilton decompositions, plus a verifier.

The searcher handles any diregular tournament at desk scale.  Circuits
are enumerated canonically: every circuit is rooted at vertex 1,
successors are tried in ascending label order, and successive circuits
must be lexicographically increasing (their second vertices strictly
ascend, since no two circuits may reuse an edge out of vertex 1).  The
first decomposition reported is therefore a deterministic function of
the input alone, and a completed search without a find is a proof that
no decomposition exists.

A node is counted each time a vertex is appended to a partial circuit.
Search within one top-level branch (one choice of the first circuit's
second vertex) is self-contained, which lets the optional parallel mode
split branches across worker processes and still report exactly the
single-threaded canonical outcome.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import Tournament, is_diregular
from .steps import PackingResult, cycle_edges

DECOMPOSED = "decomposed"
EXHAUSTED = "exhausted-no-decomposition"
BUDGET_EXCEEDED = "budget-exceeded"

#: Largest order accepted without an explicit budget.
EXHAUSTIVE_CEILING = 11


@dataclass(frozen=True)
class SearchBudget:
    """Limits on the search; ``None`` means unlimited."""

    max_nodes: int | None = None
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a search run.

    ``decomposition`` is present exactly when status is ``decomposed``;
    an ``exhausted-no-decomposition`` status certifies nonexistence.
    """

    status: str
    decomposition: PackingResult | None
    nodes_explored: int


@dataclass(frozen=True)
class VerificationReport:
    """Boolean verdict plus diagnostics naming the first violation."""

    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_decomposition(t: Tournament, p: PackingResult) -> VerificationReport:
    """Check that the circuits and residual cycles exactly partition t's edges.

    Verifies that every circuit is a Hamilton circuit of t, that all
    cycles (circuits and residual) are pairwise edge-disjoint, and that
    their union equals the whole edge set.  Violations are reported, not
    raised.
    """
    m = t.order
    if p.order != m:
        return _failure(f"order mismatch: packing says {p.order}, tournament has {m}")

    labeled: list[tuple[str, tuple[int, ...], bool]] = [
        (f"circuit {i + 1}", c, True) for i, c in enumerate(p.circuits)
    ]
    for si, system in enumerate(p.residual):
        for ci, cycle in enumerate(system.cycles):
            labeled.append(
                (f"residual system {si + 1} cycle {ci + 1}", cycle, False)
            )

    used: set[tuple[int, int]] = set()
    for name, cycle, hamilton in labeled:
        if hamilton and len(cycle) != m:
            return _failure(f"{name} visits {len(cycle)} vertices, expected {m}")
        for v in cycle:
            if not isinstance(v, int) or not 1 <= v <= m:
                return _failure(f"{name} names vertex {v!r} outside 1..{m}")
        if len(set(cycle)) != len(cycle):
            dup = next(v for v in cycle if cycle.count(v) > 1)
            return _failure(f"{name} repeats vertex {dup}")
        for tail, head in cycle_edges(cycle):
            if not t.has_edge(tail, head):
                return _failure(
                    f"{name} uses edge {tail}->{head} which is not in the tournament"
                )
            if (tail, head) in used:
                return _failure(f"duplicate edge {tail}->{head} in {name}")
            used.add((tail, head))

    if len(used) != m * (m - 1) // 2:
        missing = next(e for e in t.edges() if (e.tail, e.head) not in used)
        return _failure(f"edge {missing} of the tournament is not covered")
    return VerificationReport(True)


def _failure(problem: str) -> VerificationReport:
    return VerificationReport(False, (problem,))


def greedy_extend_circuit(
    t: Tournament,
    used_edges: Iterable[tuple[int, int]],
    partial: Sequence[int],
) -> Iterator[tuple[int, ...]]:
    """Yield the canonical one-vertex extensions of a partial circuit.

    Successors are tried in ascending label order, skipping vertices
    already on the path and edges in ``used_edges``.  A partial of full
    length m yields itself exactly when the closing edge back to vertex
    1 is present and unused, marking a completed circuit.
    """
    if not partial or partial[0] != 1:
        raise ValueError("partial circuit must start at vertex 1")
    used = {(tail, head) for tail, head in used_edges}
    path = tuple(partial)
    last = path[-1]
    if len(path) == t.order:
        if t.has_edge(last, 1) and (last, 1) not in used:
            yield path
        return
    on_path = set(path)
    for head in t.out_neighbors(last):
        if head in on_path or (last, head) in used:
            continue
        yield path + (head,)


class _BudgetExceeded(Exception):
    pass


def _column_masks(rows: Sequence[int]) -> list[int]:
    m = len(rows)
    cols = [0] * m
    for i, row in enumerate(rows):
        r = row
        while r:
            bit = r & -r
            r ^= bit
            cols[bit.bit_length() - 1] |= 1 << i
    return cols


def _search_branch(
    rows: Sequence[int],
    second: int,
    max_nodes: int | None,
    time_limit: float | None,
) -> tuple[str, list[tuple[int, ...]] | None, int]:
    """Search the subtree where the first circuit starts 1 -> (second + 1).

    Vertices are 0-based bit indices internally.  Returns the branch
    status, the first decomposition found in canonical order (as 1-based
    circuits) or None, and the number of nodes explored.
    """
    m = len(rows)
    n = (m - 1) // 2
    out = list(rows)
    inn = _column_masks(rows)
    nodes = 0
    deadline = None if time_limit is None else time.monotonic() + time_limit
    path = [0] * m
    circuits: list[list[int]] = []
    found: list[list[int]] | None = None

    def tick() -> None:
        nonlocal nodes
        if max_nodes is not None and nodes >= max_nodes:
            raise _BudgetExceeded
        if deadline is not None and nodes & 1023 == 0 and time.monotonic() >= deadline:
            raise _BudgetExceeded
        nodes += 1

    def extend(pos: int, visited: int, last: int, floor: int) -> bool:
        nonlocal found
        if pos == m:
            if not out[last] & 1:
                return False
            cycle = path.copy()
            arcs = [(cycle[k], cycle[(k + 1) % m]) for k in range(m)]
            for u, v in arcs:
                out[u] &= ~(1 << v)
                inn[v] &= ~(1 << u)
            circuits.append(cycle)
            need = n - len(circuits)
            if need == 0:
                found = [c.copy() for c in circuits]
                ok = True
            elif all(
                out[u].bit_count() >= need and inn[u].bit_count() >= need
                for u in range(m)
            ):
                # Remaining-degree condition; for diregular inputs it holds
                # with equality after every completed circuit, so it acts as
                # a bookkeeping guard rather than a cut.
                ok = extend(1, 1, 0, cycle[1] + 1)
            else:
                ok = False
            if not ok:
                circuits.pop()
                for u, v in arcs:
                    out[u] |= 1 << v
                    inn[v] |= 1 << u
                # the next-circuit recursion reuses path; put this level back
                path[:] = cycle
            return ok
        cands = out[last] & ~visited
        if pos == 1:
            cands &= -1 << floor
        while cands:
            bit = cands & -cands
            cands ^= bit
            tick()
            v = bit.bit_length() - 1
            path[pos] = v
            if extend(pos + 1, visited | bit, v, floor):
                return True
        return False

    status = EXHAUSTED
    try:
        tick()  # placing the branch's second vertex is the first node
        path[0] = 0
        path[1] = second
        if extend(2, 1 | (1 << second), second, 0):
            status = DECOMPOSED
    except _BudgetExceeded:
        status = BUDGET_EXCEEDED
    if status == DECOMPOSED and found is not None:
        labeled = [tuple(v + 1 for v in c) for c in found]
        return status, labeled, nodes
    return status, None, nodes


def _branch_worker(
    args: tuple[tuple[int, ...], int, int | None, float | None],
) -> tuple[str, list[tuple[int, ...]] | None, int]:
    rows, second, max_nodes, time_limit = args
    return _search_branch(rows, second, max_nodes, time_limit)


def find_decomposition(
    t: Tournament,
    budget: SearchBudget | None = None,
    jobs: int = 1,
) -> SearchOutcome:
    """Canonical-order exhaustive search for a Hamilton decomposition of t.

    The input must be diregular.  Without a budget the order is capped
    at EXHAUSTIVE_CEILING; above that a node or time budget is required.
    With ``jobs`` > 1 the top-level branches run in worker processes and
    the branch results are recombined in canonical order, so the outcome
    matches the single-threaded run (exactly so for node budgets; time
    budgets are wall-clock and inherently approximate in either mode).
    """
    if budget is None:
        budget = SearchBudget()
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError(f"jobs must be a positive integer, got {jobs!r}")
    if not is_diregular(t):
        raise ValueError("search requires a diregular tournament")
    if budget.max_nodes is None and budget.time_limit is None:
        if t.order > EXHAUSTIVE_CEILING:
            raise ValueError(
                f"order {t.order} exceeds the exhaustive ceiling "
                f"{EXHAUSTIVE_CEILING}; set a node or time budget"
            )

    branches = []
    row = t.rows[0]
    while row:
        bit = row & -row
        row ^= bit
        branches.append(bit.bit_length() - 1)

    if jobs == 1:
        results = _run_serial(t.rows, branches, budget)
    else:
        args = [(t.rows, b, budget.max_nodes, budget.time_limit) for b in branches]
        workers = min(jobs, len(branches))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_branch_worker, args))
    return _combine(t.order, results, budget)


def _run_serial(
    rows: tuple[int, ...],
    branches: list[int],
    budget: SearchBudget,
) -> list[tuple[str, list[tuple[int, ...]] | None, int]]:
    deadline = (
        None if budget.time_limit is None else time.monotonic() + budget.time_limit
    )
    results = []
    spent = 0
    for branch in branches:
        remaining_nodes = (
            None if budget.max_nodes is None else budget.max_nodes - spent
        )
        remaining_time = None if deadline is None else deadline - time.monotonic()
        result = _search_branch(rows, branch, remaining_nodes, remaining_time)
        results.append(result)
        spent += result[2]
        if result[0] != EXHAUSTED:
            break
    return results


def _combine(
    order: int,
    results: list[tuple[str, list[tuple[int, ...]] | None, int]],
    budget: SearchBudget,
) -> SearchOutcome:
    cap = budget.max_nodes
    spent = 0
    for status, circuits, nodes in results:
        remaining = None if cap is None else cap - spent
        if remaining is not None and nodes > remaining:
            # A parallel worker ran past the point where a shared node
            # budget would have stopped the serial search.
            return SearchOutcome(BUDGET_EXCEEDED, None, cap)
        if status == BUDGET_EXCEEDED:
            return SearchOutcome(BUDGET_EXCEEDED, None, spent + nodes)
        spent += nodes
        if status == DECOMPOSED:
            assert circuits is not None
            packing = PackingResult(order=order, circuits=tuple(circuits))
            return SearchOutcome(DECOMPOSED, packing, spent)
    return SearchOutcome(EXHAUSTED, None, spent)
