"""Modular step sequences and the cycle systems they generate.

A step value alpha in 1..(m-1)/2 drives the map x -> x + alpha, with
values kept in 1..m.  When gcd(alpha, m) = 1 the orbit of vertex 1 is a
single Hamilton circuit of the leading tournament; otherwise the orbits
split into gcd(alpha, m) disjoint shorter cycles.  Running all steps
packs the leading tournament exactly: prime orders decompose fully into
Hamilton circuits, composite orders leave residual cycle systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .core import validate_order

HamiltonCircuit = tuple[int, ...]


class NonCoprimeStepError(ValueError):
    """Step shares a factor with the order, so it cannot yield one circuit."""


class CompositeOrderError(ValueError):
    """Order is not prime, so not all steps generate Hamilton circuits."""


def canonical_cycle(vertices: Iterable[int]) -> tuple[int, ...]:
    """Rotate a cyclic vertex sequence so it starts at its smallest label."""
    seq = tuple(vertices)
    k = seq.index(min(seq))
    return seq[k:] + seq[:k]


def cycle_edges(cycle: tuple[int, ...]) -> Iterable[tuple[int, int]]:
    """Directed edges of a cyclic vertex sequence, including the closing one."""
    for k, tail in enumerate(cycle):
        yield tail, cycle[(k + 1) % len(cycle)]


@dataclass(frozen=True)
class CycleSystem:
    """Vertex-disjoint cycles generated by one step value over 1..order.

    There are gcd(step, order) cycles of length order/gcd(step, order);
    every edge has cyclic distance equal to the step.
    """

    order: int
    step: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def is_hamilton(self) -> bool:
        return len(self.cycles) == 1


@dataclass(frozen=True)
class PackingResult:
    """Edge-disjoint Hamilton circuits plus any residual cycle systems.

    With an empty residual the result is a Hamilton decomposition with
    exactly (order-1)/2 circuits.
    """

    order: int
    circuits: tuple[HamiltonCircuit, ...]
    residual: tuple[CycleSystem, ...] = ()

    @property
    def is_decomposition(self) -> bool:
        return not self.residual


def _validate_step(m: int, alpha: int) -> None:
    n = (m - 1) // 2
    if not isinstance(alpha, int) or not 1 <= alpha <= n:
        raise ValueError(f"step must be in 1..{n} for order {m}, got {alpha!r}")


def step_sequence(m: int, alpha: int) -> tuple[int, ...]:
    """The sequence (1, 1+alpha, 1+2*alpha, ..., 1) of length m+1, values in 1..m.

    Entry k is (k*alpha mod m) + 1, so the value m is written as m, never 0.
    Requires gcd(alpha, m) = 1; entries 1..m are then a permutation of 1..m.
    """
    validate_order(m)
    _validate_step(m, alpha)
    g = gcd(alpha, m)
    if g != 1:
        raise NonCoprimeStepError(
            f"step {alpha} shares factor {g} with order {m}; use step_cycles"
        )
    return tuple((k * alpha) % m + 1 for k in range(m + 1))


def step_cycles(m: int, alpha: int) -> CycleSystem:
    """Orbits of x -> x + alpha (mod m, in 1..m) as a cycle system.

    Cycles are rooted at their smallest vertex and listed with roots
    ascending; the roots are exactly 1..gcd(alpha, m).
    """
    validate_order(m)
    _validate_step(m, alpha)
    g = gcd(alpha, m)
    length = m // g
    cycles = []
    for root in range(1, g + 1):
        cycle = [root]
        x = root
        for _ in range(length - 1):
            x = (x - 1 + alpha) % m + 1
            cycle.append(x)
        cycles.append(tuple(cycle))
    return CycleSystem(order=m, step=alpha, cycles=tuple(cycles))


def _is_prime(m: int) -> bool:
    # deterministic trial division; orders are desk-scale
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def decompose_prime(m: int) -> PackingResult:
    """Hamilton decomposition of the prime-order leading tournament.

    Every step 1..(m-1)/2 is coprime to a prime m, so the step circuits
    are edge-disjoint and cover the whole edge set.
    """
    validate_order(m)
    if not _is_prime(m):
        raise CompositeOrderError(
            f"order {m} is not prime; use pack_leading for the partial packing "
            "or an exhaustive search for a full decomposition"
        )
    result = pack_leading(m)
    assert result.is_decomposition
    return result


def pack_leading(m: int) -> PackingResult:
    """Pack the leading tournament by steps: circuits where coprime, residual otherwise.

    For each step alpha in 1..(m-1)/2 the generated system lands in
    ``circuits`` when gcd(alpha, m) = 1 and in ``residual`` otherwise.
    Together they cover every edge exactly once; the residual is empty
    iff m is prime.
    """
    validate_order(m)
    circuits = []
    residual = []
    for alpha in range(1, (m - 1) // 2 + 1):
        system = step_cycles(m, alpha)
        if system.is_hamilton:
            circuits.append(system.cycles[0])
        else:
            residual.append(system)
    return PackingResult(order=m, circuits=tuple(circuits), residual=tuple(residual))
