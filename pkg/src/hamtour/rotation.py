"""Rotational construction of a Hamilton-decomposable diregular tournament.

Vertex 1 sits at the center of a circle carrying the other 2n labels.
Reading the circle clockwise from vertex 2, the odd labels ascend along
one half (3, 5, ..., 2n-1), vertex 2n+1 sits diametrically opposite
vertex 2, and the even labels descend along the other half (2n, 2n-2,
..., 4).  The base circuit 1 -> 2 -> ... -> 2n+1 -> 1 is then rotated
one circle position at a time.  Each of the n rotated images is a
Hamilton circuit sharing no edge, and no reversed edge, with the
others, so their union is a diregular tournament for every odd order,
prime or not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Tournament, validate_order
from .steps import HamiltonCircuit, PackingResult, canonical_cycle, cycle_edges


@dataclass(frozen=True)
class RotationLayout:
    """Clockwise labels on the circle; vertex 1 is the center and holds no position."""

    order: int
    circle_positions: tuple[int, ...]


def rotation_layout(m: int) -> RotationLayout:
    """Circle order starting at vertex 2: odd labels up, then m, then even labels down."""
    validate_order(m)
    odds = list(range(3, m - 1, 2))
    evens = list(range(m - 1, 3, -2))
    return RotationLayout(order=m, circle_positions=tuple([2] + odds + [m] + evens))


def rotation_permutation(m: int) -> dict[int, int]:
    """Advance every circle label one position clockwise; vertex 1 stays fixed.

    The mapping is a single (m-1)-cycle on labels 2..m, so its (m-1)-th
    power is the identity.
    """
    circle = rotation_layout(m).circle_positions
    size = len(circle)
    sigma = {1: 1}
    for idx, label in enumerate(circle):
        sigma[label] = circle[(idx + 1) % size]
    return sigma


def base_circuit(m: int) -> HamiltonCircuit:
    """The circuit 1 -> 2 -> ... -> m -> 1."""
    validate_order(m)
    return tuple(range(1, m + 1))


def rotation_decomposition(m: int) -> PackingResult:
    """The base circuit and its first (m-3)/2 rotations: n edge-disjoint circuits.

    Each circuit is the image of the base circuit under a power of the
    rotation permutation, rooted at vertex 1 (which every power fixes).
    """
    validate_order(m)
    sigma = rotation_permutation(m)
    n = (m - 1) // 2
    circuit = base_circuit(m)
    circuits = [circuit]
    for _ in range(n - 1):
        circuit = tuple(sigma[v] for v in circuit)
        circuits.append(canonical_cycle(circuit))
    return PackingResult(order=m, circuits=tuple(circuits), residual=())


def rotation_tournament(m: int) -> Tournament:
    """Union of the rotation circuits; a diregular tournament by construction."""
    decomposition = rotation_decomposition(m)
    rows = [0] * m
    for circuit in decomposition.circuits:
        for tail, head in cycle_edges(circuit):
            rows[tail - 1] |= 1 << (head - 1)
    return Tournament(tuple(rows))
