from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamtour.core import InvalidOrderError, build_leading_tournament
from hamtour.steps import (
    CompositeOrderError,
    NonCoprimeStepError,
    canonical_cycle,
    cycle_edges,
    decompose_prime,
    pack_leading,
    step_cycles,
    step_sequence,
)

from goldens import CIRCUITS_7, PACK_9_CIRCUITS, SEQUENCE_7_STEP_2, SEQUENCE_9_STEP_4, TRIANGLES_9

ODD_ORDERS = list(range(3, 33, 2))


def orbit_cycles(m, alpha):
    """Independent oracle: walk the orbits of x -> x + alpha (mod m) directly."""
    seen = set()
    cycles = []
    for start in range(1, m + 1):
        if start in seen:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(x)
            x = (x - 1 + alpha) % m + 1
        cycles.append(tuple(cycle))
    return cycles


def trial_division_prime(m):
    if m < 2:
        return False
    return all(m % d for d in range(2, int(m**0.5) + 1))


class TestStepSequence:
    def test_order_7_step_2(self):
        assert step_sequence(7, 2) == SEQUENCE_7_STEP_2

    def test_order_9_step_4(self):
        assert step_sequence(9, 4) == SEQUENCE_9_STEP_4

    def test_order_3_unit_step(self):
        assert step_sequence(3, 1) == (1, 2, 3, 1)

    @pytest.mark.parametrize("m", ODD_ORDERS)
    def test_interior_is_a_permutation(self, m):
        for alpha in range(1, (m - 1) // 2 + 1):
            if gcd(alpha, m) != 1:
                continue
            seq = step_sequence(m, alpha)
            assert len(seq) == m + 1
            assert seq[0] == seq[-1] == 1
            assert sorted(seq[:m]) == list(range(1, m + 1))

    def test_non_coprime_step_rejected(self):
        with pytest.raises(NonCoprimeStepError, match="step_cycles"):
            step_sequence(9, 3)

    def test_step_out_of_range(self):
        with pytest.raises(ValueError):
            step_sequence(9, 5)
        with pytest.raises(ValueError):
            step_sequence(9, 0)

    def test_even_order_rejected(self):
        with pytest.raises(InvalidOrderError):
            step_sequence(8, 1)


class TestStepCycles:
    def test_order_9_step_3_gives_the_triangles(self):
        system = step_cycles(9, 3)
        assert system.cycles == TRIANGLES_9
        assert not system.is_hamilton

    def test_order_7_step_3_gives_one_circuit(self):
        system = step_cycles(7, 3)
        assert system.cycles == ((1, 4, 7, 3, 6, 2, 5),)
        assert system.is_hamilton

    def test_order_15_step_5_gives_five_triangles(self):
        system = step_cycles(15, 5)
        assert system.cycles == tuple(
            tuple(orbit) for orbit in orbit_cycles(15, 5)
        )
        assert len(system.cycles) == 5
        assert all(len(c) == 3 for c in system.cycles)

    @pytest.mark.parametrize("m", ODD_ORDERS)
    def test_gcd_cycle_structure(self, m):
        for alpha in range(1, (m - 1) // 2 + 1):
            system = step_cycles(m, alpha)
            g = gcd(alpha, m)
            assert len(system.cycles) == g
            assert all(len(c) == m // g for c in system.cycles)
            assert system.cycles == tuple(tuple(c) for c in orbit_cycles(m, alpha))
            # vertex-disjoint cover of 1..m
            flat = [v for c in system.cycles for v in c]
            assert sorted(flat) == list(range(1, m + 1))

    @pytest.mark.parametrize("m", ODD_ORDERS)
    def test_every_edge_has_distance_equal_to_the_step(self, m):
        for alpha in range(1, (m - 1) // 2 + 1):
            for cycle in step_cycles(m, alpha).cycles:
                for tail, head in cycle_edges(cycle):
                    assert (head - tail) % m == alpha

    def test_cycles_are_rooted_at_minimum_and_ordered(self):
        system = step_cycles(15, 6)
        roots = [c[0] for c in system.cycles]
        assert roots == sorted(roots)
        assert all(c[0] == min(c) for c in system.cycles)


class TestDecomposePrime:
    def test_order_7_reference_circuits(self):
        assert decompose_prime(7).circuits == CIRCUITS_7

    def test_order_3(self):
        result = decompose_prime(3)
        assert result.circuits == ((1, 2, 3),)
        assert result.is_decomposition

    def test_composite_order_rejected(self):
        with pytest.raises(CompositeOrderError, match="pack_leading"):
            decompose_prime(9)

    def test_even_order_rejected(self):
        with pytest.raises(InvalidOrderError):
            decompose_prime(4)

    @pytest.mark.parametrize("m", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
    def test_prime_decomposition_covers_the_leading_tournament(self, m):
        t = build_leading_tournament(m)
        result = decompose_prime(m)
        n = (m - 1) // 2
        assert len(result.circuits) == n
        assert result.residual == ()
        used = set()
        for circuit in result.circuits:
            assert sorted(circuit) == list(range(1, m + 1))
            for arc in cycle_edges(circuit):
                assert arc not in used
                used.add(arc)
        assert used == {(e.tail, e.head) for e in t.edges()}
        # each circuit gives every vertex exactly one in- and one out-edge
        for v in range(1, m + 1):
            outs = sum(1 for (a, _) in used if a == v)
            ins = sum(1 for (_, b) in used if b == v)
            assert outs == ins == n


class TestPackLeading:
    def test_order_9_reference_packing(self):
        result = pack_leading(9)
        assert result.circuits == PACK_9_CIRCUITS
        assert len(result.residual) == 1
        assert result.residual[0].step == 3
        assert result.residual[0].cycles == TRIANGLES_9

    def test_order_7_has_empty_residual(self):
        assert pack_leading(7).residual == ()

    def test_order_15_structure(self):
        result = pack_leading(15)
        assert len(result.circuits) == 4  # steps 1, 2, 4, 7
        shapes = [(s.step, len(s.cycles), len(s.cycles[0])) for s in result.residual]
        assert shapes == [(3, 3, 5), (5, 5, 3), (6, 3, 5)]

    @pytest.mark.parametrize("m", ODD_ORDERS)
    def test_packing_covers_each_edge_exactly_once(self, m):
        t = build_leading_tournament(m)
        result = pack_leading(m)
        used = []
        for circuit in result.circuits:
            used.extend(cycle_edges(circuit))
        for system in result.residual:
            for cycle in system.cycles:
                used.extend(cycle_edges(cycle))
        assert len(used) == len(set(used)) == (m - 1) // 2 * m
        assert set(used) == {(e.tail, e.head) for e in t.edges()}

    @pytest.mark.parametrize("m", range(3, 101, 2))
    def test_residual_empty_iff_prime(self, m):
        assert pack_leading(m).is_decomposition == trial_division_prime(m)


@given(st.lists(st.integers(1, 999), min_size=3, unique=True), st.integers(0, 100))
def test_canonical_cycle_is_rotation_invariant(labels, shift):
    cycle = tuple(labels)
    k = shift % len(cycle)
    rotated = cycle[k:] + cycle[:k]
    assert canonical_cycle(rotated) == canonical_cycle(cycle)
    assert canonical_cycle(cycle)[0] == min(cycle)
