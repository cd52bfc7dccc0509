import pytest

from hamtour.core import (
    DirectedEdge,
    InvalidOrderError,
    NotATournamentError,
    Tournament,
    build_leading_tournament,
    didegree,
    edge_type,
    edges_of_type,
    is_diregular,
)

from goldens import LEADING_9_MATRIX


def two_case_matrix(m):
    """Independent oracle: row-range construction with explicit wrap-around.

    Rows 1..n+1 carry the full run j = i+1..i+n; the remaining rows carry
    the run truncated at m plus the wrap-around block j = 1..i-n-1.
    """
    n = (m - 1) // 2
    grid = [[0] * m for _ in range(m)]
    for i in range(1, n + 2):
        for j in range(i + 1, i + n + 1):
            grid[i - 1][j - 1] = 1
    for i in range(n + 2, m + 1):
        for j in range(i + 1, m + 1):
            grid[i - 1][j - 1] = 1
        for j in range(1, i - n):
            grid[i - 1][j - 1] = 1
    return grid


def test_leading_9_matches_reference_matrix():
    assert build_leading_tournament(9).to_matrix() == LEADING_9_MATRIX


def test_leading_3_is_the_directed_triangle():
    assert build_leading_tournament(3).to_matrix() == [
        [0, 1, 0],
        [0, 0, 1],
        [1, 0, 0],
    ]


@pytest.mark.parametrize("m", [3, 5, 7, 9, 11, 13])
def test_congruence_rule_equals_two_case_rule(m):
    assert build_leading_tournament(m).to_matrix() == two_case_matrix(m)


@pytest.mark.parametrize("m", range(3, 33, 2))
def test_leading_tournament_is_diregular(m):
    assert is_diregular(build_leading_tournament(m))


@pytest.mark.parametrize("m", [3, 9, 15])
def test_tournament_axioms(m):
    grid = build_leading_tournament(m).to_matrix()
    for i in range(m):
        assert grid[i][i] == 0
        for j in range(m):
            if i != j:
                assert grid[i][j] + grid[j][i] == 1


@pytest.mark.parametrize("m", [4, 2, 1, 0, -3])
def test_build_rejects_bad_orders(m):
    with pytest.raises(InvalidOrderError):
        build_leading_tournament(m)


def test_didegree_leading_9():
    t = build_leading_tournament(9)
    assert didegree(t, 1) == (4, 4)


def test_didegree_leading_3():
    assert didegree(build_leading_tournament(3), 2) == (1, 1)


def test_didegree_components_sum_to_order_minus_one():
    t = build_leading_tournament(11)
    for v in range(1, 12):
        d = didegree(t, v)
        assert d.in_degree + d.out_degree == 10


def test_didegree_rejects_out_of_range_vertex():
    t = build_leading_tournament(5)
    with pytest.raises(ValueError):
        didegree(t, 0)
    with pytest.raises(ValueError):
        didegree(t, 6)


def test_is_diregular_false_for_transitive_triangle():
    t = Tournament.from_matrix([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    assert not is_diregular(t)
    assert didegree(t, 1) == (0, 2)
    assert didegree(t, 2) == (1, 1)
    assert didegree(t, 3) == (2, 0)


class TestEdgeType:
    def test_unit_distance(self):
        t = build_leading_tournament(9)
        assert edge_type(t, DirectedEdge(1, 2)) == 1

    def test_wraparound_distance(self):
        t = build_leading_tournament(9)
        assert edge_type(t, (6, 1)) == 4

    def test_triangle_distance(self):
        t = build_leading_tournament(9)
        assert edge_type(t, (1, 4)) == 3

    def test_agrees_with_brute_force_classification(self):
        # classify all 36 edges by direct modular arithmetic
        t = build_leading_tournament(9)
        for i in range(1, 10):
            for j in range(1, 10):
                if i == j:
                    continue
                distance = (j - i) % 9
                if distance <= 4:
                    assert edge_type(t, (i, j)) == distance
                else:
                    assert not t.has_edge(i, j)

    def test_missing_edge_rejected(self):
        t = build_leading_tournament(9)
        with pytest.raises(ValueError, match="not present"):
            edge_type(t, (2, 1))

    def test_non_leading_edge_rejected(self):
        # flip one pair of the leading tournament; the flipped edge now has
        # cyclic distance 8 > 4
        grid = build_leading_tournament(9).to_matrix()
        grid[0][1], grid[1][0] = 0, 1
        t = Tournament.from_matrix(grid)
        with pytest.raises(ValueError, match="not leading"):
            edge_type(t, (2, 1))


class TestEdgesOfType:
    def test_type_1_is_the_outer_cycle(self):
        t = build_leading_tournament(9)
        expected = {DirectedEdge(i, i % 9 + 1) for i in range(1, 10)}
        assert edges_of_type(t, 1) == expected

    def test_order_3_has_only_type_1(self):
        t = build_leading_tournament(3)
        assert edges_of_type(t, 1) == {
            DirectedEdge(1, 2),
            DirectedEdge(2, 3),
            DirectedEdge(3, 1),
        }

    def test_type_3_forms_the_three_triangles(self):
        t = build_leading_tournament(9)
        expected = set()
        for a, b, c in ((1, 4, 7), (2, 5, 8), (3, 6, 9)):
            expected |= {DirectedEdge(a, b), DirectedEdge(b, c), DirectedEdge(c, a)}
        assert edges_of_type(t, 3) == expected

    @pytest.mark.parametrize("m", range(3, 33, 2))
    def test_types_partition_the_edge_set(self, m):
        t = build_leading_tournament(m)
        n = (m - 1) // 2
        union = set()
        for ty in range(1, n + 1):
            batch = edges_of_type(t, ty)
            assert len(batch) == m
            assert not union & batch
            union |= batch
        assert union == set(t.edges())
        assert len(union) == n * m

    def test_type_out_of_range(self):
        t = build_leading_tournament(9)
        with pytest.raises(ValueError):
            edges_of_type(t, 0)
        with pytest.raises(ValueError):
            edges_of_type(t, 5)

    def test_non_leading_tournament_rejected(self):
        grid = build_leading_tournament(9).to_matrix()
        grid[0][1], grid[1][0] = 0, 1
        t = Tournament.from_matrix(grid)
        with pytest.raises(ValueError, match="not leading"):
            edges_of_type(t, 1)


class TestTournamentValidation:
    def test_even_order_rejected(self):
        with pytest.raises(InvalidOrderError):
            Tournament.from_matrix(
                [[0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0]]
            )

    def test_loop_rejected(self):
        with pytest.raises(NotATournamentError, match="loop at vertex 2"):
            Tournament.from_matrix([[0, 1, 0], [0, 1, 1], [1, 0, 0]])

    def test_bidirectional_pair_rejected(self):
        with pytest.raises(NotATournamentError, match=r"\(1, 2\)"):
            Tournament.from_matrix([[0, 1, 0], [1, 0, 1], [1, 0, 0]])

    def test_missing_pair_rejected(self):
        with pytest.raises(NotATournamentError, match=r"\(1, 2\)"):
            Tournament.from_matrix([[0, 0, 0], [0, 0, 1], [1, 0, 0]])

    def test_non_square_rejected(self):
        with pytest.raises(NotATournamentError, match="row 2"):
            Tournament.from_matrix([[0, 1, 0], [0, 0], [1, 0, 0]])

    def test_non_binary_entry_rejected(self):
        with pytest.raises(NotATournamentError, match=r"\(1, 2\)"):
            Tournament.from_matrix([[0, 2, 0], [0, 0, 1], [1, 0, 0]])

    def test_neighbors_are_ascending_and_one_based(self):
        t = build_leading_tournament(7)
        assert t.out_neighbors(6) == (1, 2, 7)
        assert t.in_neighbors(1) == (5, 6, 7)
        assert t.out_neighbors(1) == (2, 3, 4)
