import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordalham import (
    Graph,
    HoleWitness,
    InputError,
    NotChordalError,
    PerfectEliminationOrder,
    components_after_removal,
    is_chordal,
    is_connected,
    maximal_cliques,
)
from chordalham.graphs import elimination_order_violation
from chordalham.oracles import brute_force_maximal_cliques

from corpus import C4, K3, K4, K4_MINUS, P4, all_graphs, graph_from_mask


def brute_chordal(g: Graph) -> bool:
    for k in range(4, g.n + 1):
        for sub in itertools.permutations(range(g.n), k):
            if sub[0] != min(sub) or sub[1] > sub[-1]:
                continue
            if not all(g.has_edge(sub[i], sub[(i + 1) % k]) for i in range(k)):
                continue
            chords = any(
                g.has_edge(sub[i], sub[j])
                for i in range(k)
                for j in range(i + 2, k)
                if (i, j) != (0, k - 1)
            )
            if not chords:
                return False
    return True


class TestGraphType:
    def test_rejects_out_of_range_edge(self):
        with pytest.raises(InputError):
            Graph(2, frozenset({(0, 2)}))

    def test_rejects_reversed_pair(self):
        with pytest.raises(InputError):
            Graph(3, frozenset({(2, 1)}))

    def test_rejects_self_loop_in_edges(self):
        with pytest.raises(InputError):
            Graph.from_edges(3, [(1, 1)])

    def test_loops_live_in_their_own_field(self):
        g = Graph(3, frozenset({(0, 1)}), frozenset({2}))
        assert g.loops == frozenset({2})
        assert g.elements() == [(0, 1), (2, 2)]

    def test_from_edges_normalizes(self):
        g = Graph.from_edges(3, [(2, 0), (0, 1)])
        assert g.edges == frozenset({(0, 2), (0, 1)})


class TestComponents:
    def test_path_minus_cut_vertex(self):
        count, assignment = components_after_removal(P4, {1})
        assert count == 2
        assert assignment[0] != assignment[2]
        assert assignment[2] == assignment[3]

    def test_complete_graph_nothing_removed(self):
        count, _ = components_after_removal(K4, set())
        assert count == 1

    def test_k4_minus_edge_two_middle_vertices(self):
        count, assignment = components_after_removal(K4_MINUS, {1, 2})
        assert count == 2
        assert set(assignment) == {0, 3}

    def test_assignment_matches_reachability(self):
        for g in all_graphs(4):
            for mask in range(1 << 4):
                removed = {v for v in range(4) if mask >> v & 1}
                count, assignment = components_after_removal(g, removed)
                assert set(assignment) == set(range(4)) - removed
                assert count == len(set(assignment.values()))
                for u in assignment:
                    for v in assignment:
                        if g.has_edge(u, v):
                            assert assignment[u] == assignment[v]

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            components_after_removal(P4, {9})


class TestChordality:
    def test_c4_hole(self):
        cert = is_chordal(C4)
        assert isinstance(cert, HoleWitness)
        assert cert.cycle == (0, 1, 2, 3)

    def test_k4_minus_edge_order_valid(self):
        cert = is_chordal(K4_MINUS)
        assert isinstance(cert, PerfectEliminationOrder)
        assert elimination_order_violation(K4_MINUS, cert.order) is None

    def test_p4_is_chordal(self):
        assert isinstance(is_chordal(P4), PerfectEliminationOrder)

    def test_exactly_one_outcome_small_graphs(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                cert = is_chordal(g)
                expected = brute_chordal(g)
                if expected:
                    assert isinstance(cert, PerfectEliminationOrder)
                    assert elimination_order_violation(g, cert.order) is None
                else:
                    assert isinstance(cert, HoleWitness)
                    _check_hole(g, cert.cycle)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=1, max_value=7), st.integers(min_value=0))
    def test_dichotomy_random(self, n, bits):
        g = graph_from_mask(n, bits % (1 << (n * (n - 1) // 2)))
        cert = is_chordal(g)
        if isinstance(cert, PerfectEliminationOrder):
            assert sorted(cert.order) == list(range(n))
            assert elimination_order_violation(g, cert.order) is None
        else:
            _check_hole(g, cert.cycle)


def _check_hole(g: Graph, cycle):
    k = len(cycle)
    assert k >= 4
    assert len(set(cycle)) == k
    for i in range(k):
        assert g.has_edge(cycle[i], cycle[(i + 1) % k])
    for i in range(k):
        for j in range(i + 2, k):
            if (i, j) != (0, k - 1):
                assert not g.has_edge(cycle[i], cycle[j])


class TestMaximalCliques:
    def test_triangle(self):
        assert maximal_cliques(K3) == ((0, 1, 2),)

    def test_k4_minus_edge(self):
        assert maximal_cliques(K4_MINUS) == ((0, 1, 2), (1, 2, 3))

    def test_p4(self):
        assert maximal_cliques(P4) == ((0, 1), (1, 2), (2, 3))

    def test_rejects_non_chordal(self):
        with pytest.raises(NotChordalError) as err:
            maximal_cliques(C4)
        assert err.value.hole == (0, 1, 2, 3)

    def test_against_brute_force(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                if isinstance(is_chordal(g), HoleWitness):
                    continue
                got = maximal_cliques(g)
                assert got == brute_force_maximal_cliques(g)
                assert len(got) <= max(n, 1)


def test_is_connected():
    assert is_connected(P4)
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_dichotomy_seeded_n8():
    import random

    rng = random.Random(88)
    for _ in range(200):
        mask = rng.getrandbits(8 * 7 // 2)
        g = graph_from_mask(8, mask)
        cert = is_chordal(g)
        if isinstance(cert, PerfectEliminationOrder):
            assert elimination_order_violation(g, cert.order) is None
            assert brute_chordal(g)
        else:
            _check_hole(g, cert.cycle)
            assert not brute_chordal(g)
