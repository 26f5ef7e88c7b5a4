import itertools
from fractions import Fraction

import pytest

from chordalham import (
    DisconnectedError,
    Graph,
    ParameterError,
    components_after_removal,
    toughness,
)

from corpus import K3, K4, K4_MINUS, P4, all_graphs


def brute_force_toughness(g: Graph):
    """Independent enumeration: combinations by size with union-find components."""
    if g.is_complete():
        return None
    best = None
    for size in range(0, g.n):
        for combo in itertools.combinations(range(g.n), size):
            parent = {v: v for v in range(g.n) if v not in combo}

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for u, v in g.edges:
                if u in parent and v in parent:
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[rv] = ru
            roots = {find(v) for v in parent}
            if len(roots) >= 2:
                ratio = Fraction(size, len(roots))
                if best is None or ratio < best:
                    best = ratio
    return best


class TestToughness:
    def test_complete_is_infinite(self):
        t = toughness(K4)
        assert t.infinite and t.value is None and t.witness is None

    def test_p4_is_one_half(self):
        t = toughness(P4)
        assert t.value == Fraction(1, 2)
        count, _ = components_after_removal(P4, t.witness)
        assert Fraction(len(t.witness), count) == t.value

    def test_k4_minus_edge_is_one(self):
        t = toughness(K4_MINUS)
        assert t.value == Fraction(1, 1)
        assert t.witness == (1, 2)

    def test_triangle_infinite(self):
        assert toughness(K3).infinite

    def test_rejects_disconnected(self):
        with pytest.raises(DisconnectedError):
            toughness(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_rejects_oversized(self):
        big = Graph.from_edges(19, [(i, i + 1) for i in range(18)])
        with pytest.raises(ParameterError):
            toughness(big)

    def test_matches_brute_force_small(self):
        for n in range(2, 6):
            for g in all_graphs(n):
                count, _ = components_after_removal(g, set())
                if count != 1:
                    continue
                expected = brute_force_toughness(g)
                t = toughness(g)
                if expected is None:
                    assert t.infinite
                else:
                    assert t.value == expected
                    wcount, _ = components_after_removal(g, t.witness)
                    assert wcount >= 2
                    assert Fraction(len(t.witness), wcount) == expected
