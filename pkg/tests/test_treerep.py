import pytest

from chordalham import (
    DisconnectedError,
    Graph,
    NotChordalError,
    build_base_tree,
    build_tree_representation,
    select_independent_set,
)
from chordalham.treerep import BLACK, substantial_nodes_of

from corpus import C4, K3, K4_MINUS, P4, seeded_chordal_graphs


class TestCliqueTree:
    def test_triangle_single_node(self):
        rep = build_tree_representation(K3)
        assert rep.cliques == ((0, 1, 2),)
        assert rep.t0.edges == frozenset()
        assert all(sub == frozenset({0}) for sub in rep.subtrees)
        assert rep.leaf_owners == {0: 0}

    def test_k4_minus_edge(self):
        rep = build_tree_representation(K4_MINUS)
        assert rep.cliques == ((0, 1, 2), (1, 2, 3))
        assert rep.t0.edges == frozenset({(0, 1)})
        assert rep.subtrees[0] == frozenset({0})
        assert rep.subtrees[1] == frozenset({0, 1})
        assert rep.subtrees[2] == frozenset({0, 1})
        assert rep.subtrees[3] == frozenset({1})

    def test_p4_path_of_cliques(self):
        rep = build_tree_representation(P4)
        assert rep.cliques == ((0, 1), (1, 2), (2, 3))
        assert rep.t0.edges == frozenset({(0, 1), (1, 2)})

    def test_rejects_non_chordal(self):
        with pytest.raises(NotChordalError):
            build_tree_representation(C4)

    def test_rejects_disconnected(self):
        with pytest.raises(DisconnectedError):
            build_tree_representation(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_invariants_on_corpus(self):
        for g in seeded_chordal_graphs(40, max_n=10, seed=3):
            rep = build_tree_representation(g)
            # intersection property, both directions
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    assert bool(rep.subtrees[u] & rep.subtrees[v]) == g.has_edge(u, v)
            # connectivity of every subtree
            for v in range(g.n):
                assert rep.t0.is_subtree_connected(rep.subtrees[v])
            # leaf ownership
            for leaf in rep.t0.leaves():
                owner = rep.leaf_owners[leaf]
                assert rep.subtrees[owner] == frozenset({leaf})


class TestIndependentSelection:
    def test_k4_minus_edge(self):
        rep = build_tree_representation(K4_MINUS)
        ips = select_independent_set(rep, K4_MINUS)
        assert ips.members == (0, 3)
        assert ips.paths[0] == frozenset({0})
        assert ips.paths[3] == frozenset({1})
        assert ips.is_trivial(0) and ips.is_trivial(3)

    def test_p4(self):
        rep = build_tree_representation(P4)
        ips = select_independent_set(rep, P4)
        assert ips.members == (0, 3)

    def test_triangle_lowest_vertex(self):
        rep = build_tree_representation(K3)
        ips = select_independent_set(rep, K3)
        assert ips.members == (0,)

    def test_invariants_on_corpus(self):
        for g in seeded_chordal_graphs(40, max_n=10, seed=11):
            rep = build_tree_representation(g)
            ips = select_independent_set(rep, g)
            for u in ips.members:
                for v in ips.members:
                    if u != v:
                        assert not g.has_edge(u, v)
                path = ips.paths[u]
                assert all(rep.t0.degree(x) <= 2 for x in path)
                for w in range(g.n):
                    assert not (w != u and rep.subtrees[w] < path)


class TestBaseTree:
    def test_k4_minus_edge_black_edge(self):
        rep = build_tree_representation(K4_MINUS)
        ips = select_independent_set(rep, K4_MINUS)
        base = build_base_tree(rep, ips)
        assert base.subst_map == (0, 1)
        assert base.tree.edges == frozenset({(0, 1)})
        assert base.colours[(0, 1)] == BLACK
        assert base.red_source == {}

    def test_p4_suppression(self):
        rep = build_tree_representation(P4)
        ips = select_independent_set(rep, P4)
        base = build_base_tree(rep, ips)
        # clique node 1 has degree 2 and owns no path endpoint: suppressed
        assert base.subst_map == (0, 2)
        assert base.tree.edges == frozenset({(0, 1)})
        assert base.colours[(0, 1)] == BLACK

    def test_triangle_single_node(self):
        rep = build_tree_representation(K3)
        ips = select_independent_set(rep, K3)
        base = build_base_tree(rep, ips)
        assert base.tree.edges == frozenset()
        assert base.subst_map == (0,)

    def test_invariants_on_corpus(self):
        for g in seeded_chordal_graphs(60, max_n=11, seed=17):
            rep = build_tree_representation(g)
            ips = select_independent_set(rep, g)
            base = build_base_tree(rep, ips)
            tree = base.tree
            # substantial set is exactly path endpoints plus high-degree nodes
            expected = {x for x in rep.t0.nodes if rep.t0.degree(x) >= 3}
            for v in ips.members:
                path = ips.paths[v]
                if len(path) == 1:
                    expected |= path
                else:
                    expected |= {
                        x
                        for x in path
                        if sum(1 for w in rep.t0.adjacency[x] if w in path) == 1
                    }
            assert set(base.subst_map) == expected
            # red edges form a matching with degree-2 endpoints
            seen = set()
            for u, v in base.red_edges():
                assert tree.degree(u) == 2 and tree.degree(v) == 2
                assert u not in seen and v not in seen
                seen.update((u, v))
            # red edges in bijection with nontrivial paths
            nontrivial = {v for v in ips.members if not ips.is_trivial(v)}
            assert set(base.red_source.values()) == nontrivial
            assert len(base.red_source) == len(nontrivial)
            # every subtree reaches a substantial node
            for v in range(g.n):
                assert substantial_nodes_of(rep, base, v)
            # order independence: edges of the base tree match the direct
            # contraction of suppressed chains between substantial nodes
            assert _contracted_edges(rep, base) == {
                tuple(sorted((base.subst_map[u], base.subst_map[v])))
                for u, v in tree.edges
            }


def _contracted_edges(rep, base):
    """Order-free derivation of the suppressed tree: walk from every
    substantial node through non-substantial degree-2 chains."""
    substantial = set(base.subst_map)
    edges = set()
    for s in substantial:
        for start in rep.t0.adjacency[s]:
            prev, cur = s, start
            while cur not in substantial:
                nxt = [w for w in rep.t0.adjacency[cur] if w != prev]
                assert len(nxt) == 1
                prev, cur = cur, nxt[0]
            edges.add(tuple(sorted((s, cur))))
    return edges
