"""Shared seeded corpora and small-instance enumerators for the test suite."""

from __future__ import annotations

import heapq
import itertools
import random

from chordalham import Graph
from chordalham.generators import GeneratorSpec, generate_chordal
from chordalham.treerep import Tree

FAMILIES = ("ktree", "interval", "split")


def seeded_chordal_graphs(count, max_n, seed=0, min_n=3, max_k=3):
    """Deterministic stream of connected chordal graphs across all families."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        family = FAMILIES[i % 3]
        n = rng.randint(min_n, max_n)
        k = rng.randint(1, max_k)
        out.append(generate_chordal(GeneratorSpec(family, n, k, seed=seed * 100003 + i)))
    return out


def seeded_chordal_with_family_cap(count, max_n, item_cap, seed=0):
    """Chordal graphs whose overspan family has at most ``item_cap`` items."""
    from chordalham.hamilton import build_structures

    rng = random.Random(seed)
    out = []
    attempt = 0
    while len(out) < count:
        attempt += 1
        family = FAMILIES[attempt % 3]
        n = rng.randint(3, max_n)
        k = rng.randint(1, 2)
        g = generate_chordal(
            GeneratorSpec(family, n, k, seed=seed * 91815541 + attempt)
        )
        s = build_structures(g)
        if len(s.family.items) <= item_cap:
            out.append((g, s))
    return out


def all_graphs(n):
    """Every labelled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def graph_from_mask(n, mask):
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_loop_graph(n, rng):
    pairs = list(itertools.combinations(range(n), 2))
    edges = [e for e in pairs if rng.random() < 0.4]
    loops = [v for v in range(n) if rng.random() < 0.25]
    return Graph.from_edges(n, edges, loops)


def random_tree(n, rng):
    """Uniform random labelled tree via a Pruefer sequence."""
    if n == 1:
        return Tree((0,), frozenset())
    if n == 2:
        return Tree((0, 1), frozenset({(0, 1)}))
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in prufer:
        degree[x] += 1
    edges = set()
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in prufer:
        leaf = heapq.heappop(leaves)
        edges.add((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = sorted(leaves)
    edges.add((u, v))
    return Tree(tuple(range(n)), frozenset(edges))


# Named fixtures used throughout: K4 minus the edge {0, 3}, the 4-vertex
# path, the triangle, and K4.
K4_MINUS = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
K3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
K4 = Graph.from_edges(4, itertools.combinations(range(4), 2))
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
