"""Seeded generators for connected chordal graphs.

Three families: k-trees (iterated simplicial vertex addition), interval
graphs (random intervals with a sweep that closes connectivity gaps), and
split graphs (a clique plus an independent set, every outside vertex wired
to at least one clique vertex).  Identical spec and seed give an identical
graph, bit for bit; all randomness flows through one ``random.Random``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import ConstructionError, ParameterError
from .graphs import Graph, HoleWitness, is_chordal, is_connected

FAMILIES = ("ktree", "interval", "split")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int
    k: int = 2  # tree width parameter; only the ktree family reads it
    seed: int = 0


def generate_chordal(spec: GeneratorSpec) -> Graph:
    """Generate a connected chordal graph; output is re-verified."""
    if spec.family not in FAMILIES:
        raise ParameterError(f"unknown family {spec.family!r}; choose from {FAMILIES}")
    if spec.n < 1:
        raise ParameterError(f"need n >= 1, got {spec.n}")
    if not 0 <= spec.seed < 2**64:
        raise ParameterError("seed must be an unsigned 64-bit integer")
    rng = random.Random(spec.seed)
    if spec.family == "ktree":
        if spec.k < 1:
            raise ParameterError(f"ktree needs k >= 1, got {spec.k}")
        g = _ktree(spec.n, spec.k, rng)
    elif spec.family == "interval":
        g = _interval(spec.n, rng)
    else:
        g = _split(spec.n, rng)
    if isinstance(is_chordal(g), HoleWitness) or not is_connected(g):
        raise ConstructionError("generator produced a non-chordal or disconnected graph")
    return g


def _ktree(n: int, k: int, rng: random.Random) -> Graph:
    base = min(n, k + 1)
    edges = set(itertools.combinations(range(base), 2))
    cliques: list[tuple[int, ...]] = [
        c for c in itertools.combinations(range(base), min(k, base))
    ]
    for v in range(base, n):
        attach = cliques[rng.randrange(len(cliques))]
        for w in attach:
            edges.add((w, v))
        for drop in attach:
            cliques.append(tuple(sorted(set(attach) - {drop} | {v})))
        if len(attach) < k:
            cliques.append(tuple(sorted(set(attach) | {v})))
    return Graph.from_edges(n, edges)


def _interval(n: int, rng: random.Random) -> Graph:
    span = 4 * n
    intervals = []
    for _ in range(n):
        a = rng.randrange(span)
        b = rng.randrange(span)
        intervals.append([min(a, b), max(a, b)])
    # Sweep left to right; when a gap appears, stretch the interval that
    # currently reaches farthest right so the union stays connected.
    order = sorted(range(n), key=lambda i: (intervals[i][0], intervals[i][1], i))
    reach_v = order[0]
    for i in order[1:]:
        if intervals[i][0] > intervals[reach_v][1]:
            intervals[reach_v][1] = intervals[i][0]
        if intervals[i][1] >= intervals[reach_v][1]:
            reach_v = i
    edges = {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if intervals[u][0] <= intervals[v][1] and intervals[v][0] <= intervals[u][1]
    }
    return Graph.from_edges(n, edges)


def _split(n: int, rng: random.Random) -> Graph:
    clique_size = rng.randint(1, n)
    edges = set(itertools.combinations(range(clique_size), 2))
    for v in range(clique_size, n):
        attached = [w for w in range(clique_size) if rng.random() < 0.5]
        if not attached:
            attached = [rng.randrange(clique_size)]
        for w in attached:
            edges.add((w, v))
    return Graph.from_edges(n, edges)
