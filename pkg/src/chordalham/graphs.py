"""Finite simple undirected graphs with optional loops, plus chordality.

Vertices are the integers ``0..n-1``.  Ordinary input graphs never carry
loops; the auxiliary graphs built further down the pipeline do, so the loop
set is part of the core type (a loop is an edge of a special kind that lives
in its own field, never in ``edges``).

Everything here is a pure function of immutable values, so results are
deterministic and safe to share between threads.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, InvariantError, NotChordalError

Edge = tuple[int, int]


def ordered_edge(u: int, v: int) -> Edge:
    """Return the endpoints as an ordered pair ``(min, max)``."""
    return (u, v) if u <= v else (v, u)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with a loop set.

    Invariants enforced at construction: every edge is an ordered pair of
    distinct in-range vertices, there are no duplicates (guaranteed by the
    frozenset), and loops are in range.
    """

    n: int
    edges: frozenset[Edge]
    loops: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(
                    f"edge ({u}, {v}) is not an ordered pair of distinct "
                    f"vertices in range 0..{self.n - 1}"
                )
        for v in self.loops:
            if not 0 <= v < self.n:
                raise InputError(f"loop vertex {v} out of range 0..{self.n - 1}")

    @staticmethod
    def from_edges(n: int, pairs, loops=()) -> "Graph":
        """Build a graph from an iterable of endpoint pairs (any order)."""
        es = set()
        for u, v in pairs:
            if u == v:
                raise InputError(f"self-loop at {u}; loops belong in the loop set")
            es.add(ordered_edge(u, v))
        return Graph(n, frozenset(es), frozenset(loops))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmasks: bit ``w`` of ``adj[v]`` is set iff ``vw`` is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def without_vertices(self, removed) -> "Graph":
        """Drop the given vertices' incident edges and loops; keep indices."""
        gone = frozenset(removed)
        for v in gone:
            if not 0 <= v < self.n:
                raise InputError(f"vertex {v} out of range 0..{self.n - 1}")
        return Graph(
            self.n,
            frozenset(e for e in self.edges if e[0] not in gone and e[1] not in gone),
            frozenset(v for v in self.loops if v not in gone),
        )

    def elements(self) -> list[Edge]:
        """Edges and loops in one canonical sorted list; a loop at v is (v, v)."""
        return sorted(itertools.chain(self.edges, ((v, v) for v in self.loops)))


def components_after_removal(g: Graph, removed) -> tuple[int, dict[int, int]]:
    """Count and label the components of ``g`` minus a vertex set.

    Returns ``(count, assignment)`` where assignment maps every surviving
    vertex to a component id; ids are assigned in order of each component's
    smallest vertex.  Loops are irrelevant to connectivity and ignored.
    """
    gone = frozenset(removed)
    for v in gone:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range 0..{g.n - 1}")
    gone_mask = 0
    for v in gone:
        gone_mask |= 1 << v
    assignment: dict[int, int] = {}
    cid = 0
    for start in range(g.n):
        if start in assignment or gone_mask >> start & 1:
            continue
        queue = deque([start])
        assignment[start] = cid
        while queue:
            v = queue.popleft()
            for w in _bits(g.adj[v] & ~gone_mask):
                if w not in assignment:
                    assignment[w] = cid
                    queue.append(w)
        cid += 1
    return cid, assignment


def is_connected(g: Graph) -> bool:
    count, _ = components_after_removal(g, ())
    return count <= 1


# ---------------------------------------------------------------------------
# Chordality


@dataclass(frozen=True)
class PerfectEliminationOrder:
    """A vertex order in which every vertex's later neighbours form a clique."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class HoleWitness:
    """An induced chordless cycle of length at least four, in canonical form."""

    cycle: tuple[int, ...]


def lexbfs_order(g: Graph) -> tuple[int, ...]:
    """Lexicographic BFS visit order; ties broken by lowest vertex index."""
    labels: list[tuple[int, ...]] = [() for _ in range(g.n)]
    visited = [False] * g.n
    order = []
    for step in range(g.n):
        best = -1
        for v in range(g.n):
            if visited[v]:
                continue
            if best < 0 or labels[v] > labels[best]:
                best = v
        visited[best] = True
        order.append(best)
        stamp = g.n - step
        for w in g.neighbors(best):
            if not visited[w]:
                labels[w] = labels[w] + (stamp,)
    return tuple(order)


def elimination_order_violation(g: Graph, order) -> tuple[int, int, int] | None:
    """First position where later neighbours fail to be a clique, or None.

    Returns ``(v, x, y)`` with x, y later neighbours of v that are not
    adjacent, scanning positions in order.
    """
    position = {v: i for i, v in enumerate(order)}
    after = [0] * g.n
    mask = 0
    for v in reversed(order):
        after[v] = mask
        mask |= 1 << v
    for v in order:
        later = g.adj[v] & after[v]
        for x in _bits(later):
            missing = later & ~g.adj[x] & ~(1 << x)
            if missing:
                y = min(_bits(missing), key=lambda w: position[w])
                return (v, x, y)
    return None


def find_hole(g: Graph) -> tuple[int, ...] | None:
    """Search for an induced chordless cycle of length >= 4.

    For every path x-b-c with xc not an edge, a shortest x..c path in the
    graph minus the rest of b's closed neighbourhood closes a chordless
    cycle through b.  Returns the first hit in canonical form, or None when
    the graph is chordal.
    """
    for b in range(g.n):
        nbhd = g.neighbors(b)
        for a in nbhd:
            for c in nbhd:
                if c == a or g.has_edge(a, c):
                    continue
                blocked = (g.adj[b] | 1 << b) & ~(1 << a) & ~(1 << c)
                path = _shortest_path_avoiding(g, c, a, blocked)
                if path is not None:
                    return _canonical_cycle((b, *path))
    return None


def _shortest_path_avoiding(g: Graph, src: int, dst: int, blocked: int):
    if blocked >> src & 1 or blocked >> dst & 1:
        return None
    parent = {src: -1}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            while v != -1:
                path.append(v)
                v = parent[v]
            return tuple(reversed(path))
        for w in _bits(g.adj[v] & ~blocked):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest tuple over all rotations and reflections."""
    k = len(cycle)
    best = None
    for seq in (cycle, tuple(reversed(cycle))):
        for i in range(k):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    return best


def is_chordal(g: Graph) -> PerfectEliminationOrder | HoleWitness:
    """Decide chordality constructively.

    Returns a verified perfect elimination order, or a hole.  Exactly one of
    the two outcomes occurs for every graph.
    """
    order = tuple(reversed(lexbfs_order(g)))
    if elimination_order_violation(g, order) is None:
        return PerfectEliminationOrder(order)
    hole = find_hole(g)
    if hole is None:
        raise InvariantError(
            "lexicographic BFS order failed verification but no hole was found"
        )
    return HoleWitness(hole)


def maximal_cliques(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All inclusion-maximal cliques of a chordal graph, canonically sorted.

    Candidates are the closed later-neighbourhoods along a perfect
    elimination order; a chordal graph has at most n maximal cliques.
    """
    cert = is_chordal(g)
    if isinstance(cert, HoleWitness):
        raise NotChordalError(
            f"graph has an induced chordless cycle {cert.cycle}", hole=cert.cycle
        )
    order = cert.order
    after = [0] * g.n
    mask = 0
    for v in reversed(order):
        after[v] = mask
        mask |= 1 << v
    candidates = {frozenset([v, *_bits(g.adj[v] & after[v])]) for v in order}
    kept: list[frozenset[int]] = []
    for cand in sorted(candidates, key=lambda c: (-len(c), sorted(c))):
        if not any(cand < other for other in kept):
            kept.append(cand)
    result = tuple(sorted(tuple(sorted(c)) for c in kept))
    if len(result) > max(g.n, 1):
        raise InvariantError("more maximal cliques than vertices in a chordal graph")
    return result
