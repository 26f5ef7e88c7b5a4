"""Clique-tree representation, independent path system, and base tree.

The pipeline models a connected chordal graph G as a tree of maximal
cliques together with, for each vertex v, the subtree F_v of cliques
containing v.  From that representation it selects an independent set whose
subtrees are low-degree paths, colours tree edges red (inside such a path)
or black, and contracts away the unremarkable degree-2 nodes to obtain the
base tree on which the rest of the construction operates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import DisconnectedError, InputError, RepresentationError
from .graphs import Edge, Graph, is_connected, maximal_cliques, ordered_edge

RED = "red"
BLACK = "black"


@dataclass(frozen=True)
class Tree:
    """A tree over an explicit node id tuple (ids need not be contiguous)."""

    nodes: tuple[int, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        nodeset = set(self.nodes)
        if len(nodeset) != len(self.nodes):
            raise InputError("duplicate tree nodes")
        for u, v in self.edges:
            if u >= v or u not in nodeset or v not in nodeset:
                raise InputError(f"bad tree edge ({u}, {v})")
        if len(self.nodes) != len(self.edges) + 1 and self.nodes:
            raise InputError("a tree has exactly one more node than edges")
        if self.nodes and len(self._component_of(self.nodes[0], frozenset())) != len(
            self.nodes
        ):
            raise InputError("tree is not connected")

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.nodes}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in self.nodes if self.degree(v) <= 1)

    def _component_of(self, start: int, removed_edges: frozenset[Edge]) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if ordered_edge(v, w) in removed_edges or w in seen:
                    continue
                seen.add(w)
                queue.append(w)
        return seen

    def component_assignment(self, removed_edges) -> dict[int, int]:
        """Map each node to a component id of the tree minus the given edges."""
        removed = frozenset(ordered_edge(*e) for e in removed_edges)
        assignment: dict[int, int] = {}
        cid = 0
        for v in sorted(self.nodes):
            if v in assignment:
                continue
            for w in self._component_of(v, removed):
                assignment[w] = cid
            cid += 1
        return assignment

    def split_sides(self, edge: Edge) -> tuple[frozenset[int], frozenset[int]]:
        """Node sets of the two components of the tree minus one edge."""
        e = ordered_edge(*edge)
        if e not in self.edges:
            raise InputError(f"{e} is not a tree edge")
        side = self._component_of(e[0], frozenset([e]))
        return frozenset(side), frozenset(set(self.nodes) - side)

    def path_nodes(self, a: int, b: int) -> tuple[int, ...]:
        """The unique a..b path, as a node sequence."""
        parent = {a: None}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            if v == b:
                out = []
                while v is not None:
                    out.append(v)
                    v = parent[v]
                return tuple(reversed(out))
            for w in self.adjacency[v]:
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        raise InputError(f"nodes {a} and {b} are not both in the tree")

    def path_edges(self, a: int, b: int) -> tuple[Edge, ...]:
        nodes = self.path_nodes(a, b)
        return tuple(ordered_edge(x, y) for x, y in zip(nodes, nodes[1:]))

    def is_subtree_connected(self, subset) -> bool:
        subset = set(subset)
        if not subset:
            return False
        start = next(iter(sorted(subset)))
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w in subset and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen == subset


@dataclass(frozen=True)
class TreeRepresentation:
    """A clique tree: nodes index ``cliques``, and ``subtrees[v]`` is the set
    of nodes whose cliques contain v.  Adjacency in G is equivalent to
    subtree intersection, and every leaf node owns some vertex whose subtree
    is exactly that leaf."""

    t0: Tree
    cliques: tuple[tuple[int, ...], ...]
    subtrees: tuple[frozenset[int], ...]
    leaf_owners: dict[int, int]


@dataclass(frozen=True)
class IndependentPathSystem:
    """The chosen independent set and its path subtrees.

    Every member's subtree is a path all of whose nodes have degree at most
    2 in the clique tree, properly contains no other vertex's subtree, and
    the set is maximal for those properties under independence.
    """

    members: tuple[int, ...]
    paths: dict[int, frozenset[int]]

    def is_trivial(self, v: int) -> bool:
        return len(self.paths[v]) == 1


@dataclass(frozen=True)
class BaseTree:
    """The clique tree with non-essential degree-2 nodes suppressed.

    ``tree`` lives on fresh contiguous ids; ``subst_map[i]`` is the clique
    tree node behind base node i (the substantial nodes: path endpoints and
    degree >= 3 nodes).  ``colours`` maps each base edge to red or black and
    ``red_source`` maps each red edge to the independent-set vertex whose
    path produced it.
    """

    tree: Tree
    colours: dict[Edge, str]
    subst_map: tuple[int, ...]
    red_source: dict[Edge, int]

    def node_of(self, t0_node: int) -> int:
        return self.subst_map.index(t0_node)

    def red_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(e for e, c in self.colours.items() if c == RED))

    def black_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(e for e, c in self.colours.items() if c == BLACK))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def build_tree_representation(g: Graph) -> TreeRepresentation:
    """Build a clique tree for a connected chordal graph.

    Nodes are the maximal cliques; the tree is a maximum-weight spanning
    tree of the clique graph weighted by intersection size, with ties broken
    lexicographically so the result is deterministic.  All structural
    invariants are re-verified before returning.
    """
    if g.n == 0:
        raise InputError("cannot represent the empty graph")
    if g.loops:
        raise InputError("input graphs must be loop-free")
    if not is_connected(g):
        raise DisconnectedError("tree representation requires a connected graph")
    cliques = maximal_cliques(g)
    k = len(cliques)
    csets = [set(c) for c in cliques]
    weighted = []
    for i in range(k):
        for j in range(i + 1, k):
            w = len(csets[i] & csets[j])
            if w > 0:
                weighted.append((-w, i, j))
    weighted.sort()
    uf = _UnionFind(k)
    edges = set()
    for _, i, j in weighted:
        if uf.union(i, j):
            edges.add((i, j))
    if len(edges) != k - 1:
        raise DisconnectedError("clique graph is disconnected; input graph was not connected")
    t0 = Tree(tuple(range(k)), frozenset(edges))
    subtrees = tuple(
        frozenset(i for i in range(k) if v in csets[i]) for v in range(g.n)
    )
    _verify_representation(g, t0, subtrees)
    leaf_owners = {}
    for leaf in t0.leaves():
        owners = [v for v in range(g.n) if subtrees[v] == frozenset([leaf])]
        if not owners:
            raise RepresentationError(
                f"leaf {leaf} of the clique tree has no vertex whose subtree is that leaf"
            )
        leaf_owners[leaf] = min(owners)
    return TreeRepresentation(t0, cliques, subtrees, leaf_owners)


def _verify_representation(g: Graph, t0: Tree, subtrees) -> None:
    for v in range(g.n):
        if not subtrees[v]:
            raise RepresentationError(f"vertex {v} appears in no maximal clique")
        if not t0.is_subtree_connected(subtrees[v]):
            raise RepresentationError(f"subtree of vertex {v} is not connected")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            intersects = bool(subtrees[u] & subtrees[v])
            if intersects != g.has_edge(u, v):
                raise RepresentationError(
                    f"intersection property fails for vertices {u} and {v}"
                )


def path_candidates(rep: TreeRepresentation, g: Graph) -> tuple[int, ...]:
    """Vertices whose subtree is a path of degree <= 2 nodes and properly
    contains no other vertex's subtree."""
    t0 = rep.t0
    out = []
    for v in range(g.n):
        sub = rep.subtrees[v]
        if any(t0.degree(x) > 2 for x in sub):
            continue
        if any(u != v and rep.subtrees[u] < sub for u in range(g.n)):
            continue
        out.append(v)
    return tuple(out)


def select_independent_set(rep: TreeRepresentation, g: Graph) -> IndependentPathSystem:
    """Greedy deterministic selection of the independent path system.

    Candidates (path-shaped, member-minimal subtrees) are taken in order of
    subtree size then vertex index, subject to independence.  Maximality is
    asserted afterwards, both against the candidates and against every
    path-shaped vertex; a failure here is surfaced, not repaired.
    """
    t0 = rep.t0
    candidates = path_candidates(rep, g)
    chosen: list[int] = []
    for v in sorted(candidates, key=lambda v: (len(rep.subtrees[v]), v)):
        if all(not g.has_edge(v, w) for w in chosen):
            chosen.append(v)
    members = tuple(sorted(chosen))
    for v in candidates:
        if v not in members and all(not g.has_edge(v, w) for w in members):
            raise RepresentationError(
                f"candidate {v} is independent of the chosen set; selection is not maximal"
            )
    for v in range(g.n):
        if v in members or any(t0.degree(x) > 2 for x in rep.subtrees[v]):
            continue
        if all(not g.has_edge(v, w) for w in members):
            raise RepresentationError(
                f"path-shaped vertex {v} is independent of the chosen set"
            )
    paths = {v: rep.subtrees[v] for v in members}
    return IndependentPathSystem(members, paths)


def _path_endpoints(t0: Tree, path: frozenset[int]) -> tuple[int, ...]:
    if len(path) == 1:
        return tuple(path)
    ends = [
        x for x in path if sum(1 for w in t0.adjacency[x] if w in path) == 1
    ]
    if len(ends) != 2:
        raise RepresentationError(f"subtree {sorted(path)} is not a path")
    return tuple(sorted(ends))


def build_base_tree(rep: TreeRepresentation, ips: IndependentPathSystem) -> BaseTree:
    """Suppress every degree-2 clique-tree node that is not a path endpoint.

    Suppression replaces a node of degree 2 by an edge between its two
    neighbours; colours merge (the two incident edges always agree).  The
    outcome is independent of suppression order; ascending node order is
    used.  Red base edges correspond one-to-one to the nontrivial paths.
    """
    t0 = rep.t0
    red_edges: dict[Edge, int] = {}
    endpoints: set[int] = set()
    for v in ips.members:
        path = ips.paths[v]
        ends = _path_endpoints(t0, path)
        endpoints.update(ends)
        ordered = sorted(path)
        for x in ordered:
            for w in t0.adjacency[x]:
                if w in path:
                    e = ordered_edge(x, w)
                    if e in red_edges and red_edges[e] != v:
                        raise RepresentationError(
                            f"edge {e} lies on two distinct member paths"
                        )
                    red_edges[e] = v
    substantial = set(endpoints) | {v for v in t0.nodes if t0.degree(v) >= 3}
    for leaf in t0.leaves():
        if leaf not in substantial:
            raise RepresentationError(
                f"leaf {leaf} is not substantial; the leaf-ownership property failed upstream"
            )
    # Mutable working copies for the suppression loop.
    edge_data: dict[Edge, tuple[str, int | None]] = {}
    for e in t0.edges:
        if e in red_edges:
            edge_data[e] = (RED, red_edges[e])
        else:
            edge_data[e] = (BLACK, None)
    adj: dict[int, set[int]] = {v: set(t0.adjacency[v]) for v in t0.nodes}
    removable = sorted(
        v for v in t0.nodes if v not in substantial and t0.degree(v) == 2
    )
    for c in removable:
        a, b = sorted(adj[c])
        ca, cb = ordered_edge(c, a), ordered_edge(c, b)
        (col_a, own_a) = edge_data.pop(ca)
        (col_b, own_b) = edge_data.pop(cb)
        if col_a != col_b or own_a != own_b:
            raise RepresentationError(
                f"suppressing node {c} would merge edges of different colour"
            )
        adj[a].discard(c)
        adj[b].discard(c)
        adj[a].add(b)
        adj[b].add(a)
        del adj[c]
        edge_data[ordered_edge(a, b)] = (col_a, own_a)
    if set(adj) != substantial:
        raise RepresentationError("suppression did not leave exactly the substantial nodes")
    subst_map = tuple(sorted(substantial))
    index = {t0_node: i for i, t0_node in enumerate(subst_map)}
    new_edges = frozenset(ordered_edge(index[u], index[v]) for u, v in edge_data)
    tree = Tree(tuple(range(len(subst_map))), new_edges)
    colours: dict[Edge, str] = {}
    red_source: dict[Edge, int] = {}
    for (u, v), (colour, owner) in edge_data.items():
        e = ordered_edge(index[u], index[v])
        colours[e] = colour
        if colour == RED:
            red_source[e] = owner
    base = BaseTree(tree, colours, subst_map, red_source)
    _verify_base_tree(rep, ips, base)
    return base


def _verify_base_tree(rep, ips, base: BaseTree) -> None:
    tree = base.tree
    touched: set[int] = set()
    for u, v in base.red_edges():
        if tree.degree(u) != 2 or tree.degree(v) != 2:
            raise RepresentationError(f"red edge ({u}, {v}) has an endpoint of degree != 2")
        if u in touched or v in touched:
            raise RepresentationError("red edges do not form a matching")
        touched.update((u, v))
    nontrivial = {v for v in ips.members if not ips.is_trivial(v)}
    sources = set(base.red_source.values())
    if sources != nontrivial or len(base.red_source) != len(nontrivial):
        raise RepresentationError(
            "red edges do not correspond one-to-one to nontrivial member paths"
        )
    # Every subtree must reach a substantial node, or later stages collapse.
    substantial = set(base.subst_map)
    for v, sub in enumerate(rep.subtrees):
        if not sub & substantial:
            raise RepresentationError(f"subtree of vertex {v} misses every substantial node")


def substantial_nodes_of(rep: TreeRepresentation, base: BaseTree, vertex: int) -> tuple[int, ...]:
    """Base-tree node ids of the substantial clique-tree nodes in F_vertex."""
    index = {t0_node: i for i, t0_node in enumerate(base.subst_map)}
    return tuple(sorted(index[x] for x in rep.subtrees[vertex] if x in index))
