"""Overspan graphs, their unions, and the matching/cover machinery.

Each base-tree edge e with endpoints r, s (as clique-tree nodes) gets an
overspan graph on the vertices outside the independent set: a loop at v
when F_v contains both r and s, and an edge uv when the two subtrees reach
opposite endpoints and uv is an edge of G.  Black base edges contribute two
identical copies, red edges one.

Unions of subfamilies satisfy matching number = vertex cover number: after
stripping loop-incident vertices the remainder maps homomorphically into a
tree, hence is bipartite, and Koenig's theorem applies.  The implementation
2-colours directly and treats failure as an upstream construction bug.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import CapExceededError, InputError, KonigError
from .graphs import Edge, Graph, _bits, ordered_edge
from .treerep import BaseTree, IndependentPathSystem, TreeRepresentation

DEFAULT_CAP = 20


@dataclass(frozen=True)
class OverspanItem:
    index: int
    tree_edge: Edge  # base-tree node pair
    copy_index: int  # 0 always; 1 for the duplicate carried by black edges
    graph: Graph  # loops allowed; never touches the independent set


@dataclass(frozen=True)
class OverspanFamily:
    items: tuple[OverspanItem, ...]
    ground_n: int
    excluded: frozenset[int]  # independent-set vertices, absent from every item

    def __len__(self) -> int:
        return len(self.items)

    def items_for_edge(self, edge: Edge) -> tuple[OverspanItem, ...]:
        return tuple(it for it in self.items if it.tree_edge == edge)


def overspan_graph_for_edge(
    g: Graph,
    rep: TreeRepresentation,
    ips: IndependentPathSystem,
    base: BaseTree,
    edge: Edge,
) -> Graph:
    """The single overspan graph assigned to one base-tree edge."""
    e = ordered_edge(*edge)
    if e not in base.tree.edges:
        raise InputError(f"{e} is not a base-tree edge")
    r0, s0 = base.subst_map[e[0]], base.subst_map[e[1]]
    excluded = set(ips.members)
    loops = set()
    edges = set()
    outside = [v for v in range(g.n) if v not in excluded]
    for v in outside:
        sub = rep.subtrees[v]
        if r0 in sub and s0 in sub:
            loops.add(v)
    for u, v in g.edges:
        if u in excluded or v in excluded:
            continue
        su, sv = rep.subtrees[u], rep.subtrees[v]
        if (r0 in su and s0 in sv) or (r0 in sv and s0 in su):
            edges.add((u, v))
    return Graph(g.n, frozenset(edges), frozenset(loops))


def build_overspan_family(
    g: Graph,
    rep: TreeRepresentation,
    ips: IndependentPathSystem,
    base: BaseTree,
) -> OverspanFamily:
    """One item per red edge, two identical items per black edge.

    Items are indexed edge by edge in sorted order, copies adjacent, so the
    family layout is deterministic.
    """
    items: list[OverspanItem] = []
    for e in sorted(base.tree.edges):
        graph = overspan_graph_for_edge(g, rep, ips, base, e)
        copies = 2 if base.colours[e] == "black" else 1
        for c in range(copies):
            items.append(OverspanItem(len(items), e, c, graph))
    return OverspanFamily(tuple(items), g.n, frozenset(ips.members))


@dataclass(frozen=True)
class UnionGraph:
    """Union of a subfamily's edge sets, each edge and loop included once.

    ``edge_sources`` and ``loop_sources`` point back at the item indices
    contributing each element.
    """

    graph: Graph
    picks: tuple[int, ...]
    edge_sources: dict[Edge, tuple[int, ...]]
    loop_sources: dict[int, tuple[int, ...]]


def union_subfamily(fam: OverspanFamily, picks) -> UnionGraph:
    chosen = tuple(sorted(set(picks)))
    for i in chosen:
        if not 0 <= i < len(fam.items):
            raise InputError(f"item index {i} out of range")
    edge_sources: dict[Edge, list[int]] = {}
    loop_sources: dict[int, list[int]] = {}
    for i in chosen:
        item = fam.items[i]
        for e in item.graph.edges:
            edge_sources.setdefault(e, []).append(i)
        for v in item.graph.loops:
            loop_sources.setdefault(v, []).append(i)
    graph = Graph(
        fam.ground_n,
        frozenset(edge_sources),
        frozenset(loop_sources),
    )
    return UnionGraph(
        graph,
        chosen,
        {e: tuple(srcs) for e, srcs in edge_sources.items()},
        {v: tuple(srcs) for v, srcs in loop_sources.items()},
    )


# ---------------------------------------------------------------------------
# Bipartite matching on the loop-stripped core


def _bipartition(g: Graph) -> tuple[int, int]:
    """2-colour a loop-free graph; lowest vertex of a component gets side 0.

    Raises ``KonigError`` on an odd cycle: unions of overspan graphs are
    guaranteed bipartite after loop stripping, so failure means the family
    was built incorrectly.
    """
    if g.loops:
        raise KonigError("bipartition expects a loop-free graph")
    colour: dict[int, int] = {}
    left = right = 0
    for start in range(g.n):
        if start in colour or not g.adj[start]:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in _bits(g.adj[v]):
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    raise KonigError(
                        "loop-stripped union graph is not bipartite; "
                        "the overspan construction is broken"
                    )
    for v, c in colour.items():
        if c == 0:
            left |= 1 << v
        else:
            right |= 1 << v
    return left, right


def _max_matching_bipartite(g: Graph, left_mask: int) -> dict[int, int]:
    """Augmenting-path maximum matching; returns partner map (both ways)."""
    match: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in _bits(g.adj[u]):
            if v in seen:
                continue
            seen.add(v)
            if v not in match or augment(match[v], seen):
                match[v] = u
                match[u] = v
                return True
        return False

    for u in _bits(left_mask):
        if u not in match:
            augment(u, set())
    return match


def matching_number_with_loops(g: Graph) -> int:
    """Maximum matching size, loops allowed, via the bipartite core.

    Vertices carrying a loop are stripped; a maximum matching of the core
    plus one loop per loop vertex is maximum overall.
    """
    core = Graph(
        g.n,
        frozenset(
            e for e in g.edges if e[0] not in g.loops and e[1] not in g.loops
        ),
    )
    left, _ = _bipartition(core)
    match = _max_matching_bipartite(core, left)
    return len(match) // 2 + len(g.loops)


def _constrained_cover_bound(g: Graph, chosen, banned) -> int | None:
    """Smallest cover size with ``chosen`` inside and ``banned`` outside.

    Loop vertices are forced; edges with a single permitted endpoint force
    that endpoint; what remains is bipartite and Koenig gives its exact
    cover number as a matching number.  Returns None when infeasible.
    """
    forced = set(chosen)
    banned = set(banned)
    if forced & banned:
        return None
    for v in g.loops:
        if v in banned:
            return None
        forced.add(v)
    pending = [e for e in g.edges]
    while True:
        changed = False
        remaining = []
        for u, v in pending:
            if u in forced or v in forced:
                continue
            u_ok, v_ok = u not in banned, v not in banned
            if not u_ok and not v_ok:
                return None
            if u_ok != v_ok:
                forced.add(u if u_ok else v)
                changed = True
            else:
                remaining.append((u, v))
        pending = remaining
        if not changed:
            break
    residual = Graph(g.n, frozenset(pending))
    left, _ = _bipartition(residual)
    match = _max_matching_bipartite(residual, left)
    return len(forced) + len(match) // 2


def lex_min_cover(g: Graph, target: int) -> tuple[int, ...]:
    """Lexicographically-first vertex cover of exactly ``target`` vertices.

    ``target`` must equal the cover number.  Greedy by ascending vertex with
    an exact feasibility check; the exchange argument makes the result the
    lexicographic minimum among all minimum covers.
    """
    bound = _constrained_cover_bound(g, (), ())
    if bound is None or bound > target:
        raise KonigError(f"no vertex cover of size {target} exists")
    chosen: set[int] = set()
    banned: set[int] = set()
    for v in range(g.n):
        if len(chosen) == target:
            banned.add(v)
            continue
        b = _constrained_cover_bound(g, chosen | {v}, banned)
        if b is not None and b <= target:
            chosen.add(v)
        else:
            banned.add(v)
    if len(chosen) != target or not _covers(g, chosen):
        raise KonigError("lexicographic cover search failed to land on the target size")
    return tuple(sorted(chosen))


def _covers(g: Graph, cover) -> bool:
    cset = set(cover)
    return all(u in cset or v in cset for u, v in g.edges) and all(
        v in cset for v in g.loops
    )


@dataclass(frozen=True)
class NuTauCertificate:
    """Matching number, cover number, and witnesses; the two numbers agree."""

    nu: int
    tau: int
    matching: tuple[Edge, ...]  # loops encoded as (v, v)
    cover: tuple[int, ...]


def nu_tau_konig(union: UnionGraph) -> NuTauCertificate:
    """Certified matching/cover numbers of a union graph.

    Strips loop-incident vertices, 2-colours the rest (must succeed), runs
    augmenting-path matching, re-adds the loops, and extracts the canonical
    minimum cover.
    """
    g = union.graph
    core = Graph(
        g.n,
        frozenset(e for e in g.edges if e[0] not in g.loops and e[1] not in g.loops),
    )
    left, _ = _bipartition(core)
    match = _max_matching_bipartite(core, left)
    matched_edges = sorted(
        ordered_edge(u, v) for u, v in match.items() if u < v
    )
    elements = tuple(sorted(matched_edges + [(v, v) for v in g.loops]))
    nu = len(elements)
    cover = lex_min_cover(g, nu)
    if not _covers(g, cover):
        raise KonigError("extracted cover fails to cover the union graph")
    return NuTauCertificate(nu, len(cover), elements, cover)


def find_violating_subfamily(
    fam: OverspanFamily,
    cap: int = DEFAULT_CAP,
    forbidden=frozenset(),
) -> tuple[int, ...] | None:
    """Smallest, then lexicographically first, subfamily B whose union
    (minus any forbidden vertices) has matching number at most 2|B| - 2.

    If none exists the family admits a system of disjoint representatives
    avoiding the forbidden vertices; this is the Hall-type threshold for
    rank-2 hypergraphs.  The empty subfamily never violates.  Enumeration
    is exponential, so families larger than ``cap`` are refused.
    """
    count = len(fam.items)
    if count > cap:
        raise CapExceededError(
            f"family has {count} items; refusing subset enumeration beyond cap {cap}"
        )
    forbidden = frozenset(forbidden)
    for size in range(1, count + 1):
        for combo in itertools.combinations(range(count), size):
            union = union_subfamily(fam, combo)
            g = union.graph.without_vertices(forbidden) if forbidden else union.graph
            if matching_number_with_loops(g) <= 2 * size - 2:
                return combo
    return None
