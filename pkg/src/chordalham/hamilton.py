"""Hamilton cycle construction, the dichotomy pipeline, and the path variant.

The cycle construction walks an Euler tour of the symmetric orientation of
the base tree.  Every directed tour edge carries an ordered pair of vertex
subtrees (derived from the representative system, or from a nontrivial
member path for the return direction of a red edge); consecutive pairs share
a tree node, so the induced vertex sequence has adjacent consecutive
vertices.  Subtrees not touched by the pairs are spliced in after a tour
edge entering one of their substantial nodes, and the doubled subtrees from
loops and member paths are collapsed, leaving each vertex exactly once.

``run_pipeline`` ties everything together: it either emits a verified
Hamilton cycle or hands a violating subfamily to the witness extractor,
never an indeterminate answer.

The u-v path variant replaces the closed tour by a spanning trail between
anchor nodes of F_u and F_v (doubling every off-trail-path edge of the base
tree) and forbids u and v to the representative search.  It is one-sided:
a witness outcome does not certify that no Hamilton u-v path exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConstructionError,
    DisconnectedError,
    InputError,
    PathDiagnostic,
    TooSmallError,
)
from .graphs import Edge, Graph, is_connected, ordered_edge
from .overspan import (
    DEFAULT_CAP,
    OverspanFamily,
    build_overspan_family,
    find_violating_subfamily,
)
from .sdr import Sdr, find_sdr
from .treerep import (
    BaseTree,
    IndependentPathSystem,
    Tree,
    TreeRepresentation,
    build_base_tree,
    build_tree_representation,
    select_independent_set,
    substantial_nodes_of,
)
from .witness import WitnessSeparator, extract_separator


@dataclass(frozen=True)
class PipelineStructures:
    """Everything derived from the input graph, bundled for reuse."""

    graph: Graph
    representation: TreeRepresentation
    independent_paths: IndependentPathSystem
    base: BaseTree
    family: OverspanFamily


@dataclass(frozen=True)
class TourAssociation:
    """Euler tour of the base tree plus the ordered vertex pair carried by
    each directed tour edge.  No vertex appears in two pairs."""

    tour: tuple[tuple[int, int], ...]
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PipelineResult:
    cycle: tuple[int, ...] | None
    witness: WitnessSeparator | None

    @property
    def outcome(self) -> str:
        return "cycle" if self.cycle is not None else "witness"


@dataclass(frozen=True)
class PathResult:
    path: tuple[int, ...] | None
    witness: WitnessSeparator | None

    @property
    def outcome(self) -> str:
        return "path" if self.path is not None else "witness"


def build_structures(g: Graph) -> PipelineStructures:
    """Representation, path system, base tree, and overspan family for g."""
    rep = build_tree_representation(g)
    ips = select_independent_set(rep, g)
    base = build_base_tree(rep, ips)
    fam = build_overspan_family(g, rep, ips, base)
    return PipelineStructures(g, rep, ips, base, fam)


def euler_tour(tree: Tree) -> tuple[tuple[int, int], ...]:
    """Closed Euler tour of the symmetric orientation, rooted at the lowest
    node, children in ascending order."""
    if not tree.edges:
        return ()
    root = min(tree.nodes)
    tour: list[tuple[int, int]] = []

    def walk(node: int, parent: int) -> None:
        for child in tree.adjacency[node]:
            if child == parent:
                continue
            tour.append((node, child))
            walk(child, node)
            tour.append((child, node))

    walk(root, -1)
    return tuple(tour)


def _oriented_pair(
    rep: TreeRepresentation,
    base: BaseTree,
    directed: tuple[int, int],
    element: Edge,
) -> tuple[int, int]:
    """Order an element's vertices so the first subtree holds the tail's
    clique-tree node and the second the head's.  Loops orient trivially;
    when both orders work the lower vertex goes first."""
    tail0 = base.subst_map[directed[0]]
    head0 = base.subst_map[directed[1]]
    a, b = element
    if a == b:
        sub = rep.subtrees[a]
        if tail0 not in sub or head0 not in sub:
            raise ConstructionError(
                f"loop vertex {a} does not span tree edge {directed}"
            )
        return (a, a)
    sa, sb = rep.subtrees[a], rep.subtrees[b]
    forward = tail0 in sa and head0 in sb
    backward = tail0 in sb and head0 in sa
    if forward:
        return (a, b)
    if backward:
        return (b, a)
    raise ConstructionError(f"element {element} does not span tree edge {directed}")


def _items_by_edge(fam: OverspanFamily) -> dict[Edge, list[int]]:
    grouped: dict[Edge, list[int]] = {}
    for item in fam.items:
        grouped.setdefault(item.tree_edge, []).append(item.index)
    for idxs in grouped.values():
        idxs.sort()
    return grouped


def associate_cycle_tour(
    rep: TreeRepresentation,
    base: BaseTree,
    fam: OverspanFamily,
    sdr: Sdr,
) -> TourAssociation:
    """Assign an ordered subtree pair to every directed tour edge.

    Black edges: copy 0's element serves the earlier traversal, copy 1's the
    later.  Red edges: the element's pair serves the earlier traversal and
    the owning path vertex's doubled pair the later.
    """
    tour = euler_tour(base.tree)
    occurrences: dict[Edge, list[int]] = {}
    for i, (t, h) in enumerate(tour):
        occurrences.setdefault(ordered_edge(t, h), []).append(i)
    grouped = _items_by_edge(fam)
    pairs: list[tuple[int, int] | None] = [None] * len(tour)
    for e in sorted(base.tree.edges):
        occ = occurrences[e]
        if len(occ) != 2:
            raise ConstructionError(f"tour traverses edge {e} {len(occ)} times")
        idxs = grouped[e]
        if base.colours[e] == "black":
            for k in range(2):
                pairs[occ[k]] = _oriented_pair(rep, base, tour[occ[k]], sdr.choice[idxs[k]])
        else:
            pairs[occ[0]] = _oriented_pair(rep, base, tour[occ[0]], sdr.choice[idxs[0]])
            owner = base.red_source[e]
            pairs[occ[1]] = (owner, owner)
    filled = tuple(p for p in pairs if p is not None)
    if len(filled) != len(tour):
        raise ConstructionError("some tour edges received no subtree pair")
    _assert_no_reuse(filled)
    return TourAssociation(tour, filled)


def _assert_no_reuse(pairs) -> None:
    seen: dict[int, int] = {}
    for i, pair in enumerate(pairs):
        for vertex in set(pair):
            if vertex in seen and seen[vertex] != i:
                raise ConstructionError(
                    f"subtree of vertex {vertex} appears in pairs {seen[vertex]} and {i}"
                )
            seen[vertex] = i


def _distinguished_nodes(
    rep: TreeRepresentation, base: BaseTree, vertices
) -> dict[int, int]:
    """Lowest substantial base node of each vertex's subtree."""
    out = {}
    for w in vertices:
        nodes = substantial_nodes_of(rep, base, w)
        if not nodes:
            raise ConstructionError(f"subtree of vertex {w} has no substantial node")
        out[w] = nodes[0]
    return out


def _collapse_adjacent(seq: list[int]) -> list[int]:
    out: list[int] = []
    for x in seq:
        if out and out[-1] == x:
            continue
        out.append(x)
    return out


def _weave(slot_pairs, insert_after, prefix, front_block, suffix) -> list[int]:
    seq: list[int] = list(prefix) + list(front_block)
    for i, pair in enumerate(slot_pairs):
        seq.extend(pair)
        seq.extend(insert_after.get(i, ()))
    seq.extend(suffix)
    return _collapse_adjacent(seq)


def verify_cycle(g: Graph, seq) -> None:
    if len(seq) != g.n or sorted(seq) != list(range(g.n)):
        raise ConstructionError(
            f"sequence is not a permutation of the {g.n} vertices: {seq}"
        )
    for i, a in enumerate(seq):
        b = seq[(i + 1) % len(seq)]
        if not g.has_edge(a, b):
            raise ConstructionError(f"consecutive cycle vertices {a} and {b} not adjacent")


def construct_hamilton_cycle(
    g: Graph,
    rep: TreeRepresentation,
    ips: IndependentPathSystem,
    base: BaseTree,
    fam: OverspanFamily,
    sdr: Sdr,
) -> tuple[int, ...]:
    """Run the tour construction and return a verified Hamilton cycle."""
    if g.n < 3:
        raise TooSmallError("a Hamilton cycle needs at least 3 vertices")
    if not base.tree.edges:
        if not g.is_complete():
            raise ConstructionError("edgeless base tree on a non-complete graph")
        return tuple(range(g.n))
    assoc = associate_cycle_tour(rep, base, fam, sdr)
    entering: dict[int, int] = {}
    for i, (_, head) in enumerate(assoc.tour):
        entering.setdefault(head, i)
    placed = {vertex for pair in assoc.pairs for vertex in pair}
    unused = [w for w in range(g.n) if w not in placed]
    dist = _distinguished_nodes(rep, base, unused)
    insert_after: dict[int, list[int]] = {}
    for w in sorted(unused):
        slot = entering[dist[w]]
        insert_after.setdefault(slot, []).append(w)
    seq = _weave(assoc.pairs, insert_after, (), (), ())
    verify_cycle(g, seq)
    return tuple(seq)


def _validate_input(g: Graph, minimum: int) -> None:
    if g.loops:
        raise InputError("input graphs must be loop-free")
    if g.n < minimum:
        raise TooSmallError(f"need at least {minimum} vertices, got {g.n}")
    if not is_connected(g):
        raise DisconnectedError("input graph is disconnected")


def run_pipeline(g: Graph, cap: int = DEFAULT_CAP) -> PipelineResult:
    """Either a verified Hamilton cycle or a verified witness separator.

    Rejects non-chordal, disconnected, and too-small inputs with distinct
    errors.  When the representative search fails, a violating subfamily
    must exist; its absence would be a bug and raises loudly.
    """
    _validate_input(g, 3)
    s = build_structures(g)
    sdr = find_sdr(s.family)
    if sdr is not None:
        cycle = construct_hamilton_cycle(
            g, s.representation, s.independent_paths, s.base, s.family, sdr
        )
        return PipelineResult(cycle, None)
    picks = find_violating_subfamily(s.family, cap=cap)
    if picks is None:
        raise ConstructionError(
            "no representative system and no violating subfamily; "
            "the Hall-threshold machinery is inconsistent"
        )
    witness = extract_separator(
        g, s.representation, s.independent_paths, s.base, s.family, picks
    )
    return PipelineResult(None, witness)


# ---------------------------------------------------------------------------
# Hamilton u-v paths


def verify_path(g: Graph, seq, u: int, v: int) -> None:
    if len(seq) != g.n or sorted(seq) != list(range(g.n)):
        raise PathDiagnostic(f"sequence is not a permutation of the vertices: {seq}")
    if seq[0] != u or seq[-1] != v:
        raise PathDiagnostic(f"sequence endpoints {seq[0]}, {seq[-1]} are not {u}, {v}")
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            raise PathDiagnostic(f"consecutive path vertices {a} and {b} not adjacent")


def _hierholzer(tree: Tree, copies: list[Edge], start: int, end: int):
    """Euler trail over an edge-copy multiset, or None.

    Deterministic: at every node the unused copy with the smallest
    (neighbour, copy id) is taken first.
    """
    if not copies:
        return [] if start == end else None
    adjacency: dict[int, list[tuple[int, int]]] = {v: [] for v in tree.nodes}
    for cid, (a, b) in enumerate(copies):
        adjacency[a].append((b, cid))
        adjacency[b].append((a, cid))
    for lst in adjacency.values():
        lst.sort()
    odd = sorted(v for v, lst in adjacency.items() if len(lst) % 2)
    if start == end:
        if odd:
            return None
    elif odd != sorted((start, end)):
        return None
    used = [False] * len(copies)
    pointer = {v: 0 for v in tree.nodes}
    stack = [start]
    popped: list[int] = []
    while stack:
        v = stack[-1]
        lst = adjacency[v]
        i = pointer[v]
        while i < len(lst) and used[lst[i][1]]:
            i += 1
        pointer[v] = i
        if i < len(lst):
            w, cid = lst[i]
            used[cid] = True
            stack.append(w)
        else:
            popped.append(stack.pop())
    walk = popped[::-1]
    if len(walk) != len(copies) + 1 or walk[0] != start or walk[-1] != end:
        return None
    return list(zip(walk, walk[1:]))


def _euler_trail(
    tree: Tree,
    copies: list[Edge],
    start: int,
    end: int,
    first: tuple[int, int] | None,
    last: tuple[int, int] | None,
):
    """Trail from start to end, optionally with forced first/last directed
    edges (each consumes one copy)."""
    pool = list(copies)
    prefix: list[tuple[int, int]] = []
    suffix: list[tuple[int, int]] = []
    mid_start, mid_end = start, end
    if first is not None:
        e = ordered_edge(*first)
        if e not in pool:
            return None
        pool.remove(e)
        prefix = [first]
        mid_start = first[1]
    if last is not None:
        e = ordered_edge(*last)
        if e not in pool:
            return None
        pool.remove(e)
        suffix = [last]
        mid_end = last[0]
    mid = _hierholzer(tree, pool, mid_start, mid_end)
    if mid is None:
        return None
    return prefix + mid + suffix


def _other_endpoint(edge: Edge, node: int) -> int:
    return edge[1] if edge[0] == node else edge[0]


def _assemble_path(
    g: Graph,
    s: PipelineStructures,
    sdr: Sdr,
    u: int,
    v: int,
) -> tuple[int, ...]:
    rep, ips, base, fam = s.representation, s.independent_paths, s.base, s.family
    tree = base.tree
    red_edge_of = {owner: e for e, owner in base.red_source.items()}
    e_u = red_edge_of.get(u)
    e_v = red_edge_of.get(v)

    # Anchors: substantial nodes of F_u and F_v.  A vertex whose subtree is a
    # nontrivial member path must start (end) the trail with its own red
    # edge, which therefore has to stay off the trail's backbone path.
    cand_u = substantial_nodes_of(rep, base, u)
    cand_v = substantial_nodes_of(rep, base, v)
    chosen = None
    for au in cand_u:
        for av in cand_v:
            backbone = set(tree.path_edges(au, av)) if au != av else set()
            if e_u is not None and e_u in backbone:
                continue
            if e_v is not None and e_v in backbone:
                continue
            chosen = (au, av, backbone)
            break
        if chosen:
            break
    if chosen is None:
        raise PathDiagnostic("no anchor pair keeps the endpoint red edges off the backbone")
    a_u, a_v, backbone = chosen

    copies: list[Edge] = []
    for e in sorted(tree.edges):
        copies.append(e)
        if e not in backbone:
            copies.append(e)
    first = (a_u, _other_endpoint(e_u, a_u)) if e_u is not None else None
    last = (_other_endpoint(e_v, a_v), a_v) if e_v is not None else None
    trail = _euler_trail(tree, copies, a_u, a_v, first, last)
    if trail is None:
        raise PathDiagnostic("no spanning trail realizes the required endpoints")

    occurrences: dict[Edge, list[int]] = {}
    for i, (t, h) in enumerate(trail):
        occurrences.setdefault(ordered_edge(t, h), []).append(i)
    grouped = _items_by_edge(fam)
    pairs: list[tuple[int, int] | None] = [None] * len(trail)
    for e in sorted(tree.edges):
        occ = occurrences.get(e, [])
        if not occ:
            raise PathDiagnostic(f"trail never crosses tree edge {e}")
        idxs = grouped[e]
        if base.colours[e] == "black":
            # One traversal uses copy 0 only; copy 1's element is dropped and
            # its vertices rejoin the pool of splice-in subtrees.
            for k, slot in enumerate(occ):
                pairs[slot] = _oriented_pair(rep, base, trail[slot], sdr.choice[idxs[k]])
        elif e == e_u:
            if len(occ) != 2 or occ[0] != 0:
                raise PathDiagnostic("endpoint red edge is not the forced first crossing")
            pairs[occ[0]] = (u, u)
            pairs[occ[1]] = _oriented_pair(rep, base, trail[occ[1]], sdr.choice[idxs[0]])
        elif e == e_v:
            if len(occ) != 2 or occ[1] != len(trail) - 1:
                raise PathDiagnostic("endpoint red edge is not the forced last crossing")
            pairs[occ[0]] = _oriented_pair(rep, base, trail[occ[0]], sdr.choice[idxs[0]])
            pairs[occ[1]] = (v, v)
        else:
            pairs[occ[0]] = _oriented_pair(rep, base, trail[occ[0]], sdr.choice[idxs[0]])
            if len(occ) == 2:
                owner = base.red_source[e]
                pairs[occ[1]] = (owner, owner)
    filled = tuple(p for p in pairs if p is not None)
    if len(filled) != len(trail):
        raise PathDiagnostic("some trail edges received no subtree pair")
    _assert_no_reuse(filled)

    entering: dict[int, int] = {}
    for i, (_, head) in enumerate(trail):
        entering.setdefault(head, i)
    placed = {vertex for pair in filled for vertex in pair} | {u, v}
    unused = [w for w in range(g.n) if w not in placed]
    dist = _distinguished_nodes(rep, base, unused)
    insert_after: dict[int, list[int]] = {}
    front_block: list[int] = []
    for w in sorted(unused):
        node = dist[w]
        if node in entering:
            insert_after.setdefault(entering[node], []).append(w)
        elif node == a_u:
            front_block.append(w)
        else:
            raise PathDiagnostic(f"node {node} is never entered by the trail")
    prefix = [u] if e_u is None else []
    suffix = [v] if e_v is None else []
    seq = _weave(filled, insert_after, prefix, front_block, suffix)
    verify_path(g, seq, u, v)
    return tuple(seq)


def construct_hamilton_path(
    g: Graph, u: int, v: int, cap: int = DEFAULT_CAP
) -> PathResult:
    """Verified Hamilton u-v path, or a witness separator (one-sided).

    The representative search runs with u and v forbidden; on failure the
    violating subfamily is found against the same reduced unions and the
    separator is extracted under the relaxed cover budget 2|B|.
    """
    _validate_input(g, 2)
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InputError(f"endpoints {u}, {v} out of range 0..{g.n - 1}")
    if u == v:
        raise InputError("path endpoints must differ")
    s = build_structures(g)
    if not s.base.tree.edges:
        if not g.is_complete():
            raise ConstructionError("edgeless base tree on a non-complete graph")
        middle = [w for w in range(g.n) if w not in (u, v)]
        return PathResult(tuple([u, *middle, v]), None)
    forbidden = frozenset((u, v))
    sdr = find_sdr(s.family, forbidden=forbidden)
    if sdr is None:
        picks = find_violating_subfamily(s.family, cap=cap, forbidden=forbidden)
        if picks is None:
            raise ConstructionError(
                "no forbidden-avoiding representative system and no violating "
                "subfamily; the Hall-threshold machinery is inconsistent"
            )
        witness = extract_separator(
            g,
            s.representation,
            s.independent_paths,
            s.base,
            s.family,
            picks,
            cover_budget=2 * len(picks),
        )
        return PathResult(None, witness)
    return PathResult(_assemble_path(g, s, sdr, u, v), None)
