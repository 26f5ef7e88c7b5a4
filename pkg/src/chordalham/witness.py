"""Separator extraction: turning a violating subfamily into a toughness
certificate.

Given a subfamily whose union has a small matching (hence, by Koenig
duality, a small vertex cover C), the cover is extended with the owners of
isolated red edges to a set S with exactly quantified guarantees:

    |S| <= |C| + |X'|           and strictly fewer than 4|E0|+6|E1|+8|E2|+3|E'|
    c(G - S) > (2/5)|E0| + (3/5)|E1| + |E2| + |E'|, and c(G - S) >= 2

which together force 10 * c(G - S) > |S|: the graph is not 10-tough.  All
comparisons are exact (integers and Fractions); a failed inequality is an
internal bug and aborts loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, ParameterError, WitnessError
from .graphs import Edge, Graph, components_after_removal, ordered_edge
from .overspan import (
    OverspanFamily,
    nu_tau_konig,
    overspan_graph_for_edge,
    union_subfamily,
)
from .treerep import (
    BaseTree,
    IndependentPathSystem,
    Tree,
    TreeRepresentation,
    substantial_nodes_of,
)


@dataclass(frozen=True)
class WitnessSeparator:
    """A separating set certifying toughness below 10, with the sets that
    produced it: the minimum cover, the maximal extended subfamily, the
    black-edge partition by low-degree endpoints, and the isolated red
    edges with their owning vertices."""

    separator: tuple[int, ...]
    components: int
    cover: tuple[int, ...]
    subfamily: tuple[int, ...]
    e0: tuple[Edge, ...]
    e1: tuple[Edge, ...]
    e2: tuple[Edge, ...]
    e_prime: tuple[Edge, ...]
    x_prime: tuple[int, ...]


@dataclass(frozen=True)
class EnclosingPair:
    """Vertices u, v with substantial witness nodes on opposite sides of a
    base-tree edge."""

    u: int
    v: int
    tree_edge: Edge
    s_node: int
    t_node: int


def extract_separator(
    g: Graph,
    rep: TreeRepresentation,
    ips: IndependentPathSystem,
    base: BaseTree,
    fam: OverspanFamily,
    picks,
    cover_budget: int | None = None,
) -> WitnessSeparator:
    """Build and fully verify the witness separator for a violating subfamily.

    ``cover_budget`` defaults to 2|picks| - 2 (the Hamilton-cycle threshold);
    the Hamilton-path variant passes 2|picks|.  The strict size inequality is
    checked only under the default budget, where it is guaranteed.
    """
    picks = tuple(sorted(set(picks)))
    if not picks:
        raise ParameterError("the empty subfamily never violates the matching threshold")
    strict = cover_budget is None
    budget = 2 * len(picks) - 2 if cover_budget is None else cover_budget
    cert = nu_tau_konig(union_subfamily(fam, picks))
    if cert.nu > budget:
        raise ParameterError(
            f"subfamily has matching number {cert.nu} > budget {budget}; it does not violate"
        )
    cover = set(cert.cover)

    members = list(picks)
    member_set = set(picks)
    for item in fam.items:
        if item.index in member_set:
            continue
        if _covers_item(item.graph, cover):
            members.append(item.index)
            member_set.add(item.index)
    members.sort()

    # Base-tree edges whose items all ended up in the extension.  The two
    # copies of a black edge have identical graphs, so they are covered (and
    # hence included) together.
    edge_items: dict[Edge, list[int]] = {}
    for item in fam.items:
        edge_items.setdefault(item.tree_edge, []).append(item.index)
    b_edges = []
    for e, idxs in sorted(edge_items.items()):
        inside = [i for i in idxs if i in member_set]
        if inside and len(inside) != len(idxs):
            raise WitnessError(f"copies of edge {e} split across the extension")
        if inside:
            b_edges.append(e)

    tree = base.tree
    e0, e1, e2, red_b = [], [], [], []
    for e in b_edges:
        if base.colours[e] == "black":
            low = sum(1 for x in e if tree.degree(x) <= 2)
            (e0, e1, e2)[low].append(e)
        else:
            red_b.append(e)
    e_prime = []
    for e in red_b:
        adjacent_black_in_b = [
            d
            for d in b_edges
            if d != e and set(d) & set(e) and base.colours[d] == "black"
        ]
        if not adjacent_black_in_b:
            e_prime.append(e)
    x_prime = sorted(base.red_source[e] for e in e_prime)

    if cover & set(x_prime):
        raise WitnessError("cover and path-owner vertices overlap")
    separator = tuple(sorted(cover | set(x_prime)))
    count, _ = components_after_removal(g, separator)

    _verify_witness_arithmetic(
        len(members),
        len(cover),
        len(separator),
        count,
        len(e0),
        len(e1),
        len(e2),
        len(e_prime),
        len(red_b),
        budget=budget,
        strict=strict,
    )
    return WitnessSeparator(
        separator,
        count,
        tuple(sorted(cover)),
        tuple(members),
        tuple(sorted(e0)),
        tuple(sorted(e1)),
        tuple(sorted(e2)),
        tuple(sorted(e_prime)),
        tuple(x_prime),
    )


def _covers_item(item_graph: Graph, cover: set[int]) -> bool:
    return all(u in cover or v in cover for u, v in item_graph.edges) and all(
        v in cover for v in item_graph.loops
    )


def _verify_witness_arithmetic(
    n_members: int,
    n_cover: int,
    n_sep: int,
    components: int,
    n0: int,
    n1: int,
    n2: int,
    np: int,
    n_red: int,
    budget: int,
    strict: bool,
) -> None:
    checks = [
        ("|cover| within budget", n_cover <= budget),
        ("separator size splits", n_sep == n_cover + np),
        ("red edges off E' are adjacent to black members", n_red - np <= n1 + 2 * n2),
        ("member count bound", n_members <= 2 * n0 + 3 * n1 + 4 * n2 + np),
    ]
    size_rhs = 4 * n0 + 6 * n1 + 8 * n2 + 3 * np
    if strict:
        checks.append(("size inequality (strict)", n_sep < size_rhs))
    else:
        checks.append(("size inequality", n_sep <= size_rhs))
    comp_rhs = Fraction(2, 5) * n0 + Fraction(3, 5) * n1 + n2 + np
    checks.append(("component inequality", Fraction(components) > comp_rhs))
    checks.append(("separator separates", components >= 2))
    checks.append(("toughness certificate", 10 * components > n_sep))
    for name, ok in checks:
        if not ok:
            raise WitnessError(f"witness invariant failed: {name}")


# ---------------------------------------------------------------------------
# The tree counting bound


def tree_component_bound(
    tree: Tree,
    e0,
    e1,
    e2,
    k: Fraction,
) -> tuple[int, Fraction, bool]:
    """Count low-degree components after removing classified edges.

    ``e_i`` must consist of edges incident with exactly i nodes of degree at
    most 2 in the full tree; ``k`` must lie in [1/3, 1/2].  Returns
    ``(c2, bound, holds)`` where c2 counts components of the pruned forest
    containing a node of tree-degree <= 2 and bound is
    1 + k|E0| + (1-k)|E1| + |E2|, compared exactly.
    """
    k = Fraction(k)
    if not Fraction(1, 3) <= k <= Fraction(1, 2):
        raise ParameterError(f"k = {k} outside [1/3, 1/2]")
    sets = [frozenset(ordered_edge(*e) for e in s) for s in (e0, e1, e2)]
    if sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]:
        raise ParameterError("edge classes must be disjoint")
    for i, es in enumerate(sets):
        for e in es:
            if e not in tree.edges:
                raise InputError(f"{e} is not a tree edge")
            low = sum(1 for x in e if tree.degree(x) <= 2)
            if low != i:
                raise ParameterError(
                    f"edge {e} touches {low} low-degree nodes, not {i}"
                )
    removed = sets[0] | sets[1] | sets[2]
    assignment = tree.component_assignment(removed)
    low_components = {
        assignment[v] for v in tree.nodes if tree.degree(v) <= 2
    }
    c2 = len(low_components)
    bound = 1 + k * len(sets[0]) + (1 - k) * len(sets[1]) + len(sets[2])
    return c2, bound, Fraction(c2) >= bound


# ---------------------------------------------------------------------------
# Enclosing pairs and the disconnection check


def enclosing_pair(
    rep: TreeRepresentation,
    base: BaseTree,
    tree_edge: Edge,
    u: int,
    v: int,
) -> EnclosingPair | None:
    """Substantial witnesses for u, v on opposite sides of the edge, if any."""
    e = ordered_edge(*tree_edge)
    side_a, side_b = base.tree.split_sides(e)
    su = set(substantial_nodes_of(rep, base, u))
    sv = set(substantial_nodes_of(rep, base, v))
    if su & side_a and sv & side_b:
        return EnclosingPair(u, v, e, min(su & side_a), min(sv & side_b))
    if su & side_b and sv & side_a:
        return EnclosingPair(u, v, e, min(su & side_b), min(sv & side_a))
    return None


def check_enclosing_disconnection(
    g: Graph,
    rep: TreeRepresentation,
    ips: IndependentPathSystem,
    base: BaseTree,
    tree_edge: Edge,
    cover,
    pair: EnclosingPair,
) -> bool:
    """Whether the pair lands in different components of G minus the
    cover-derived set (the cover itself for a black edge, plus the owning
    path vertex for a red edge).

    The construction guarantees True whenever the inputs are valid, so a
    False return is a counterexample report, not an error.
    """
    e = ordered_edge(*tree_edge)
    if e not in base.tree.edges:
        raise InputError(f"{e} is not a base-tree edge")
    a_e = overspan_graph_for_edge(g, rep, ips, base, e)
    cover = set(cover)
    if not _covers_item(a_e, cover):
        raise InputError("the given set does not cover the edge's overspan graph")
    removed = set(cover)
    if base.colours[e] == "red":
        removed.add(base.red_source[e])
    if pair.u in removed or pair.v in removed:
        raise InputError("pair vertices must survive the removal")
    check = enclosing_pair(rep, base, e, pair.u, pair.v)
    if check is None:
        raise InputError("the given vertices do not form an enclosing pair for this edge")
    _, assignment = components_after_removal(g, removed)
    return assignment[pair.u] != assignment[pair.v]
