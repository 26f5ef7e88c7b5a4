"""Exhaustive reference algorithms used to validate the construction.

Every routine here is exponential and intended for small instances only
(practical up to roughly n = 14 for the Hamilton searches and a few dozen
edges for the matching search).  They guard property tests and acceptance
checks; the production pipeline never calls them.
"""

from __future__ import annotations

import itertools

from .graphs import Graph, _bits


def brute_force_maximal_cliques(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Enumerate all vertex subsets and keep the maximal cliques.

    Exponential in n; use only for n <= 16 or so.
    """
    cliques = []
    for mask in range(1, 1 << g.n):
        vs = _bits(mask)
        if all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2)):
            cliques.append(frozenset(vs))
    kept = []
    for cand in sorted(cliques, key=lambda c: (-len(c), sorted(c))):
        if not any(cand < other for other in kept):
            kept.append(cand)
    return tuple(sorted(tuple(sorted(c)) for c in kept))


def hamilton_cycle_oracle(g: Graph) -> tuple[int, ...] | None:
    """Backtracking Hamilton-cycle search; canonical result or None.

    The returned cycle starts at vertex 0 and runs in the direction whose
    second vertex is smaller than its last, so equality comparisons are
    rotation- and reflection-free.
    """
    n = g.n
    if n < 3:
        return None
    if any(g.degree(v) < 2 for v in range(n)):
        return None
    path = [0]

    def extend(used: int) -> bool:
        v = path[-1]
        if len(path) == n:
            return bool(g.adj[v] & 1)
        for w in _bits(g.adj[v] & ~used):
            path.append(w)
            if extend(used | 1 << w):
                return True
            path.pop()
        return False

    if not extend(1):
        return None
    if path[1] > path[-1]:
        path = [0] + path[:0:-1]
    return tuple(path)


def hamilton_path_oracle(g: Graph, s: int, t: int) -> tuple[int, ...] | None:
    """Backtracking Hamilton s..t path search, or None."""
    n = g.n
    if s == t or not (0 <= s < n and 0 <= t < n):
        return None
    if n == 2:
        return (s, t) if g.has_edge(s, t) else None
    path = [s]

    def extend(used: int) -> bool:
        v = path[-1]
        if len(path) == n:
            return v == t
        for w in _bits(g.adj[v] & ~used):
            if w == t and len(path) != n - 1:
                continue
            path.append(w)
            if extend(used | 1 << w):
                return True
            path.pop()
        return False

    return tuple(path) if extend(1 << s) else None


def matching_number_oracle(g: Graph) -> int:
    """Maximum number of pairwise vertex-disjoint edges and loops.

    A loop occupies its single vertex, so it is disjoint from any element
    not touching that vertex.  Plain branch and bound over the canonical
    element list.
    """
    elems = g.elements()
    best = 0

    def search(i: int, used: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if size + (len(elems) - i) <= best:
            return
        for j in range(i, len(elems)):
            u, v = elems[j]
            mask = 1 << u | 1 << v
            if not used & mask:
                search(j + 1, used | mask, size + 1)

    search(0, 0, 0)
    return best


def vertex_cover_oracle(g: Graph) -> tuple[int, ...]:
    """Lexicographically-first minimum vertex cover, by exhaustive search.

    A loop is covered only by its own vertex, so loop vertices are forced.
    The remaining edges are covered by trying candidate subsets in size
    order, then lexicographic order.
    """
    forced = sorted(g.loops)
    fset = set(forced)
    remaining = [e for e in sorted(g.edges) if e[0] not in fset and e[1] not in fset]
    if not remaining:
        return tuple(forced)
    candidates = sorted({v for e in remaining for v in e})
    for k in range(1, len(candidates) + 1):
        for combo in itertools.combinations(candidates, k):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v in remaining):
                return tuple(sorted(forced + list(combo)))
    raise AssertionError("unreachable: the full candidate set is a cover")


def vertex_cover_number_oracle(g: Graph) -> int:
    return len(vertex_cover_oracle(g))
