"""Systems of disjoint representatives over an overspan family.

A representative system picks one edge or loop from every item so that the
picks are pairwise vertex-disjoint (a loop occupies its single vertex).
When the family passes the Hall-type threshold checked in
``find_violating_subfamily`` such a system exists, and the exhaustive
backtracking here will find it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError
from .graphs import Edge
from .overspan import OverspanFamily


@dataclass(frozen=True)
class Sdr:
    """``choice[i]`` is the element picked for item i; loops are (v, v)."""

    choice: tuple[Edge, ...]

    def vertices_of(self, i: int) -> set[int]:
        u, v = self.choice[i]
        return {u, v}


def _copy_partners(fam: OverspanFamily) -> dict[int, tuple[int, int]]:
    """Map each item of a two-copy (black) edge to its (copy0, copy1) pair."""
    groups: dict[Edge, list[int]] = {}
    for item in fam.items:
        groups.setdefault(item.tree_edge, []).append(item.index)
    partners = {}
    for members in groups.values():
        if len(members) == 2:
            pair = (min(members), max(members))
            partners[pair[0]] = pair
            partners[pair[1]] = pair
    return partners


def find_sdr(fam: OverspanFamily, forbidden=frozenset()) -> Sdr | None:
    """Exhaustive backtracking search for a representative system.

    Elements incident with a forbidden vertex are never used.  Items are
    expanded fewest-options-first (ties by index) and, between the two
    identical copies of a black edge, copy 0's element must not exceed
    copy 1's, which halves the symmetric search space without losing
    solutions.  The result is deterministic.
    """
    forbidden = frozenset(forbidden)
    count = len(fam.items)
    elements: list[list[Edge]] = []
    for item in fam.items:
        avail = [
            el
            for el in item.graph.elements()
            if el[0] not in forbidden and el[1] not in forbidden
        ]
        elements.append(avail)
    partners = _copy_partners(fam)
    choice: list[Edge | None] = [None] * count
    used: set[int] = set()

    def candidates(i: int) -> list[Edge]:
        lo = hi = None
        pair = partners.get(i)
        if pair is not None:
            first, second = pair
            if i == second and choice[first] is not None:
                lo = choice[first]
            if i == first and choice[second] is not None:
                hi = choice[second]
        out = []
        for el in elements[i]:
            if lo is not None and el < lo:
                continue
            if hi is not None and el > hi:
                continue
            if el[0] in used or el[1] in used:
                continue
            out.append(el)
        return out

    def search(unassigned: list[int]) -> bool:
        if not unassigned:
            return True
        ranked = sorted(unassigned, key=lambda i: (len(candidates(i)), i))
        i = ranked[0]
        rest = [j for j in unassigned if j != i]
        for el in candidates(i):
            choice[i] = el
            used.update((el[0], el[1]))
            if search(rest):
                return True
            used.difference_update((el[0], el[1]))
            choice[i] = None
        return False

    if not search(list(range(count))):
        return None
    result = Sdr(tuple(choice))  # type: ignore[arg-type]
    verify_sdr(fam, result, forbidden)
    return result


def verify_sdr(fam: OverspanFamily, sdr: Sdr, forbidden=frozenset()) -> None:
    """Re-check membership, disjointness, and the forbidden-vertex rule."""
    if len(sdr.choice) != len(fam.items):
        raise ConstructionError("representative system does not cover the family")
    seen: set[int] = set()
    for item, el in zip(fam.items, sdr.choice):
        u, v = el
        if u == v:
            if u not in item.graph.loops:
                raise ConstructionError(f"item {item.index}: {el} is not one of its loops")
        elif el not in item.graph.edges:
            raise ConstructionError(f"item {item.index}: {el} is not one of its edges")
        verts = {u, v}
        if verts & seen:
            raise ConstructionError(f"item {item.index}: {el} reuses a vertex")
        if verts & forbidden:
            raise ConstructionError(f"item {item.index}: {el} touches a forbidden vertex")
        seen |= verts
