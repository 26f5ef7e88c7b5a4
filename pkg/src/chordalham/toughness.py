"""Exact graph toughness by exhaustive separator enumeration.

Toughness is the minimum of |S| / c(G - S) over all separating vertex sets
S, and infinity for complete graphs.  Acceptance checks compare toughness
against the rational 10 exactly, so everything here is integer/Fraction
arithmetic; floats never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DisconnectedError, InputError, ParameterError
from .graphs import Graph, components_after_removal, is_connected

ENUMERATION_LIMIT = 18


@dataclass(frozen=True)
class Toughness:
    """Exact toughness value; ``value is None`` encodes infinity.

    ``witness`` is a minimizing separating set (None for complete graphs).
    """

    value: Fraction | None
    witness: tuple[int, ...] | None

    @property
    def infinite(self) -> bool:
        return self.value is None


def toughness(g: Graph, limit: int = ENUMERATION_LIMIT) -> Toughness:
    """Exact toughness of a connected graph, with a minimizing separator.

    Enumerates all 2^n vertex subsets, so inputs are capped (default 18
    vertices).  Disconnected graphs are rejected: the definition quantifies
    over separating sets of a connected graph.
    """
    if g.n == 0:
        raise InputError("toughness is undefined for the empty graph")
    if g.loops:
        raise InputError("toughness is defined for loop-free graphs")
    if not is_connected(g):
        raise DisconnectedError("toughness is undefined for disconnected graphs")
    if g.is_complete():
        return Toughness(None, None)
    if g.n > limit:
        raise ParameterError(
            f"exact toughness enumerates 2^n subsets; refusing n = {g.n} > {limit}"
        )
    best: Fraction | None = None
    best_set: tuple[int, ...] | None = None
    for mask in range(1, 1 << g.n):
        removed = [v for v in range(g.n) if mask >> v & 1]
        count, _ = components_after_removal(g, removed)
        if count < 2:
            continue
        ratio = Fraction(len(removed), count)
        if best is None or ratio < best:
            best = ratio
            best_set = tuple(removed)
    if best is None:
        # Non-complete connected graphs always have a separating set.
        raise DisconnectedError("no separating set found; input was not as expected")
    return Toughness(best, best_set)
