"""Request and response models for the HTTP service.

The JSON shapes mirror the library's domain types one-to-one so clients and
tests can assert on structure: cycles and paths are vertex arrays, rationals
are explicit numerator/denominator pairs, and witnesses carry every
intermediate set that produced them.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from .graphs import Graph, ordered_edge
from .toughness import Toughness
from .witness import WitnessSeparator

EdgePair = tuple[int, int]


class GraphModel(BaseModel):
    n: int = Field(ge=0)
    edges: list[EdgePair] = []
    loops: list[int] = []

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphModel":
        return cls(n=g.n, edges=sorted(g.edges), loops=sorted(g.loops))

    def to_graph(self) -> Graph:
        return Graph(
            self.n,
            frozenset(ordered_edge(u, v) for u, v in self.edges),
            frozenset(self.loops),
        )


class GraphRequest(BaseModel):
    graph: GraphModel
    dot: bool = False


class SdrRequest(BaseModel):
    graph: GraphModel
    forbidden: list[int] = []


class PipelineRequest(BaseModel):
    graph: GraphModel
    cap: int | None = None


class PathRequest(BaseModel):
    graph: GraphModel
    source: int
    target: int
    cap: int | None = None


class GenRequest(BaseModel):
    family: str
    n: int
    k: int = 2
    seed: int = 0
    dot: bool = False


class CheckResponse(BaseModel):
    chordal: bool
    order: list[int] | None = None
    hole: list[int] | None = None


class CliqueTreeResponse(BaseModel):
    nodes: list[list[int]]
    edges: list[EdgePair]
    subtrees: list[list[int]]
    leaf_owners: list[EdgePair]
    dot: str | None = None


class ColouredEdge(BaseModel):
    u: int
    v: int
    colour: str


class MemberPath(BaseModel):
    vertex: int
    nodes: list[int]


class RedSource(BaseModel):
    u: int
    v: int
    vertex: int


class BaseTreeResponse(BaseModel):
    nodes: list[int]
    edges: list[ColouredEdge]
    red_sources: list[RedSource]
    independent_set: list[int]
    member_paths: list[MemberPath]
    dot: str | None = None


class OverspanItemModel(BaseModel):
    index: int
    tree_edge: EdgePair
    copy_index: int
    edges: list[EdgePair]
    loops: list[int]


class OverspanResponse(BaseModel):
    excluded: list[int]
    items: list[OverspanItemModel]
    dot: str | None = None


class SdrChoice(BaseModel):
    item: int
    element: EdgePair


class SdrResponse(BaseModel):
    found: bool
    choice: list[SdrChoice] | None = None


class HamiltonResponse(BaseModel):
    found: bool
    cycle: list[int] | None = None


class ToughnessResponse(BaseModel):
    infinite: bool
    numerator: int | None = None
    denominator: int | None = None
    witness: list[int] | None = None

    @classmethod
    def from_toughness(cls, t: Toughness) -> "ToughnessResponse":
        if t.infinite:
            return cls(infinite=True)
        return cls(
            infinite=False,
            numerator=t.value.numerator,
            denominator=t.value.denominator,
            witness=list(t.witness),
        )


class WitnessModel(BaseModel):
    separator: list[int]
    components: int
    cover: list[int]
    subfamily: list[int]
    e0: list[EdgePair]
    e1: list[EdgePair]
    e2: list[EdgePair]
    e_prime: list[EdgePair]
    x_prime: list[int]

    @classmethod
    def from_witness(cls, w: WitnessSeparator) -> "WitnessModel":
        return cls(
            separator=list(w.separator),
            components=w.components,
            cover=list(w.cover),
            subfamily=list(w.subfamily),
            e0=[tuple(e) for e in w.e0],
            e1=[tuple(e) for e in w.e1],
            e2=[tuple(e) for e in w.e2],
            e_prime=[tuple(e) for e in w.e_prime],
            x_prime=list(w.x_prime),
        )


class WitnessSearchResponse(BaseModel):
    found: bool
    witness: WitnessModel | None = None


class PipelineResponse(BaseModel):
    outcome: str  # "cycle" or "witness"
    cycle: list[int] | None = None
    witness: WitnessModel | None = None


class PathResponse(BaseModel):
    outcome: str  # "path" or "witness"
    path: list[int] | None = None
    witness: WitnessModel | None = None


class GenResponse(BaseModel):
    graph: GraphModel
    text: str
    dot: str | None = None
