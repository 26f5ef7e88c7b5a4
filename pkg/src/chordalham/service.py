"""HTTP service exposing the pipeline and every intermediate structure.

Stateless: each request parses a graph, runs the requested computation, and
returns the structured result.  Caller mistakes map to 400 with a stable
error code; internal invariant violations map to 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import schemas
from .errors import ChordalHamError, InputError, InvariantError, PathDiagnostic
from .generators import GeneratorSpec, generate_chordal
from .graphio import base_tree_dot, clique_tree_dot, graph_dot, render_graph
from .graphs import PerfectEliminationOrder, is_chordal
from .hamilton import (
    build_structures,
    construct_hamilton_cycle,
    construct_hamilton_path,
    run_pipeline,
)
from .overspan import DEFAULT_CAP, find_violating_subfamily, union_subfamily
from .sdr import find_sdr
from .toughness import toughness
from .witness import extract_separator

app = FastAPI(
    title="chordalham",
    description=(
        "For a connected chordal graph: construct a verified Hamilton cycle, "
        "or produce a separating set S with 10 * c(G - S) > |S|, certifying "
        "toughness below 10."
    ),
    version="0.1.0",
)


def _error_response(status: int, exc: ChordalHamError) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"code": exc.code, "message": str(exc)}},
    )


@app.exception_handler(InputError)
async def _input_error(request: Request, exc: InputError):
    return _error_response(400, exc)


@app.exception_handler(InvariantError)
async def _invariant_error(request: Request, exc: InvariantError):
    return _error_response(500, exc)


@app.exception_handler(PathDiagnostic)
async def _path_diagnostic(request: Request, exc: PathDiagnostic):
    return _error_response(500, exc)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/check", response_model=schemas.CheckResponse)
def check(req: schemas.GraphRequest) -> schemas.CheckResponse:
    cert = is_chordal(req.graph.to_graph())
    if isinstance(cert, PerfectEliminationOrder):
        return schemas.CheckResponse(chordal=True, order=list(cert.order))
    return schemas.CheckResponse(chordal=False, hole=list(cert.cycle))


@app.post("/cliquetree", response_model=schemas.CliqueTreeResponse)
def cliquetree(req: schemas.GraphRequest) -> schemas.CliqueTreeResponse:
    s = build_structures(req.graph.to_graph())
    rep = s.representation
    return schemas.CliqueTreeResponse(
        nodes=[list(c) for c in rep.cliques],
        edges=sorted(rep.t0.edges),
        subtrees=[sorted(sub) for sub in rep.subtrees],
        leaf_owners=sorted(rep.leaf_owners.items()),
        dot=clique_tree_dot(rep) if req.dot else None,
    )


@app.post("/basetree", response_model=schemas.BaseTreeResponse)
def basetree(req: schemas.GraphRequest) -> schemas.BaseTreeResponse:
    s = build_structures(req.graph.to_graph())
    base, ips = s.base, s.independent_paths
    return schemas.BaseTreeResponse(
        nodes=list(base.subst_map),
        edges=[
            schemas.ColouredEdge(u=u, v=v, colour=base.colours[(u, v)])
            for u, v in sorted(base.tree.edges)
        ],
        red_sources=[
            schemas.RedSource(u=e[0], v=e[1], vertex=owner)
            for e, owner in sorted(base.red_source.items())
        ],
        independent_set=list(ips.members),
        member_paths=[
            schemas.MemberPath(vertex=v, nodes=sorted(ips.paths[v]))
            for v in ips.members
        ],
        dot=base_tree_dot(base) if req.dot else None,
    )


@app.post("/overspan", response_model=schemas.OverspanResponse)
def overspan(req: schemas.GraphRequest) -> schemas.OverspanResponse:
    s = build_structures(req.graph.to_graph())
    fam = s.family
    full_union = union_subfamily(fam, range(len(fam.items)))
    return schemas.OverspanResponse(
        excluded=sorted(fam.excluded),
        items=[
            schemas.OverspanItemModel(
                index=item.index,
                tree_edge=item.tree_edge,
                copy_index=item.copy_index,
                edges=sorted(item.graph.edges),
                loops=sorted(item.graph.loops),
            )
            for item in fam.items
        ],
        dot=graph_dot(full_union.graph, "overspan_union") if req.dot else None,
    )


@app.post("/sdr", response_model=schemas.SdrResponse)
def sdr(req: schemas.SdrRequest) -> schemas.SdrResponse:
    s = build_structures(req.graph.to_graph())
    found = find_sdr(s.family, forbidden=frozenset(req.forbidden))
    if found is None:
        return schemas.SdrResponse(found=False)
    return schemas.SdrResponse(
        found=True,
        choice=[
            schemas.SdrChoice(item=i, element=el) for i, el in enumerate(found.choice)
        ],
    )


@app.post("/hamilton", response_model=schemas.HamiltonResponse)
def hamilton(req: schemas.GraphRequest) -> schemas.HamiltonResponse:
    g = req.graph.to_graph()
    s = build_structures(g)
    found = find_sdr(s.family)
    if found is None:
        return schemas.HamiltonResponse(found=False)
    cycle = construct_hamilton_cycle(
        g, s.representation, s.independent_paths, s.base, s.family, found
    )
    return schemas.HamiltonResponse(found=True, cycle=list(cycle))


@app.post("/path", response_model=schemas.PathResponse)
def path(req: schemas.PathRequest) -> schemas.PathResponse:
    result = construct_hamilton_path(
        req.graph.to_graph(),
        req.source,
        req.target,
        cap=req.cap if req.cap is not None else DEFAULT_CAP,
    )
    if result.path is not None:
        return schemas.PathResponse(outcome="path", path=list(result.path))
    return schemas.PathResponse(
        outcome="witness", witness=schemas.WitnessModel.from_witness(result.witness)
    )


@app.post("/toughness", response_model=schemas.ToughnessResponse)
def toughness_endpoint(req: schemas.GraphRequest) -> schemas.ToughnessResponse:
    return schemas.ToughnessResponse.from_toughness(toughness(req.graph.to_graph()))


@app.post("/witness", response_model=schemas.WitnessSearchResponse)
def witness(req: schemas.PipelineRequest) -> schemas.WitnessSearchResponse:
    g = req.graph.to_graph()
    s = build_structures(g)
    cap = req.cap if req.cap is not None else DEFAULT_CAP
    picks = find_violating_subfamily(s.family, cap=cap)
    if picks is None:
        return schemas.WitnessSearchResponse(found=False)
    w = extract_separator(
        g, s.representation, s.independent_paths, s.base, s.family, picks
    )
    return schemas.WitnessSearchResponse(
        found=True, witness=schemas.WitnessModel.from_witness(w)
    )


@app.post("/pipeline", response_model=schemas.PipelineResponse)
def pipeline(req: schemas.PipelineRequest) -> schemas.PipelineResponse:
    result = run_pipeline(
        req.graph.to_graph(),
        cap=req.cap if req.cap is not None else DEFAULT_CAP,
    )
    if result.cycle is not None:
        return schemas.PipelineResponse(outcome="cycle", cycle=list(result.cycle))
    return schemas.PipelineResponse(
        outcome="witness", witness=schemas.WitnessModel.from_witness(result.witness)
    )


@app.post("/gen", response_model=schemas.GenResponse)
def gen(req: schemas.GenRequest) -> schemas.GenResponse:
    spec = GeneratorSpec(family=req.family, n=req.n, k=req.k, seed=req.seed)
    g = generate_chordal(spec)
    return schemas.GenResponse(
        graph=schemas.GraphModel.from_graph(g),
        text=render_graph(g),
        dot=graph_dot(g) if req.dot else None,
    )
