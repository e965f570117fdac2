"""FastAPI service wrapping the library.

Every operation is stateless JSON-in/JSON-out, so the CLI drives the same
app in-process by default and over HTTP when pointed at a server.
"""

from __future__ import annotations

import time
from typing import Any, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import catalogue, finitelab, gadget, oracles
from .catalogue import CONSTRUCTIONS
from .objects import (
    ImprovementWitness,
    PresentationError,
    apply_witness,
    presentation_from_json,
    presentation_to_json,
    verify_presentation,
    witness_to_json,
)
from .oracles import OracleError
from .universe import (
    base_edge,
    edge_key,
    edge_to_json,
    vertex_from_json,
    vertex_to_json,
)

app = FastAPI(title="strongmax", version="0.1.0")


class CatalogEdgeRequest(BaseModel):
    construction: str
    x: Optional[int] = None
    y: Optional[int] = None
    members: Optional[list[int]] = None
    u: Optional[int] = None
    v: Optional[int] = None


class CatalogEdgeResponse(BaseModel):
    construction: str
    is_edge: bool
    points: Optional[list[Any]] = None


class GadgetBuildRequest(BaseModel):
    k: Optional[int] = Field(default=None, ge=0)
    host: Optional[list[int]] = None


class GadgetBuildResponse(BaseModel):
    host: list[int]
    k: int
    vertices: list[Any]
    outer_edges: list[list[Any]]
    inner_edges: list[list[Any]]
    labels: dict[str, Any]


class VerifyRequest(BaseModel):
    presentation: dict
    bound: int = 8


class VerifyResponse(BaseModel):
    construction: str
    kind: str
    valid: bool
    bound: int


class ImproveRequest(BaseModel):
    presentation: dict
    steps: int = Field(default=1, ge=1)
    bound: int = 8


class ImproveResponse(BaseModel):
    construction: str
    witnesses: list[dict]
    presentation: dict


class DemoRequest(BaseModel):
    presentation: dict
    steps: int = Field(default=1, ge=1)
    bound: int = 8


class StepSummary(BaseModel):
    step: int
    removed: int
    added: int
    verified: bool


class RunReport(BaseModel):
    construction: str
    steps: int
    step_summaries: list[StepSummary]
    final_valid: bool
    final_presentation: dict


class DemoResponse(BaseModel):
    report: RunReport
    wall_time_ms: float  # reported separately; the report itself is
    # deterministic byte-for-byte across runs


class GadgetLemmaRequest(BaseModel):
    k_max: int = Field(default=7, ge=2, le=9)


class GadgetLemmaReport(BaseModel):
    k: int
    edge_count: int
    matching_count: int
    unique_maximum_is_outer: bool
    inner_is_matching_avoiding_host: bool
    min_cover_of_added_is_inner: bool


class BruteRequest(BaseModel):
    vertices: list[Any]
    edges: list[list[Any]]
    what: str  # "matchings" | "covers"


class BruteResponse(BaseModel):
    count: int
    strongly_extreme: list[list[list[Any]]]


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/catalog/list")
def catalog_list() -> dict:
    return {"constructions": list(CONSTRUCTIONS)}


@app.post("/catalog/edge", response_model=CatalogEdgeResponse)
def catalog_edge(req: CatalogEdgeRequest) -> CatalogEdgeResponse:
    try:
        if req.construction == "tardos":
            if req.x is None or req.y is None:
                raise PresentationError("tardos edges need x and y")
            pts = catalogue.tardos_edge_points(req.x, req.y)
            return CatalogEdgeResponse(
                construction="tardos",
                is_edge=True,
                points=[
                    vertex_to_json(p)
                    for p in sorted(pts, key=lambda v: (v.x, v.y))
                ],
            )
        if req.construction == "covergraph":
            if req.u is None or req.v is None:
                raise PresentationError("covergraph edges need u and v")
            ok = catalogue.covergraph_is_edge(req.u, req.v)
            return CatalogEdgeResponse(
                construction="covergraph",
                is_edge=ok,
                points=[req.u, req.v] if ok else None,
            )
        if req.construction in ("h1star", "h2star"):
            if req.members is None:
                raise PresentationError("ground edges need members")
            pred = (
                catalogue.h1star_is_edge
                if req.construction == "h1star"
                else catalogue.h2star_is_edge
            )
            ok = pred(req.members)
            return CatalogEdgeResponse(
                construction=req.construction,
                is_edge=ok,
                points=sorted(set(req.members)) if ok else None,
            )
        raise PresentationError(f"unknown construction {req.construction!r}")
    except (PresentationError, ValueError) as exc:
        raise _bad_request(exc)


@app.post("/gadget/build", response_model=GadgetBuildResponse)
def gadget_build(req: GadgetBuildRequest) -> GadgetBuildResponse:
    try:
        if req.host is not None:
            host = base_edge(req.host)
        elif req.k is not None:
            host = base_edge(range(1, req.k + 1))
        else:
            raise PresentationError("give either k or host")
        g = gadget.build_gadget(host)
    except (PresentationError, ValueError) as exc:
        raise _bad_request(exc)
    from .universe import vertex_key

    labels = {
        f"v{i}": n for i, n in enumerate(host, start=1)
    }
    return GadgetBuildResponse(
        host=list(host),
        k=g.k,
        vertices=[vertex_to_json(v) for v in sorted(g.vertices, key=vertex_key)],
        outer_edges=[edge_to_json(e) for e in g.outer_edges],
        inner_edges=[edge_to_json(e) for e in g.inner_edges],
        labels=labels,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    try:
        p = presentation_from_json(req.presentation)
        valid = verify_presentation(p, req.bound)
    except (PresentationError, ValueError) as exc:
        raise _bad_request(exc)
    return VerifyResponse(
        construction=p.construction, kind=p.kind, valid=valid, bound=req.bound
    )


def _run_steps(p, steps: int, bound: int):
    witnesses: list[ImprovementWitness] = []
    summaries = []
    for i in range(1, steps + 1):
        try:
            w = oracles.improve(p, probe_bound=bound)
            q = apply_witness(p, w)
            valid = verify_presentation(q, bound)
        except (PresentationError, OracleError, ValueError) as exc:
            raise PresentationError(f"step {i}: {exc}")
        if not valid:
            raise AssertionError(f"step {i}: witness result failed verification")
        d = w.delta
        witnesses.append(w)
        summaries.append(
            StepSummary(step=i, removed=d[0], added=d[1], verified=valid)
        )
        p = q
    return p, witnesses, summaries


@app.post("/improve", response_model=ImproveResponse)
def improve(req: ImproveRequest) -> ImproveResponse:
    try:
        p = presentation_from_json(req.presentation)
    except (PresentationError, ValueError) as exc:
        raise _bad_request(exc)
    construction = p.construction
    try:
        p, witnesses, _ = _run_steps(p, req.steps, req.bound)
    except PresentationError as exc:
        raise _bad_request(exc)
    return ImproveResponse(
        construction=construction,
        witnesses=[witness_to_json(construction, w) for w in witnesses],
        presentation=presentation_to_json(p),
    )


@app.post("/demo", response_model=DemoResponse)
def demo(req: DemoRequest) -> DemoResponse:
    t0 = time.perf_counter()
    try:
        p = presentation_from_json(req.presentation)
    except (PresentationError, ValueError) as exc:
        raise _bad_request(exc)
    construction = p.construction
    try:
        p, _, summaries = _run_steps(p, req.steps, req.bound)
    except PresentationError as exc:
        raise _bad_request(exc)
    report = RunReport(
        construction=construction,
        steps=req.steps,
        step_summaries=summaries,
        final_valid=True,
        final_presentation=presentation_to_json(p),
    )
    return DemoResponse(
        report=report, wall_time_ms=(time.perf_counter() - t0) * 1e3
    )


@app.post("/lab/gadget-lemmas")
def lab_gadget_lemmas(req: GadgetLemmaRequest) -> dict:
    reports = []
    for k in range(2, req.k_max + 1):
        g = gadget.build_gadget(base_edge(range(1, k + 1)))
        h = finitelab.gadget_subhypergraph(k)
        matchings = finitelab.enumerate_matchings(h)
        size_k = [m for m in matchings if len(m) == k]
        covers = finitelab.enumerate_covers_of(h, g.added_vertices)
        minimum = [c for c in covers if len(c) == k - 1]
        host_vs = g.vertices - g.added_vertices
        reports.append(
            GadgetLemmaReport(
                k=k,
                edge_count=len(g.edges),
                matching_count=len(matchings),
                unique_maximum_is_outer=(
                    size_k == [g.outer_set]
                    and max(len(m) for m in matchings) == k
                ),
                inner_is_matching_avoiding_host=(
                    g.inner_set in matchings
                    and not (set().union(*g.inner_set) & host_vs)
                ),
                min_cover_of_added_is_inner=(
                    min(len(c) for c in covers) == k - 1
                    and minimum == [g.inner_set]
                ),
            ).model_dump()
        )
    return {"k_max": req.k_max, "lemmas": reports, "all_hold": all(
        r["unique_maximum_is_outer"]
        and r["inner_is_matching_avoiding_host"]
        and r["min_cover_of_added_is_inner"]
        for r in reports
    )}


@app.post("/lab/brute", response_model=BruteResponse)
def lab_brute(req: BruteRequest) -> BruteResponse:
    try:
        verts = [vertex_from_json(v) for v in req.vertices]
        edges = [
            frozenset(vertex_from_json(v) for v in e) for e in req.edges
        ]
        h = finitelab.FiniteHypergraph.of(verts, edges)
        if req.what == "matchings":
            extreme = finitelab.strongly_maximal_matchings(h)
        elif req.what == "covers":
            extreme = finitelab.strongly_minimal_edge_covers(h)
        else:
            raise PresentationError("what must be 'matchings' or 'covers'")
    except (PresentationError, ValueError) as exc:
        raise _bad_request(exc)
    extreme = sorted(extreme, key=finitelab.sorted_key)
    return BruteResponse(
        count=len(extreme),
        strongly_extreme=[
            [edge_to_json(e) for e in sorted(s, key=edge_key)] for s in extreme
        ],
    )
