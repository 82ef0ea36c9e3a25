"""Stateless local HTTP facade for the interactive explorer.

Every request carries the graph in its body; handlers call pure functions
over request-local data, so requests are order-independent and may be
served concurrently.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import admissibility, certificates, graph, measure

DEFAULT_SIZE_CAP = 500
DEFAULT_DIMS = [2, 3, 4]


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, details=None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.details = details or []


def _graph_from_body(body: dict, size_cap: int) -> graph.PinnedGraph:
    doc = body.get("graph")
    if doc is None:
        raise ApiError(400, "MissingGraph", "request body must contain a 'graph' document")
    if isinstance(doc, str):
        try:
            g = graph.parse_graph(doc)
        except graph.GraphError as exc:
            raise ApiError(400, type(exc).__name__, str(exc)) from exc
    else:
        try:
            g = graph.graph_from_dict(doc)
        except graph.GraphError as exc:
            raise ApiError(400, type(exc).__name__, str(exc)) from exc
    pins_override = body.get("pins")
    if pins_override is not None:
        g = graph.PinnedGraph(n=g.n, edges=g.edges, pins=frozenset(int(p) for p in pins_override), labels=g.labels)
    if g.n > size_cap:
        raise ApiError(413, "GraphTooLarge", f"graph has {g.n} vertices; cap is {size_cap}")
    report = graph.validate(g)
    if report:
        raise ApiError(400, "InvalidGraph", "graph violates the pinned-graph invariants",
                       details=[v.to_dict() for v in report])
    return g


def create_app(size_cap: int = DEFAULT_SIZE_CAP, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="kappa-lab explorer API")
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "details": exc.details},
        )

    @app.post("/analyze")
    async def analyze(body: dict):
        g = _graph_from_body(body, size_cap)
        dims = [int(d) for d in body.get("dims", DEFAULT_DIMS)]
        cert = certificates.schedule_for(g)
        report = certificates.threshold_table(cert.kappa, dims)
        doc = certificates.certificate_document(cert, report)
        return {"validation": [], **doc}

    @app.post("/dismantle")
    async def dismantle(body: dict):
        g = _graph_from_body(body, size_cap)
        k = body.get("k")
        if not isinstance(k, int) or k < 0:
            raise ApiError(400, "BadBudget", "'k' must be a nonnegative integer")
        policy_spec = body.get("policy", {})
        try:
            policy = admissibility.ChoicePolicy(
                kind=policy_spec.get("kind", "min-degree"),
                seed=policy_spec.get("seed"),
            )
        except ValueError as exc:
            raise ApiError(400, "BadPolicy", str(exc)) from exc
        return admissibility.run_k_algorithm(g, k, policy).to_dict()

    @app.post("/volume-sweep")
    async def volume_sweep(body: dict):
        g = _graph_from_body(body, size_cap)
        generators = body.get("generators")
        if not isinstance(generators, list) or not generators:
            raise ApiError(400, "BadParams", "'generators' must be a nonempty list")
        n = int(body.get("n", 10_000))
        if n > 1_000_000:
            raise ApiError(400, "BadParams", "sample count capped at 1e6")
        delta = float(body.get("delta", 1 / 64))
        seed = int(body.get("seed", 0))
        phi = body.get("phi", "euclidean")
        results = []
        for gen in generators:
            try:
                sample = measure.sample_config_images(g, phi, gen, n, seed)
            except (measure.BadGeneratorParams, ValueError) as exc:
                raise ApiError(400, "BadParams", str(exc)) from exc
            est = measure.estimate_image_volume(sample.image, delta)
            results.append({"generator": gen, "seed": seed, **est.to_dict()})
        return {"results": results}

    if static_dir and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="explorer")

    return app
