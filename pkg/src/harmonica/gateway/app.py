"""HTTP gateway exposing the recommender and the configurator.

Sessionless by design: the KB and feature model are loaded once at startup
and shared read-only; every request is a pure function of its body, so
responses are deterministic and concurrent clients cannot interfere.
Error bodies carry the stable codes from harmonica.errors.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request, Response

from .. import service
from ..banco.features import FeatureModel
from ..errors import HarmonicaError
from ..jsonio import canonical_json_bytes, parse_json_body
from ..kb.model import KnowledgeBase

# every engine error code maps to exactly one HTTP status (frozen in docs/api.md)
STATUS_BY_CODE = {
    "invalid-request": 400,
    "parse-error": 400,
    "missing-file": 400,
    "not-found": 404,
    "internal-error": 500,
}
DEFAULT_ERROR_STATUS = 422


def status_for(error: HarmonicaError) -> int:
    return STATUS_BY_CODE.get(error.code, DEFAULT_ERROR_STATUS)


def json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json_bytes(payload),
        status_code=status_code,
        media_type="application/json",
    )


def create_app(kb: KnowledgeBase, model: FeatureModel, frontend_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="harmonica", docs_url=None, redoc_url=None)

    @app.exception_handler(HarmonicaError)
    async def _domain_error(_request: Request, error: HarmonicaError) -> Response:
        return json_response(error.to_payload(), status_for(error))

    @app.get("/api/attributes")
    async def get_attributes() -> Response:
        return json_response(service.attributes_payload(kb))

    @app.get("/api/blockchains")
    async def get_blockchains() -> Response:
        return json_response(service.blockchains_payload(kb))

    @app.get("/api/patterns")
    async def get_patterns() -> Response:
        return json_response(service.patterns_payload(kb))

    @app.get("/api/conflict-rules")
    async def get_conflict_rules() -> Response:
        return json_response(service.conflict_rules_payload(kb))

    @app.get("/api/feature-model")
    async def get_feature_model() -> Response:
        return json_response(service.feature_model_payload(model))

    @app.post("/api/conflicts")
    async def post_conflicts(request: Request) -> Response:
        doc = parse_json_body(await request.body())
        return json_response(service.conflicts_op(doc, kb))

    @app.post("/api/blocked")
    async def post_blocked(request: Request) -> Response:
        doc = parse_json_body(await request.body())
        return json_response(service.blocked_op(doc, kb))

    @app.post("/api/recommend")
    async def post_recommend(request: Request) -> Response:
        doc = parse_json_body(await request.body())
        return json_response(service.recommend_op(doc, kb))

    @app.post("/api/preselect")
    async def post_preselect(request: Request) -> Response:
        doc = parse_json_body(await request.body())
        return json_response(service.preselect_op(doc, model))

    @app.post("/api/configure/validate")
    async def post_configure_validate(request: Request) -> Response:
        doc = parse_json_body(await request.body())
        return json_response(service.validate_op(doc, model))

    @app.post("/api/configure/complete")
    async def post_configure_complete(request: Request) -> Response:
        doc = parse_json_body(await request.body())
        return json_response(service.complete_op(doc, model))

    @app.post("/api/generate")
    async def post_generate(request: Request) -> Response:
        doc = parse_json_body(await request.body())
        return json_response(service.generate_op(doc, model, kb))

    if frontend_dir is not None and Path(frontend_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True), name="frontend")

    return app


def serve(kb_dir: str | Path, model_file: str | Path, host: str = "127.0.0.1",
          port: int = 8720, frontend_dir: str | Path | None = None) -> None:
    """Load, validate, and serve; refuses to start on an invalid KB or model."""
    import uvicorn

    from ..banco.features import load_feature_model
    from ..kb.loader import load_knowledge_base

    kb = load_knowledge_base(kb_dir)
    model = load_feature_model(model_file)
    app = create_app(kb, model, frontend_dir=frontend_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
