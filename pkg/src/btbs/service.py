"""HTTP service exposing the decomposition to remote clients (the
browser viewer in particular).

POST /api/decompose   states JSON (optionally with an "order" array) in,
                      register JSON out
GET  /api/health      {"status": "ok"}
GET  /                the viewer's static assets when present, 404 otherwise

Handlers are stateless; requests are processed independently.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, ValidationError

from .core import decompose
from .errors import BtbsError
from .serialize import export_register, states_from_pairs

DEFAULT_MAX_BODY = 1 << 20


class DecomposeRequest(BaseModel):
    n_qubits: int
    states: list[list[tuple[float, float]]]
    order: list[int] | None = None


class NodeRecord(BaseModel):
    coord: str
    theta: list[float]
    phi: list[float]


class RegisterResponse(BaseModel):
    n_qubits: int
    n_samples: int
    order: list[int]
    nodes: list[NodeRecord]


class HealthResponse(BaseModel):
    status: str


def _find_static_dir(static_dir: str | os.PathLike | None) -> Path | None:
    candidates = []
    if static_dir is not None:
        candidates.append(Path(static_dir))
    else:
        env = os.environ.get("BTBS_STATIC_DIR")
        if env:
            candidates.append(Path(env))
        candidates.append(Path.cwd() / "frontend" / "dist")
    for path in candidates:
        if (path / "index.html").is_file():
            return path
    return None


def create_app(
    static_dir: str | os.PathLike | None = None,
    max_body_bytes: int = DEFAULT_MAX_BODY,
) -> FastAPI:
    app = FastAPI(title="btbs", docs_url="/api/docs", openapi_url="/api/openapi.json")

    @app.get("/api/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok")

    @app.post("/api/decompose", response_model=RegisterResponse)
    async def decompose_states(request: Request) -> Response:
        body = await request.body()
        if len(body) > max_body_bytes:
            return JSONResponse(
                {"error": f"request body exceeds {max_body_bytes} bytes"},
                status_code=413,
            )
        try:
            req = DecomposeRequest.model_validate_json(body)
        except ValidationError as exc:
            first = exc.errors()[0]
            loc = ".".join(str(p) for p in first.get("loc", ()))
            return JSONResponse(
                {"error": f"invalid request: {loc}: {first.get('msg', 'validation error')}"},
                status_code=400,
            )
        try:
            batch = states_from_pairs(req.n_qubits, req.states)
            register = decompose(batch, req.order)
        except BtbsError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return Response(export_register(register, "json"), media_type="application/json")

    static = _find_static_dir(static_dir)
    if static is not None:
        app.mount("/", StaticFiles(directory=static, html=True), name="viewer")
    else:

        @app.get("/")
        def no_viewer() -> JSONResponse:
            return JSONResponse(
                {"error": "viewer assets not installed; build the frontend or set BTBS_STATIC_DIR"},
                status_code=404,
            )

    return app
