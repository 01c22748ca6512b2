"""Read-only HTTP service: pair listing, timelines, comparison documents."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..model import SCHEMA_VERSION, parse_instant
from ..store import CorruptDocument, NotFound, Store
from .comparison import comparison_document


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8400
    data_dir: Path = Path("data")
    assets_dir: Optional[Path] = None
    cors_origins: Sequence[str] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port out of range: {self.port}")


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def create_app(store: Store, assets_dir: Optional[Path] = None,
               cors_origins: Sequence[str] = ()) -> FastAPI:
    app = FastAPI(title="multiwiki", version="0.1.0", openapi_url="/api/openapi.json")

    if cors_origins:
        app.add_middleware(CORSMiddleware, allow_origins=list(cors_origins),
                           allow_methods=["GET"], allow_headers=["*"])

    @app.middleware("http")
    async def add_schema_version(request: Request, call_next):
        response = await call_next(request)
        response.headers["X-Schema-Version"] = str(SCHEMA_VERSION)
        return response

    @app.exception_handler(NotFound)
    async def not_found(request: Request, exc: NotFound):
        return _error(404, "not_found", str(exc))

    @app.exception_handler(CorruptDocument)
    async def corrupt(request: Request, exc: CorruptDocument):
        return _error(500, "corrupt_document", str(exc))

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.get("/api/pairs")
    def pairs():
        return [info.to_json() for info in store.list_pairs()]

    @app.get("/api/pairs/{pair_id}")
    def pair_detail(pair_id: str):
        return store.get_meta(pair_id)

    @app.get("/api/pairs/{pair_id}/timeline")
    def timeline(pair_id: str):
        return {"schema_version": SCHEMA_VERSION, **store.get_timeline(pair_id).to_json()}

    @app.get("/api/pairs/{pair_id}/comparison")
    def comparison(pair_id: str, time: Optional[str] = None):
        instant = None
        if time is not None:
            try:
                instant = parse_instant(time)
            except ValueError:
                return _error(400, "bad_request", f"invalid RFC 3339 time: {time!r}")
        return comparison_document(store, pair_id, instant)

    if assets_dir is not None and Path(assets_dir).is_dir():
        app.mount("/", StaticFiles(directory=assets_dir, html=True), name="assets")

    return app


def serve(config: ServiceConfig) -> None:
    """Bind and run uvicorn; raises OSError if the port is taken."""
    import socket

    import uvicorn

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((config.host, config.port))
    finally:
        probe.close()

    app = create_app(Store(config.data_dir), assets_dir=config.assets_dir,
                     cors_origins=config.cors_origins)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
