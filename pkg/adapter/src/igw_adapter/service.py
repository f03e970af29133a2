"""Encode endpoint: POST /encode {text, mode} -> {vector, dim, model_tag}."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .config import AdapterConfig, resolve
from .encode import MODES, EncoderError


def create_app(config: AdapterConfig | None = None) -> FastAPI:
    backends = resolve(config or AdapterConfig.builtin())
    app = FastAPI(title="igw-adapter", docs_url=None, redoc_url=None)

    @app.exception_handler(EncoderError)
    async def _encoder_error(_request: Request, exc: EncoderError):
        return JSONResponse(status_code=422,
                            content={"error": {"code": "bad_request",
                                               "message": str(exc)}})

    @app.post("/encode")
    def encode(body: dict):
        text = body.get("text", "")
        mode = body.get("mode", "symmetric")
        if mode not in MODES:
            return JSONResponse(
                status_code=422,
                content={"error": {"code": "bad_request",
                                   "message": f"unknown mode {mode!r}"}})
        encoder = backends.encoder(mode)
        vector = encoder.encode(str(text))
        return {"vector": vector, "dim": encoder.dim, "model_tag": encoder.tag}

    @app.get("/healthz")
    def healthz():
        return {"status": "ok",
                "models": {mode: backends.encoder(mode).tag for mode in MODES}}

    return app
