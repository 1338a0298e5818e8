"""FastAPI inference service.

Endpoints: POST /diagnose, GET /labels, GET /health. The checkpoint is loaded
once and shared read-only, so concurrent requests are safe and responses are
referentially transparent for a fixed model. Confidences for all labels are
always returned so clients can re-threshold without another round trip.
"""

from __future__ import annotations

import logging

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ..model.checkpoint import Model, load_checkpoint
from ..model.predict import predict

logger = logging.getLogger(__name__)


class DiagnoseRequest(BaseModel):
    text: str
    threshold: float = Field(default=0.5, gt=0.0, lt=1.0)
    top_k: int | None = Field(default=None, ge=1)


class RankedCondition(BaseModel):
    condition: str
    confidence: float


class DiagnoseResponse(BaseModel):
    ranked: list[RankedCondition]
    differential: list[str]
    model_id: str


def diagnose(
    model: Model, text: str, threshold: float, top_k: int | None = None
) -> DiagnoseResponse:
    """Rank all M labels by confidence and extract the differential.

    The differential is the >= threshold set, or the k most confident labels
    when ``top_k`` is given. ``ranked`` always covers every label.
    """
    preds = predict([text], model.params, model.dim, model.salt)
    confidences = preds.probabilities[0]
    order = sorted(range(len(confidences)), key=lambda j: (-confidences[j], j))
    ranked = [
        RankedCondition(condition=model.labels[j], confidence=float(confidences[j]))
        for j in order
    ]
    if top_k is not None:
        differential = [model.labels[j] for j in order[:top_k]]
    else:
        differential = [model.labels[j] for j in order if confidences[j] >= threshold]
    return DiagnoseResponse(ranked=ranked, differential=differential, model_id=model.model_id)


def create_app(checkpoint_path: str, cors_origins: list[str] | None = None) -> FastAPI:
    model = load_checkpoint(checkpoint_path)
    app = FastAPI(title="ddxkit differential diagnosis service", version="1")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(Exception)
    async def _internal_error(request: Request, exc: Exception):
        logger.exception("unhandled error serving %s", request.url.path)
        return JSONResponse(status_code=500, content={"detail": "internal error"})

    @app.get("/health")
    async def health():
        return {"status": "ok", "model_id": model.model_id}

    @app.get("/labels")
    async def labels():
        return {"labels": model.labels}

    @app.post("/diagnose", response_model=DiagnoseResponse)
    async def diagnose_endpoint(request: DiagnoseRequest):
        if not request.text.strip():
            raise HTTPException(status_code=422, detail="text must be non-empty")
        return diagnose(model, request.text, request.threshold, request.top_k)

    return app


def serve(checkpoint_path: str, host: str = "127.0.0.1", port: int = 8000) -> None:
    import uvicorn

    uvicorn.run(create_app(checkpoint_path), host=host, port=port, log_level="info")
