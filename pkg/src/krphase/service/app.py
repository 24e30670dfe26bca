"""FastAPI application exposing the phase-space operations over HTTP."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from . import handlers
from .models import (
    ExtremaRequest,
    ExtremaResponse,
    Grid1DRequest,
    Grid1DResponse,
    HealthResponse,
    SliceRequest,
    SliceResponse,
    VerifyRequest,
    VerifyResponse,
    WavefunctionRequest,
    WavefunctionResponse,
)

app = FastAPI(
    title="krphase service",
    version=__version__,
    description=(
        "Analytic Kirkwood-Rihaczek phase-space distributions of hydrogen "
        "bound states: grid cross-sections, extrema, 1-D evaluators, and a "
        "quadrature-based verification suite."
    ),
)


@app.exception_handler(ValueError)
async def _value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/slice", response_model=SliceResponse)
def compute_slice(req: SliceRequest) -> SliceResponse:
    return handlers.handle_slice(req)


@app.post("/extrema", response_model=ExtremaResponse)
def compute_extrema(req: ExtremaRequest) -> ExtremaResponse:
    return handlers.handle_extrema(req)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    return handlers.handle_verify(req)


@app.post("/wavefunction", response_model=WavefunctionResponse)
def wavefunction(req: WavefunctionRequest) -> WavefunctionResponse:
    return handlers.handle_wavefunction(req)


@app.post("/kr1d", response_model=Grid1DResponse)
def kr1d(req: Grid1DRequest) -> Grid1DResponse:
    return handlers.handle_kr1d(req)


@app.post("/wigner1d", response_model=Grid1DResponse)
def wigner1d(req: Grid1DRequest) -> Grid1DResponse:
    return handlers.handle_wigner1d(req)
