"""Request/response models for the HTTP service (and the CLI behind it)."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from ..hydrogen import QuantumNumbers


class StateParams(BaseModel):
    """Quantum numbers plus nuclear charge shared by most requests."""

    n: int = Field(ge=1, le=50, description="principal quantum number")
    l: int = Field(ge=0, description="orbital quantum number")
    m: int = Field(default=0, description="magnetic quantum number")
    z: float = Field(default=1.0, gt=0, description="nuclear charge")

    @model_validator(mode="after")
    def _check_state(self):
        QuantumNumbers(self.n, self.l, self.m)  # raises on invalid triples
        return self

    def quantum_numbers(self) -> QuantumNumbers:
        return QuantumNumbers(self.n, self.l, self.m)


class SliceRequest(StateParams):
    """Cross-section of the distribution at fixed angles over an (r, p) grid."""

    theta: float | None = None
    phi: float | None = None
    theta_p: float | None = None
    phi_p: float | None = None
    r_min: float = Field(default=0.0, ge=0)
    r_max: float | None = Field(default=None, gt=0)
    p_min: float = Field(default=0.0, ge=0)
    p_max: float | None = Field(default=None, gt=0)
    n_r: int = Field(default=256, ge=2, le=4096)
    n_p: int = Field(default=256, ge=2, le=4096)
    quantity: Literal["re", "im", "abs", "abs2"] = "abs"
    convention: Literal["marginal_exact", "paper_figure"] = "marginal_exact"
    paper_scale: bool = False


class SliceResponse(BaseModel):
    metadata: dict
    r: list[float]
    p: list[float]
    values: list[list[float]]
    warnings: list[str] = []


class ExtremaRequest(SliceRequest):
    """Maxima of the absolute-value slice; the quantity is forced to 'abs'."""

    quantity: Literal["abs"] = "abs"
    refine: bool = True


class ExtremumModel(BaseModel):
    r: float
    p: float
    value: float
    kind: str
    boundary: bool


class ExtremaResponse(BaseModel):
    metadata: dict
    records: list[ExtremumModel]
    count: int
    expected_count: int
    law_satisfied: bool
    warnings: list[str] = []


class VerifyRequest(BaseModel):
    n_max: int = Field(default=3, ge=1, le=10)
    z: float = Field(default=1.0, gt=0)
    tolerance_overrides: dict[str, float] = {}
    include_marginals: bool = True
    include_extrema: bool = True

    @field_validator("tolerance_overrides")
    @classmethod
    def _positive(cls, v):
        for key, val in v.items():
            if val <= 0:
                raise ValueError(f"tolerance {key!r} must be positive")
        return v


class CheckModel(BaseModel):
    name: str
    target: float
    computed: float
    error: float
    tolerance: float
    passed: bool
    flagged: bool
    imag_residue: float | None = None
    note: str = ""


class VerifyResponse(BaseModel):
    checks: list[CheckModel]
    exit_status: int
    n_passed: int
    n_failed: int
    n_flagged: int


class WavefunctionRequest(StateParams):
    """Tabulate a radial function or a full state along the radial coordinate."""

    which: Literal["radial-position", "radial-momentum", "psi-position", "psi-momentum"] = (
        "radial-position"
    )
    q_max: float | None = Field(default=None, gt=0, description="upper end of the radial grid")
    points: int = Field(default=512, ge=2, le=100000)
    theta: float = 1.5707963267948966
    phi: float = 0.0


class WavefunctionResponse(BaseModel):
    metadata: dict
    q: list[float]
    columns: dict[str, list[float]]


class TabulatedState(BaseModel):
    """Inline uniformly sampled 1-D complex wavefunction."""

    q: list[float]
    re: list[float]
    im: list[float]

    @model_validator(mode="after")
    def _lengths(self):
        if not len(self.q) == len(self.re) == len(self.im):
            raise ValueError("q, re, im must have equal lengths")
        if len(self.q) < 2:
            raise ValueError("need at least two samples")
        return self


class Grid1DRequest(BaseModel):
    state: TabulatedState
    q_min: float
    q_max: float
    p_min: float
    p_max: float
    n_q: int = Field(default=128, ge=2, le=4096)
    n_p: int = Field(default=128, ge=2, le=4096)

    @model_validator(mode="after")
    def _ranges(self):
        if not self.q_max > self.q_min:
            raise ValueError("q_max must exceed q_min")
        if not self.p_max > self.p_min:
            raise ValueError("p_max must exceed p_min")
        return self


class Grid1DResponse(BaseModel):
    metadata: dict
    q: list[float]
    p: list[float]
    columns: dict[str, list[list[float]]]


class HealthResponse(BaseModel):
    status: str
    version: str
