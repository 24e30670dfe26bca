"""Service-layer operations: every endpoint and CLI subcommand lands here.

Handlers accept validated request models and return response models, so the
HTTP app stays a thin routing shell and the CLI a thin argument parser.
"""

from __future__ import annotations

import numpy as np

from .. import __version__
from ..phase_space import Convention
from ..slicing import SliceSpec, default_angles, default_ranges, find_extrema, sample_slice
from ..tabulated import TabulatedWavefunction1D, kr_1d_grid, wigner_1d_grid
from ..hydrogen import psi_momentum, psi_position, radial_momentum, radial_position
from ..verification import run_verify
from .models import (
    CheckModel,
    ExtremaRequest,
    ExtremaResponse,
    ExtremumModel,
    Grid1DRequest,
    Grid1DResponse,
    SliceRequest,
    SliceResponse,
    VerifyRequest,
    VerifyResponse,
    WavefunctionRequest,
    WavefunctionResponse,
)


def resolve_slice_spec(req: SliceRequest) -> SliceSpec:
    """Fill unset angles/ranges with the state-adapted defaults."""
    qn = req.quantum_numbers()
    auto = default_angles(qn)
    angles = (
        auto[0] if req.theta is None else req.theta,
        auto[1] if req.phi is None else req.phi,
        auto[2] if req.theta_p is None else req.theta_p,
        auto[3] if req.phi_p is None else req.phi_p,
    )
    r_auto, p_auto = default_ranges(qn, req.z)
    return SliceSpec(
        qn=qn,
        z=req.z,
        angles=angles,
        r_range=(req.r_min, req.r_max if req.r_max is not None else r_auto),
        p_range=(req.p_min, req.p_max if req.p_max is not None else p_auto),
        resolution=(req.n_r, req.n_p),
        quantity=req.quantity,
        convention=Convention(req.convention),
        display_scale=req.paper_scale,
    )


def handle_slice(req: SliceRequest) -> SliceResponse:
    result = sample_slice(resolve_slice_spec(req))
    return SliceResponse(
        metadata=result.metadata,
        r=result.r.tolist(),
        p=result.p.tolist(),
        values=result.values.tolist(),
        warnings=list(result.warnings),
    )


def handle_extrema(req: ExtremaRequest) -> ExtremaResponse:
    result = sample_slice(resolve_slice_spec(req))
    records = find_extrema(result, refine=req.refine)
    expected = (req.n - req.l) ** 2
    return ExtremaResponse(
        metadata=result.metadata,
        records=[
            ExtremumModel(r=r.r, p=r.p, value=r.value, kind=r.kind, boundary=r.boundary)
            for r in records
        ],
        count=len(records),
        expected_count=expected,
        law_satisfied=len(records) == expected,
        warnings=list(result.warnings),
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    reports, exit_status = run_verify(
        n_max=req.n_max,
        z=req.z,
        tolerance_overrides=req.tolerance_overrides or None,
        include_marginals=req.include_marginals,
        include_extrema=req.include_extrema,
    )
    checks = [
        CheckModel(
            name=r.name,
            target=r.target,
            computed=r.computed,
            error=r.error,
            tolerance=r.tolerance,
            passed=r.passed,
            flagged=r.flagged,
            imag_residue=r.imag_residue,
            note=r.note,
        )
        for r in reports
    ]
    return VerifyResponse(
        checks=checks,
        exit_status=exit_status,
        n_passed=sum(1 for c in checks if c.passed and not c.flagged),
        n_failed=sum(1 for c in checks if not c.passed and not c.flagged),
        n_flagged=sum(1 for c in checks if c.flagged),
    )


def handle_wavefunction(req: WavefunctionRequest) -> WavefunctionResponse:
    qn = req.quantum_numbers()
    r_auto, p_auto = default_ranges(qn, req.z)
    is_momentum = req.which in ("radial-momentum", "psi-momentum")
    q_max = req.q_max if req.q_max is not None else (p_auto if is_momentum else r_auto)
    q = np.linspace(0.0, q_max, req.points)
    if req.which == "radial-position":
        columns = {"value": radial_position(qn, req.z, q).tolist()}
    elif req.which == "radial-momentum":
        columns = {"value": radial_momentum(qn, req.z, q).tolist()}
    else:
        fn = psi_position if req.which == "psi-position" else psi_momentum
        vals = fn(qn, req.z, q, req.theta, req.phi)
        columns = {"re": vals.real.tolist(), "im": vals.imag.tolist()}
    metadata = {
        "tool": "krphase",
        "version": __version__,
        "state": qn.label,
        "z": req.z,
        "which": req.which,
        "axis": "p" if is_momentum else "r",
        "points": req.points,
    }
    if req.which.startswith("psi"):
        metadata["theta"] = req.theta
        metadata["phi"] = req.phi
    return WavefunctionResponse(metadata=metadata, q=q.tolist(), columns=columns)


def _tabulated_from_request(req: Grid1DRequest) -> TabulatedWavefunction1D:
    return TabulatedWavefunction1D(
        q=np.asarray(req.state.q, dtype=float),
        values=np.asarray(req.state.re, dtype=float) + 1j * np.asarray(req.state.im, dtype=float),
    )


def handle_kr1d(req: Grid1DRequest) -> Grid1DResponse:
    psi = _tabulated_from_request(req)
    q = np.linspace(req.q_min, req.q_max, req.n_q)
    p = np.linspace(req.p_min, req.p_max, req.n_p)
    grid = kr_1d_grid(psi, q, p)
    metadata = {
        "tool": "krphase",
        "version": __version__,
        "kind": "kr1d",
        "samples": len(psi.q),
        "spacing": psi.spacing,
        "discrete_norm": psi.norm,
    }
    return Grid1DResponse(
        metadata=metadata,
        q=q.tolist(),
        p=p.tolist(),
        columns={"re": grid.real.tolist(), "im": grid.imag.tolist()},
    )


def handle_wigner1d(req: Grid1DRequest) -> Grid1DResponse:
    psi = _tabulated_from_request(req)
    q = np.linspace(req.q_min, req.q_max, req.n_q)
    p = np.linspace(req.p_min, req.p_max, req.n_p)
    grid = wigner_1d_grid(psi, q, p)
    metadata = {
        "tool": "krphase",
        "version": __version__,
        "kind": "wigner1d",
        "samples": len(psi.q),
        "spacing": psi.spacing,
        "discrete_norm": psi.norm,
    }
    return Grid1DResponse(
        metadata=metadata,
        q=q.tolist(),
        p=p.tolist(),
        columns={"value": grid.tolist()},
    )
