"""Command-line client for the phase-space service layer.

Each subcommand assembles a request model, dispatches it through the same
handlers the HTTP endpoints use, and writes CSV/JSON files locally.  Exit
codes: 0 on success, 1 when the verification suite finds an unexpected
failure, 2 on usage errors.
"""

from __future__ import annotations

import sys

import click
import numpy as np

from . import __version__
from .export import (
    GridDocument,
    write_extrema,
    write_grid_csv,
    write_grid_json,
    write_reports,
)
from .service import handlers
from .service.models import (
    ExtremaRequest,
    Grid1DRequest,
    SliceRequest,
    TabulatedState,
    VerifyRequest,
    WavefunctionRequest,
)
from .tabulated import TabulatedWavefunction1D
from .verification import VerificationReport, render_report_lines

_FORMATS = click.Choice(["csv", "json"])


def _write_document(doc: GridDocument, out: str, fmt: str, reproducible: bool) -> None:
    if fmt == "csv":
        write_grid_csv(doc, out, reproducible=reproducible)
    else:
        write_grid_json(doc, out, reproducible=reproducible)
    click.echo(f"wrote {out}")


def _state_options(fn):
    fn = click.option("--z", type=float, default=1.0, show_default=True, help="nuclear charge")(fn)
    fn = click.option("--m", type=int, default=0, show_default=True, help="magnetic quantum number")(fn)
    fn = click.option("--l", type=int, required=True, help="orbital quantum number")(fn)
    fn = click.option("--n", type=int, required=True, help="principal quantum number")(fn)
    return fn


def _slice_options(fn):
    fn = click.option("--reproducible", is_flag=True, help="omit timestamps for byte-identical output")(fn)
    fn = click.option("--format", "fmt", type=_FORMATS, default="csv", show_default=True)(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), required=True)(fn)
    fn = click.option("--paper-scale", is_flag=True, help="multiply values by (2 pi)^3 for figure comparison")(fn)
    fn = click.option(
        "--convention",
        type=click.Choice(["marginal_exact", "paper_figure"]),
        default="marginal_exact",
        show_default=True,
    )(fn)
    fn = click.option("--np", "n_p", type=int, default=256, show_default=True, help="grid points in p")(fn)
    fn = click.option("--nr", "n_r", type=int, default=256, show_default=True, help="grid points in r")(fn)
    fn = click.option("--pmax", type=float, default=None, help="default 4z/n")(fn)
    fn = click.option("--pmin", type=float, default=0.0, show_default=True)(fn)
    fn = click.option("--rmax", type=float, default=None, help="default 5n^2/z")(fn)
    fn = click.option("--rmin", type=float, default=0.0, show_default=True)(fn)
    fn = click.option("--phi-p", type=float, default=None, help="momentum azimuth [rad]")(fn)
    fn = click.option("--theta-p", type=float, default=None, help="momentum polar angle [rad]")(fn)
    fn = click.option("--phi", type=float, default=None, help="position azimuth [rad]")(fn)
    fn = click.option("--theta", type=float, default=None, help="position polar angle [rad]")(fn)
    fn = click.option("--yes", "-y", "assume_yes", is_flag=True, help="accept suggested angles without prompting")(fn)
    return fn


def _resolve_zero_slice_angles(n, l, m, theta, phi, theta_p, phi_p, assume_yes):
    """For m=0, l>0 states the equatorial default slice is identically zero;
    suggest the polar axis and require confirmation before substituting it."""
    angles_given = any(a is not None for a in (theta, phi, theta_p, phi_p))
    if m == 0 and l > 0 and not angles_given:
        prompt = (
            f"state n={n} l={l} m=0 vanishes on the default equatorial slice; "
            "use theta=theta_p=0 instead?"
        )
        if not assume_yes:
            try:
                if not click.confirm(prompt):
                    raise click.UsageError(
                        "refusing to emit an identically-zero slice; pass --theta/--theta-p "
                        "explicitly or accept the suggestion (-y)"
                    )
            except click.exceptions.Abort as exc:
                raise click.UsageError(
                    "cannot prompt for confirmation; pass -y or explicit angles"
                ) from exc
        return 0.0, 0.0, 0.0, 0.0
    return theta, phi, theta_p, phi_p


@click.group()
@click.version_option(version=__version__, prog_name="krphase")
def main() -> None:
    """Kirkwood-Rihaczek phase-space toolkit for hydrogen bound states."""


@main.command("kr-slice")
@_state_options
@_slice_options
@click.option("--quantity", type=click.Choice(["re", "im", "abs", "abs2"]), default="abs", show_default=True)
def kr_slice(n, l, m, z, assume_yes, theta, phi, theta_p, phi_p, rmin, rmax, pmin, pmax,
             n_r, n_p, convention, paper_scale, out, fmt, reproducible, quantity):
    """Sample a cross-section of the distribution on an (r, p) grid."""
    theta, phi, theta_p, phi_p = _resolve_zero_slice_angles(
        n, l, m, theta, phi, theta_p, phi_p, assume_yes
    )
    req = SliceRequest(
        n=n, l=l, m=m, z=z, theta=theta, phi=phi, theta_p=theta_p, phi_p=phi_p,
        r_min=rmin, r_max=rmax, p_min=pmin, p_max=pmax, n_r=n_r, n_p=n_p,
        quantity=quantity, convention=convention, paper_scale=paper_scale,
    )
    resp = handlers.handle_slice(req)
    metadata = dict(resp.metadata)
    for warning in resp.warnings:
        click.echo(f"warning: {warning}", err=True)
    if resp.warnings:
        metadata["warnings"] = "; ".join(resp.warnings)
    doc = GridDocument(
        kind="slice",
        metadata=metadata,
        axes=(("r", np.asarray(resp.r)), ("p", np.asarray(resp.p))),
        columns={"value": np.asarray(resp.values)},
    )
    _write_document(doc, out, fmt, reproducible)


@main.command()
@_state_options
@_slice_options
@click.option("--refine/--no-refine", default=True, show_default=True, help="parabolic sub-grid refinement")
def extrema(n, l, m, z, assume_yes, theta, phi, theta_p, phi_p, rmin, rmax, pmin, pmax,
            n_r, n_p, convention, paper_scale, out, fmt, reproducible, refine):
    """Detect local maxima of the absolute-value slice and check (n-l)^2."""
    theta, phi, theta_p, phi_p = _resolve_zero_slice_angles(
        n, l, m, theta, phi, theta_p, phi_p, assume_yes
    )
    req = ExtremaRequest(
        n=n, l=l, m=m, z=z, theta=theta, phi=phi, theta_p=theta_p, phi_p=phi_p,
        r_min=rmin, r_max=rmax, p_min=pmin, p_max=pmax, n_r=n_r, n_p=n_p,
        convention=convention, paper_scale=paper_scale, refine=refine,
    )
    resp = handlers.handle_extrema(req)
    for warning in resp.warnings:
        click.echo(f"warning: {warning}", err=True)
    click.echo(f"state {resp.metadata['state']}: {resp.count} maxima "
               f"(expected (n-l)^2 = {resp.expected_count})")
    for rec in resp.records:
        tag = " [boundary]" if rec.boundary else ""
        click.echo(f"  {rec.kind} at r={rec.r:.6g} p={rec.p:.6g} value={rec.value:.6g}{tag}")
    write_extrema(resp.records, resp.metadata, out, fmt=fmt, reproducible=reproducible)
    click.echo(f"wrote {out}")


@main.command()
@_state_options
@click.option("--which", type=click.Choice(["radial-position", "radial-momentum", "psi-position", "psi-momentum"]),
              default="radial-position", show_default=True)
@click.option("--qmax", type=float, default=None, help="upper end of the grid (default adapts to the state)")
@click.option("--points", type=int, default=512, show_default=True)
@click.option("--theta", type=float, default=np.pi / 2, show_default=True, help="polar angle for psi-*")
@click.option("--phi", type=float, default=0.0, show_default=True, help="azimuth for psi-*")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--format", "fmt", type=_FORMATS, default="csv", show_default=True)
@click.option("--reproducible", is_flag=True)
def wavefn(n, l, m, z, which, qmax, points, theta, phi, out, fmt, reproducible):
    """Tabulate radial wavefunctions or full states on a radial grid."""
    req = WavefunctionRequest(
        n=n, l=l, m=m, z=z, which=which, q_max=qmax, points=points, theta=theta, phi=phi
    )
    resp = handlers.handle_wavefunction(req)
    axis = resp.metadata["axis"]
    doc = GridDocument(
        kind="wavefunction",
        metadata=resp.metadata,
        axes=((axis, np.asarray(resp.q)),),
        columns={name: np.asarray(col) for name, col in resp.columns.items()},
    )
    _write_document(doc, out, fmt, reproducible)


@main.command()
@click.option("--n-max", type=click.IntRange(1, 10), default=3, show_default=True)
@click.option("--z", type=float, default=1.0, show_default=True)
@click.option("--tolerance-overrides", default="", help="comma-separated name=value pairs")
@click.option("--skip-marginals", is_flag=True, help="skip the slow 3-D marginal checks")
@click.option("--skip-extrema", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=_FORMATS, default="json", show_default=True)
@click.option("--reproducible", is_flag=True)
def verify(n_max, z, tolerance_overrides, skip_marginals, skip_extrema, out, fmt, reproducible):
    """Run the quadrature verification suite; exit 1 on unexpected failures."""
    overrides = {}
    if tolerance_overrides:
        for pair in tolerance_overrides.split(","):
            key, sep, value = pair.partition("=")
            if not sep:
                raise click.UsageError(f"expected name=value, got {pair!r}")
            try:
                overrides[key.strip()] = float(value)
            except ValueError as exc:
                raise click.UsageError(f"invalid tolerance value in {pair!r}") from exc
    try:
        req = VerifyRequest(
            n_max=n_max,
            z=z,
            tolerance_overrides=overrides,
            include_marginals=not skip_marginals,
            include_extrema=not skip_extrema,
        )
        resp = handlers.handle_verify(req)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    reports = [
        VerificationReport(
            name=c.name, target=c.target, computed=c.computed, tolerance=c.tolerance,
            flagged=c.flagged, note=c.note, imag_residue=c.imag_residue,
        )
        for c in resp.checks
    ]
    for line in render_report_lines(reports):
        click.echo(line)
    click.echo(
        f"{resp.n_passed} passed, {resp.n_failed} failed, "
        f"{resp.n_flagged} flagged (expected divergences)"
    )
    if out:
        write_reports(reports, resp.exit_status, out, fmt=fmt, reproducible=reproducible)
        click.echo(f"wrote {out}")
    if resp.exit_status:
        sys.exit(1)


def _grid1d_request(input_path, qmin, qmax, pmin, pmax, n_q, n_p) -> Grid1DRequest:
    psi = TabulatedWavefunction1D.from_csv(input_path)
    if qmin is None:
        qmin = float(psi.q[0])
    if qmax is None:
        qmax = float(psi.q[-1])
    state = TabulatedState(
        q=psi.q.tolist(), re=psi.values.real.tolist(), im=psi.values.imag.tolist()
    )
    return Grid1DRequest(
        state=state, q_min=qmin, q_max=qmax, p_min=pmin, p_max=pmax, n_q=n_q, n_p=n_p
    )


def _grid1d_options(fn):
    fn = click.option("--reproducible", is_flag=True)(fn)
    fn = click.option("--format", "fmt", type=_FORMATS, default="csv", show_default=True)(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), required=True)(fn)
    fn = click.option("--np", "n_p", type=int, default=128, show_default=True)(fn)
    fn = click.option("--nq", "n_q", type=int, default=128, show_default=True)(fn)
    fn = click.option("--pmax", type=float, required=True)(fn)
    fn = click.option("--pmin", type=float, required=True)(fn)
    fn = click.option("--qmax", type=float, default=None, help="default: table upper end")(fn)
    fn = click.option("--qmin", type=float, default=None, help="default: table lower end")(fn)
    fn = click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), required=True,
                      help="CSV with columns q,re,im ('#' comments allowed)")(fn)
    return fn


@main.command()
@_grid1d_options
def kr1d(input_path, qmin, qmax, pmin, pmax, n_q, n_p, out, fmt, reproducible):
    """Kirkwood-Rihaczek distribution of a tabulated 1-D wavefunction."""
    try:
        req = _grid1d_request(input_path, qmin, qmax, pmin, pmax, n_q, n_p)
        resp = handlers.handle_kr1d(req)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    doc = GridDocument(
        kind="kr1d",
        metadata=resp.metadata,
        axes=(("q", np.asarray(resp.q)), ("p", np.asarray(resp.p))),
        columns={name: np.asarray(col) for name, col in resp.columns.items()},
    )
    _write_document(doc, out, fmt, reproducible)


@main.command()
@_grid1d_options
def wigner1d(input_path, qmin, qmax, pmin, pmax, n_q, n_p, out, fmt, reproducible):
    """Wigner distribution of a tabulated 1-D wavefunction."""
    try:
        req = _grid1d_request(input_path, qmin, qmax, pmin, pmax, n_q, n_p)
        resp = handlers.handle_wigner1d(req)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    doc = GridDocument(
        kind="wigner1d",
        metadata=resp.metadata,
        axes=(("q", np.asarray(resp.q)), ("p", np.asarray(resp.p))),
        columns={name: np.asarray(col) for name, col in resp.columns.items()},
    )
    _write_document(doc, out, fmt, reproducible)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("krphase.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
