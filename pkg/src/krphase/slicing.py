"""Cross-section sampling of the distribution and extrema detection.

A slice fixes the four angles and sweeps the (r, p) quadrant on a regular
grid.  The absolute value of the distribution factorizes into a product of
one radial profile in r and one in p, so its local maxima count the radial
nodes: a state with quantum numbers (n, l) shows exactly (n-l)^2 maxima,
boundary peaks at r=0 or p=0 included.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .hydrogen import QuantumNumbers
from .phase_space import Convention, kr_grid
from .special_functions import spherical_harmonic

__all__ = [
    "SliceSpec",
    "SliceResult",
    "ExtremumRecord",
    "QUANTITIES",
    "sample_slice",
    "find_extrema",
    "count_extrema_law",
    "default_angles",
    "default_ranges",
]

QUANTITIES = ("re", "im", "abs", "abs2")

DISPLAY_SCALE = (2.0 * math.pi) ** 3  # opt-in figure multiplier


def default_angles(qn: QuantumNumbers) -> tuple[float, float, float, float]:
    """Equatorial angles unless the state vanishes identically there.

    m=0 states with l>0 have Y_l0(pi/2) = 0 for odd l and a polar maximum,
    so those default to the polar axis instead.
    """
    if qn.m == 0 and qn.l > 0:
        return (0.0, 0.0, 0.0, 0.0)
    return (math.pi / 2.0, 0.0, math.pi / 2.0, 0.0)


def default_ranges(qn: QuantumNumbers, z: float = 1.0) -> tuple[float, float]:
    """(r_max, p_max) covering every density peak: r ~ n^2/z, p ~ z/n."""
    return 5.0 * qn.n**2 / z, 4.0 * z / qn.n


@dataclass(frozen=True)
class SliceSpec:
    """Everything needed to sample one (r, p) cross-section."""

    qn: QuantumNumbers
    z: float = 1.0
    angles: tuple[float, float, float, float] = (math.pi / 2.0, 0.0, math.pi / 2.0, 0.0)
    r_range: tuple[float, float] = (0.0, 5.0)
    p_range: tuple[float, float] = (0.0, 4.0)
    resolution: tuple[int, int] = (256, 256)
    quantity: str = "abs"
    convention: Convention = Convention.MARGINAL_EXACT
    display_scale: bool = False

    def __post_init__(self):
        if self.z <= 0:
            raise ValueError("nuclear charge must be positive")
        if len(self.angles) != 4:
            raise ValueError("angles must be (theta, phi, theta_p, phi_p)")
        r_min, r_max = self.r_range
        p_min, p_max = self.p_range
        if r_min < 0 or p_min < 0:
            raise ValueError("ranges must start at non-negative values")
        if not (r_max > r_min and p_max > p_min):
            raise ValueError("ranges must be non-empty")
        n_r, n_p = self.resolution
        if n_r < 2 or n_p < 2:
            raise ValueError("resolution must be at least 2x2")
        if self.quantity not in QUANTITIES:
            raise ValueError(f"quantity must be one of {QUANTITIES}, got {self.quantity!r}")
        if not isinstance(self.convention, Convention):
            object.__setattr__(self, "convention", Convention(self.convention))

    def metadata(self) -> dict:
        theta, phi, theta_p, phi_p = self.angles
        return {
            "tool": "krphase",
            "version": __version__,
            "state": self.qn.label,
            "z": self.z,
            "theta": theta,
            "phi": phi,
            "theta_p": theta_p,
            "phi_p": phi_p,
            "r_min": self.r_range[0],
            "r_max": self.r_range[1],
            "p_min": self.p_range[0],
            "p_max": self.p_range[1],
            "n_r": self.resolution[0],
            "n_p": self.resolution[1],
            "quantity": self.quantity,
            "convention": self.convention.value,
            "display_scale": DISPLAY_SCALE if self.display_scale else 1.0,
        }


@dataclass(frozen=True)
class SliceResult:
    """Row-major value grid (r varies along rows) plus provenance metadata."""

    spec: SliceSpec
    r: np.ndarray
    p: np.ndarray
    values: np.ndarray
    warnings: tuple[str, ...] = ()

    @property
    def metadata(self) -> dict:
        return self.spec.metadata()


@dataclass(frozen=True)
class ExtremumRecord:
    """One detected extremum of a sampled slice."""

    r: float
    p: float
    value: float
    kind: str = "maximum"
    boundary: bool = False


def sample_slice(spec: SliceSpec) -> SliceResult:
    """Evaluate the distribution on the grid and extract the quantity."""
    theta, phi, theta_p, phi_p = spec.angles
    warnings: list[str] = []
    for label, th, ph in (("position", theta, phi), ("momentum", theta_p, phi_p)):
        if abs(spherical_harmonic(spec.qn.l, spec.qn.m, th, ph)) < 1e-12:
            warnings.append(
                f"angular factor of the {label} side vanishes at the chosen angles; "
                "the slice is identically zero (try theta=theta_p=0 for m=0 states)"
            )
    r = np.linspace(spec.r_range[0], spec.r_range[1], spec.resolution[0])
    p = np.linspace(spec.p_range[0], spec.p_range[1], spec.resolution[1])
    grid = kr_grid(spec.qn, spec.z, r, p, spec.angles, spec.convention)
    if spec.quantity == "re":
        values = grid.real.copy()
    elif spec.quantity == "im":
        values = grid.imag.copy()
    elif spec.quantity == "abs":
        values = np.abs(grid)
    else:
        values = np.abs(grid) ** 2
    if spec.display_scale:
        scale = DISPLAY_SCALE if spec.quantity != "abs2" else DISPLAY_SCALE**2
        values = values * scale
    return SliceResult(spec=spec, r=r, p=p, values=values, warnings=tuple(warnings))


_NEIGHBOR_SHIFTS = tuple(
    (di, dj) for di in (-1, 0, 1) for dj in (-1, 0, 1) if (di, dj) != (0, 0)
)


def _parabolic_offset(f_minus: float, f_center: float, f_plus: float) -> tuple[float, float]:
    """Vertex offset (in cells) and value gain of the 3-point parabola."""
    denom = f_minus - 2.0 * f_center + f_plus
    if denom >= 0 or not np.isfinite(denom):
        return 0.0, 0.0
    delta = 0.5 * (f_minus - f_plus) / denom
    gain = -0.125 * (f_minus - f_plus) ** 2 / denom
    return float(np.clip(delta, -0.5, 0.5)), float(gain)


def find_extrema(result: SliceResult, refine: bool = True) -> list[ExtremumRecord]:
    """Local maxima of an absolute-value slice.

    Interior maxima must beat all eight neighbors strictly; cells on the
    r_min/p_min edges (truncated-quadrant boundaries, where genuine peaks
    of s states sit) compare against their existing neighbors only.  The
    far edges are excluded: anything there is an artifact of the finite
    window.  Locations are refined with one parabolic fit per axis.
    """
    if result.spec.quantity != "abs":
        raise ValueError(f"extrema detection requires an 'abs' slice, got {result.spec.quantity!r}")
    g = result.values
    n_r, n_p = g.shape
    padded = np.full((n_r + 2, n_p + 2), -np.inf)
    padded[1:-1, 1:-1] = g
    mask = np.ones_like(g, dtype=bool)
    for di, dj in _NEIGHBOR_SHIFTS:
        mask &= g > padded[1 + di : 1 + di + n_r, 1 + dj : 1 + dj + n_p]
    mask[-1, :] = False
    mask[:, -1] = False

    dr = result.r[1] - result.r[0]
    dp = result.p[1] - result.p[0]
    records = []
    for i, j in zip(*np.nonzero(mask)):
        r_loc, p_loc, value = result.r[i], result.p[j], g[i, j]
        if refine:
            if 0 < i < n_r - 1:
                delta, gain = _parabolic_offset(g[i - 1, j], g[i, j], g[i + 1, j])
                r_loc += delta * dr
                value += gain
            if 0 < j < n_p - 1:
                delta, gain = _parabolic_offset(g[i, j - 1], g[i, j], g[i, j + 1])
                p_loc += delta * dp
                value += gain
        records.append(
            ExtremumRecord(
                r=float(r_loc),
                p=float(p_loc),
                value=float(value),
                kind="maximum",
                boundary=bool(i == 0 or j == 0),
            )
        )
    records.sort(key=lambda rec: -rec.value)
    return records


def count_extrema_law(
    states,
    z: float = 1.0,
    resolution: int = 256,
    refine: bool = False,
) -> list[dict]:
    """Check #maxima == (n-l)^2 for each (n, l) state, m = l.

    The magnetic number is taken equal to l so the equatorial angles keep
    the angular factor bounded away from zero.
    """
    out = []
    for n, l in states:
        qn = QuantumNumbers(n=n, l=l, m=l)
        r_max, p_max = default_ranges(qn, z)
        spec = SliceSpec(
            qn=qn,
            z=z,
            angles=(math.pi / 2.0, 0.0, math.pi / 2.0, 0.0),
            r_range=(0.0, r_max),
            p_range=(0.0, p_max),
            resolution=(resolution, resolution),
            quantity="abs",
        )
        records = find_extrema(sample_slice(spec), refine=refine)
        expected = (n - l) ** 2
        out.append(
            {
                "state": qn.label,
                "expected": expected,
                "found": len(records),
                "passed": len(records) == expected,
                "maxima": [(rec.r, rec.p) for rec in records],
            }
        )
    return out
