"""One-dimensional phase-space evaluators for tabulated wavefunctions.

A state is a uniformly sampled complex amplitude table.  Transforms use the
non-unitary convention (hbar = 1)

    psi~(p) = sum_j psi(q_j) exp(-i p q_j) dq

so that the marginals read

    int K(q, p) dp = |psi(q)|^2
    int K(q, p) dq = |psi~(p)|^2 / (2 pi)

and the same pair holds for the Wigner evaluator below.  The file format
consumed by the CLI is plain comma-separated text with three columns
(q, re, im); lines starting with '#' are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "TabulatedWavefunction1D",
    "kr_1d",
    "kr_1d_grid",
    "wigner_1d",
    "wigner_1d_grid",
]

_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class TabulatedWavefunction1D:
    """Uniformly sampled complex amplitudes psi(q_j)."""

    q: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.q, dtype=float)
        v = np.asarray(self.values, dtype=complex)
        if q.ndim != 1 or len(q) < 2:
            raise ValueError("need at least two sample points")
        if v.shape != q.shape:
            raise ValueError("abscissas and values must have equal length")
        steps = np.diff(q)
        h = steps[0]
        if h <= 0 or np.any(np.abs(steps - h) > 1e-12 * max(abs(h), 1.0)):
            raise ValueError("abscissas must be uniformly spaced and increasing")
        if not np.all(np.isfinite(v.view(float))):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "values", v)

    @property
    def spacing(self) -> float:
        return float(self.q[1] - self.q[0])

    @property
    def norm(self) -> float:
        """Discrete norm sum |psi|^2 dq."""
        return float(np.sum(np.abs(self.values) ** 2) * self.spacing)

    def __contains__(self, q: float) -> bool:
        return self.q[0] <= q <= self.q[-1]

    def amplitude(self, q) -> np.ndarray | complex:
        """Linearly interpolated amplitude; zero outside the table."""
        qa = np.asarray(q, dtype=float)
        re = np.interp(qa, self.q, self.values.real, left=0.0, right=0.0)
        im = np.interp(qa, self.q, self.values.imag, left=0.0, right=0.0)
        out = re + 1j * im
        return complex(out) if qa.ndim == 0 else out

    def momentum_amplitude(self, p) -> np.ndarray | complex:
        """Non-unitary transform psi~(p) = sum_j psi(q_j) exp(-i p q_j) dq."""
        pa = np.asarray(p, dtype=float)
        out = (
            np.exp(-1j * np.multiply.outer(pa, self.q)) @ self.values
        ) * self.spacing
        return complex(out) if pa.ndim == 0 else out

    @classmethod
    def from_csv(cls, path) -> "TabulatedWavefunction1D":
        rows = []
        for line in Path(path).read_text().splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise ValueError(f"expected 'q,re,im' rows in {path}, got {line!r}")
            rows.append([float(x) for x in parts])
        data = np.asarray(rows, dtype=float)
        if data.size == 0:
            raise ValueError(f"no data rows in {path}")
        return cls(q=data[:, 0], values=data[:, 1] + 1j * data[:, 2])

    def to_csv(self, path) -> None:
        lines = ["# tabulated 1-D wavefunction: q, re, im"]
        for q, v in zip(self.q, self.values):
            lines.append(f"{q:.17g},{v.real:.17g},{v.imag:.17g}")
        Path(path).write_text("\n".join(lines) + "\n")


def _require_in_domain(psi: TabulatedWavefunction1D, q: float) -> None:
    if q not in psi:
        raise ValueError(
            f"q={q} lies outside the tabulated support [{psi.q[0]}, {psi.q[-1]}]"
        )


def kr_1d(psi: TabulatedWavefunction1D, q: float, p: float) -> complex:
    """Kirkwood-Rihaczek value (2 pi)^{-1} psi(q) exp(-i p q) conj(psi~(p))."""
    _require_in_domain(psi, q)
    return complex(
        psi.amplitude(q) * np.exp(-1j * p * q) * np.conj(psi.momentum_amplitude(p)) / _TWO_PI
    )


def kr_1d_grid(psi: TabulatedWavefunction1D, q, p) -> np.ndarray:
    """Vectorized kr_1d over the outer grid of q and p arrays."""
    qa = np.atleast_1d(np.asarray(q, dtype=float))
    pa = np.atleast_1d(np.asarray(p, dtype=float))
    for qv in (qa[0], qa[-1]):
        _require_in_domain(psi, qv)
    amp = psi.amplitude(qa)
    mom = np.conj(psi.momentum_amplitude(pa))
    phase = np.exp(-1j * np.outer(qa, pa))
    return amp[:, None] * phase * mom[None, :] / _TWO_PI


def _wigner_offsets(psi: TabulatedWavefunction1D) -> np.ndarray:
    span = psi.q[-1] - psi.q[0]
    h = psi.spacing
    k = int(np.floor(span / h))
    return h * np.arange(-k, k + 1)


def wigner_1d(psi: TabulatedWavefunction1D, q: float, p: float) -> float:
    """Wigner value (2 pi)^{-1} sum_xi psi*(q+xi/2) exp(i p xi) psi(q-xi/2) dxi.

    The amplitude is interpolated linearly at the half-offset points; the
    symmetric offset grid makes the imaginary residue cancel pairwise, and
    it is asserted below round-off scale before being dropped.
    """
    _require_in_domain(psi, q)
    xi = _wigner_offsets(psi)
    left = psi.amplitude(q + xi / 2.0)
    right = psi.amplitude(q - xi / 2.0)
    total = np.sum(np.conj(left) * np.exp(1j * p * xi) * right) * psi.spacing / _TWO_PI
    if abs(total.imag) > 1e-10:
        raise AssertionError(f"imaginary residue {total.imag:.3e} exceeds 1e-10")
    return float(total.real)


def wigner_1d_grid(psi: TabulatedWavefunction1D, q, p) -> np.ndarray:
    """Vectorized wigner_1d over the outer grid of q and p arrays."""
    qa = np.atleast_1d(np.asarray(q, dtype=float))
    pa = np.atleast_1d(np.asarray(p, dtype=float))
    for qv in (qa[0], qa[-1]):
        _require_in_domain(psi, qv)
    xi = _wigner_offsets(psi)
    phase = np.exp(1j * np.outer(pa, xi))  # (Np, Nxi)
    out = np.empty((len(qa), len(pa)))
    for i, qv in enumerate(qa):
        corr = np.conj(psi.amplitude(qv + xi / 2.0)) * psi.amplitude(qv - xi / 2.0)
        row = phase @ corr * psi.spacing / _TWO_PI
        if np.max(np.abs(row.imag)) > 1e-10:
            raise AssertionError("imaginary residue exceeds 1e-10")
        out[i] = row.real
    return out
