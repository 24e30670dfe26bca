"""Unit-normalized hydrogen bound-state wavefunctions.

Position representation (atomic units, lengths in Bohr radii):

    R_nl(r) = sqrt[(2z/n)^3 (n-l-1)! / (2n (n+l)!)]
              * exp(-z r / n) * (2 z r / n)^l * L_{n-l-1}^{2l+1}(2 z r / n)

Momentum representation (Fock's Gegenbauer form, z = 1):

    F_nl(p) = sqrt[(2/pi) (n-l-1)!/(n+l)!] * n^2 * 2^{2(l+1)} * l!
              * (n p)^l / (n^2 p^2 + 1)^{l+2}
              * C_{n-l-1}^{l+1}((n^2 p^2 - 1)/(n^2 p^2 + 1))

general nuclear charge enters through the scaling F^z(p) = z^{-3/2} F(p/z).
Both satisfy the unit radial norms  int R^2 r^2 dr = int F^2 p^2 dp = 1,
and the full states are psi = R_nl Y_lm and psi~ = F_nl Y_lm.

Normalization prefactors are assembled in log space; all of them are
positive, which fixes R_nl(0+) > 0 for s states (so R_10(r) = +2 exp(-r)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .special_functions import gegenbauer, laguerre, log_factorial, spherical_harmonic

__all__ = [
    "QuantumNumbers",
    "radial_position",
    "radial_momentum",
    "radial_momentum_variant",
    "psi_position",
    "psi_momentum",
]


@dataclass(frozen=True)
class QuantumNumbers:
    """Validated (n, l, m) triple identifying a bound state."""

    n: int
    l: int
    m: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"principal quantum number must be >= 1, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise ValueError(f"orbital quantum number must satisfy 0 <= l <= n-1, got l={self.l} n={self.n}")
        if abs(self.m) > self.l:
            raise ValueError(f"magnetic quantum number must satisfy |m| <= l, got m={self.m} l={self.l}")

    @property
    def label(self) -> str:
        return f"n={self.n} l={self.l} m={self.m}"


def _check_charge(z: float) -> float:
    z = float(z)
    if z <= 0:
        raise ValueError(f"nuclear charge must be positive, got {z}")
    return z


def radial_position(qn: QuantumNumbers, z: float, r):
    """Radial position-space wavefunction R_nl(r); r in Bohr radii, r >= 0."""
    z = _check_charge(z)
    ra = np.asarray(r, dtype=float)
    scalar = ra.ndim == 0
    if np.any(ra < 0):
        raise ValueError("radius must be non-negative")
    n, l = qn.n, qn.l
    rho = 2.0 * z * ra / n
    lognorm = 0.5 * (
        3.0 * math.log(2.0 * z / n)
        + log_factorial(n - l - 1)
        - math.log(2.0 * n)
        - log_factorial(n + l)
    )
    # exponent assembled in log space so rho^l can never overflow against
    # the decaying exponential; fully underflowed tails are exactly 0
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        logr = np.where(rho > 0, np.log(np.where(rho > 0, rho, 1.0)), -np.inf)
        exponent = lognorm - rho / 2.0 + l * logr if l > 0 else lognorm - rho / 2.0
        alive = exponent > -745.0
        poly = laguerre(n - l - 1, 2 * l + 1, rho)
        out = np.where(alive, np.exp(np.where(alive, exponent, 0.0)) * np.where(alive, poly, 0.0), 0.0)
    return float(out) if scalar else out


def radial_momentum(qn: QuantumNumbers, z: float, p):
    """Radial momentum-space wavefunction F_nl(p); p in atomic units, p >= 0."""
    z = _check_charge(z)
    pa = np.asarray(p, dtype=float)
    scalar = pa.ndim == 0
    if np.any(pa < 0):
        raise ValueError("momentum must be non-negative")
    n, l = qn.n, qn.l
    ps = pa / z  # charge scaling: F^z(p) = z^{-3/2} F(p/z)
    np2 = (n * ps) ** 2
    arg = (np2 - 1.0) / (np2 + 1.0)
    logpref = (
        0.5 * (math.log(2.0 / math.pi) + log_factorial(n - l - 1) - log_factorial(n + l))
        + 2.0 * math.log(n)
        + 2.0 * (l + 1) * math.log(2.0)
        + log_factorial(l)
    )
    if l == 0:
        shape = np.exp(logpref - 2.0 * np.log1p(np2))
    else:
        # log-space ratio keeps (np)^l / (n^2 p^2 + 1)^{l+2} finite for any p
        with np.errstate(divide="ignore"):
            lognp = np.where(ps > 0, np.log(np.where(ps > 0, n * ps, 1.0)), -np.inf)
        shape = np.exp(logpref + l * lognp - (l + 2) * np.log1p(np2))
        shape = np.where(ps > 0, shape, 0.0)
    out = z**-1.5 * shape * gegenbauer(n - l - 1, l + 1, arg)
    return float(out) if scalar else out


def radial_momentum_variant(n: int, l: int, p):
    """Alternative closed forms for the n=2 momentum radial functions.

    These carry a squared rather than cubed denominator.  They are *not*
    unit-normalized (their radial norms are 16 and 16/3) and they disagree
    with the Fourier transform of the position-space functions; the
    verification suite evaluates them on purpose to quantify exactly that.
    """
    pa = np.asarray(p, dtype=float)
    scalar = pa.ndim == 0
    if (n, l) == (2, 0):
        out = 32.0 / math.sqrt(math.pi) * (4.0 * pa**2 - 1.0) / (1.0 + 4.0 * pa**2) ** 2
    elif (n, l) == (2, 1):
        out = 128.0 / math.sqrt(3.0 * math.pi) * pa / (1.0 + 4.0 * pa**2) ** 2
    else:
        raise ValueError(f"variant forms exist only for (n,l) in {{(2,0), (2,1)}}, got ({n},{l})")
    return float(out) if scalar else out


def psi_position(qn: QuantumNumbers, z: float, r, theta, phi):
    """Full position-space state psi_nlm = R_nl(r) Y_lm(theta, phi)."""
    return radial_position(qn, z, r) * spherical_harmonic(qn.l, qn.m, theta, phi)


def psi_momentum(qn: QuantumNumbers, z: float, p, theta, phi):
    """Full momentum-space state psi~_nlm = F_nl(p) Y_lm(theta, phi)."""
    return radial_momentum(qn, z, p) * spherical_harmonic(qn.l, qn.m, theta, phi)
