"""Gauss-Legendre quadrature rules and domain mappings.

The base rule is built by Newton iteration on the Legendre polynomial, so
the verification oracles that consume these rules share no code with the
special-function evaluators they are checking.

Semi-infinite integrals are handled by mapping the unit interval:

* ``rational``:  r = scale * t / (1 - t)     (algebraic tails)
* ``tangent``:   r = scale * tan(pi t / 2)   (alternative stretch)

plus plain affine mapping for finite intervals and a composite helper that
chains finite panels; the panel density is what lets oscillatory radial
integrands (phase ~ freq * r) converge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "QuadratureRule",
    "gauss_legendre",
    "finite_interval",
    "semi_infinite_rational",
    "semi_infinite_tangent",
    "composite_finite",
    "uniform_periodic",
    "oscillatory_semi_infinite",
]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights together with the mapping that produced them."""

    nodes: np.ndarray
    weights: np.ndarray
    mapping: str

    def __post_init__(self):
        if self.nodes.shape != self.weights.shape:
            raise ValueError("nodes and weights must have equal length")
        if np.any(self.weights <= 0):
            raise ValueError("weights must be positive")

    def integrate(self, f) -> float | complex:
        return np.sum(self.weights * f(self.nodes))


@lru_cache(maxsize=64)
def _legendre_nodes_weights(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    k = np.arange(order)
    # Chebyshev-like initial guess, then Newton on P_n evaluated by recurrence
    x = np.cos(np.pi * (k + 0.75) / (order + 0.5))
    def legendre_pair(xv):
        p0 = np.ones_like(xv)
        p1 = xv.copy()
        for j in range(2, order + 1):
            p0, p1 = p1, ((2 * j - 1) * xv * p1 - (j - 1) * p0) / j
        return p1, p0

    for _ in range(100):
        pn, pprev = legendre_pair(x)
        dpn = order * (x * pn - pprev) / (x * x - 1.0)
        dx = pn / dpn
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    # one clean evaluation at the converged nodes for the weights
    pn, pprev = legendre_pair(x)
    dpn = order * (x * pn - pprev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dpn * dpn)
    idx = np.argsort(x)
    x, w = x[idx], w[idx]
    # enforce exact symmetry about 0
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_legendre(order: int) -> QuadratureRule:
    """Gauss-Legendre rule of the given order on [-1, 1]."""
    x, w = _legendre_nodes_weights(order)
    return QuadratureRule(nodes=x.copy(), weights=w.copy(), mapping="legendre[-1,1]")


def finite_interval(order: int, a: float, b: float) -> QuadratureRule:
    """Gauss-Legendre rule affinely mapped onto [a, b]."""
    if not b > a:
        raise ValueError(f"need b > a, got [{a}, {b}]")
    x, w = _legendre_nodes_weights(order)
    return QuadratureRule(
        nodes=0.5 * (b - a) * x + 0.5 * (a + b),
        weights=0.5 * (b - a) * w,
        mapping=f"finite[{a},{b}]",
    )


def semi_infinite_rational(order: int, scale: float = 1.0) -> QuadratureRule:
    """Rule for integrals over [0, inf) via r = scale * t/(1-t), t in (0, 1)."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    x, w = _legendre_nodes_weights(order)
    t = 0.5 * (x + 1.0)
    wt = 0.5 * w
    return QuadratureRule(
        nodes=scale * t / (1.0 - t),
        weights=scale * wt / (1.0 - t) ** 2,
        mapping=f"rational[0,inf) scale={scale}",
    )


def semi_infinite_tangent(order: int, scale: float = 1.0) -> QuadratureRule:
    """Rule for integrals over [0, inf) via r = scale * tan(pi t / 2)."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    x, w = _legendre_nodes_weights(order)
    t = 0.5 * (x + 1.0)
    wt = 0.5 * w
    half_pi_t = 0.5 * np.pi * t
    return QuadratureRule(
        nodes=scale * np.tan(half_pi_t),
        weights=scale * wt * 0.5 * np.pi / np.cos(half_pi_t) ** 2,
        mapping=f"tangent[0,inf) scale={scale}",
    )


def composite_finite(order: int, edges) -> QuadratureRule:
    """Chain Gauss-Legendre panels of the given order over consecutive edges."""
    edges = np.asarray(edges, dtype=float)
    if edges.ndim != 1 or len(edges) < 2 or np.any(np.diff(edges) <= 0):
        raise ValueError("edges must be strictly increasing with >= 2 entries")
    x, w = _legendre_nodes_weights(order)
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        nodes.append(0.5 * (b - a) * x + 0.5 * (a + b))
        weights.append(0.5 * (b - a) * w)
    return QuadratureRule(
        nodes=np.concatenate(nodes),
        weights=np.concatenate(weights),
        mapping=f"composite[{edges[0]},{edges[-1]}] panels={len(edges) - 1}",
    )


def uniform_periodic(count: int, period: float = 2.0 * np.pi) -> QuadratureRule:
    """Uniform rule on [0, period), spectrally accurate for periodic integrands."""
    if count < 1:
        raise ValueError("count must be >= 1")
    h = period / count
    return QuadratureRule(
        nodes=h * np.arange(count),
        weights=np.full(count, h),
        mapping=f"uniform[0,{period}) periodic",
    )


def oscillatory_semi_infinite(
    cutoff: float,
    frequency: float,
    intrinsic_scale: float | None = None,
    order: int = 16,
    cycles_per_panel: float = 3.0,
) -> QuadratureRule:
    """Composite rule on [0, cutoff] for integrands with two length scales.

    Panels grow geometrically from ``intrinsic_scale / 4`` near the origin
    (resolving the integrand's own structure) and are capped so that no
    panel holds more than ``cycles_per_panel`` oscillations of a phase
    ~ frequency * r; each panel carries a Gauss-Legendre rule.
    """
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    osc_width = np.inf if frequency <= 0 else 2.0 * np.pi * cycles_per_panel / frequency
    scale = intrinsic_scale if intrinsic_scale and intrinsic_scale > 0 else cutoff / 8.0
    edges = [0.0]
    width = scale / 4.0
    while edges[-1] < cutoff:
        edges.append(min(edges[-1] + min(width, osc_width), cutoff))
        width *= 1.7
    if len(edges) > 2 and edges[-1] - edges[-2] < 1e-9 * cutoff:
        edges.pop(-2)
    return composite_finite(order, edges)
