"""Stable evaluation of the orthogonal polynomials and angular kernels.

Everything here is a pure function of its arguments and accepts scalars or
numpy arrays for the continuous variable.  The recurrences used are the
standard stable ones:

* associated Laguerre via the upward three-term recurrence,
* Gegenbauer (ultraspherical) via the upward three-term recurrence,
* associated Legendre seeded at P_m^m and recursed upward in degree,
* spherical Bessel j_l in closed form with a small-argument series fallback.

Factorial ratios are taken in log space so that large quantum numbers
(19! and friends) never overflow or lose precision.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "log_factorial",
    "laguerre",
    "gegenbauer",
    "legendre_assoc",
    "spherical_harmonic",
    "spherical_bessel",
]


def log_factorial(k: int) -> float:
    """Return ln(k!) for a non-negative integer k."""
    if k < 0 or k != int(k):
        raise ValueError(f"factorial argument must be a non-negative integer, got {k}")
    return math.lgamma(k + 1)


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def laguerre(k: int, alpha: float, x):
    """Associated Laguerre polynomial L_k^alpha(x), modern convention.

    Upward recurrence:
        L_0 = 1
        L_1 = 1 + alpha - x
        (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
    """
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    if alpha <= -1:
        raise ValueError(f"order must exceed -1, got {alpha}")
    xa, scalar = _as_array(x)
    prev = np.ones_like(xa)
    if k == 0:
        return float(prev) if scalar else prev
    cur = 1.0 + alpha - xa
    for j in range(1, k):
        prev, cur = cur, ((2 * j + 1 + alpha - xa) * cur - (j + alpha) * prev) / (j + 1)
    return float(cur) if scalar else cur


def gegenbauer(k: int, alpha: float, x):
    """Gegenbauer polynomial C_k^alpha(x) for alpha > 0 and |x| <= 1.

    Upward recurrence:
        C_0 = 1
        C_1 = 2 alpha x
        k C_k = 2 (k+alpha-1) x C_{k-1} - (k+2 alpha-2) C_{k-2}
    """
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    if alpha <= 0:
        raise ValueError(f"order must be positive, got {alpha}")
    xa, scalar = _as_array(x)
    if np.any(np.abs(xa) > 1 + 1e-12):
        raise ValueError("argument must lie in [-1, 1]")
    prev = np.ones_like(xa)
    if k == 0:
        return float(prev) if scalar else prev
    cur = 2.0 * alpha * xa
    for j in range(2, k + 1):
        prev, cur = cur, (2 * (j + alpha - 1) * xa * cur - (j + 2 * alpha - 2) * prev) / j
    return float(cur) if scalar else cur


def legendre_assoc(l: int, m: int, x):
    """Associated Legendre P_l^m(x) for 0 <= m <= l, Condon-Shortley phase.

    Seeded at P_m^m(x) = (-1)^m (2m-1)!! (1-x^2)^{m/2} and recursed upward:
        (l-m) P_l^m = (2l-1) x P_{l-1}^m - (l+m-1) P_{l-2}^m
    Stable for the degrees used here (l up to a few tens).
    """
    if l < 0 or m < 0 or m > l:
        raise ValueError(f"need 0 <= m <= l, got l={l} m={m}")
    xa, scalar = _as_array(x)
    somx2 = np.sqrt(np.clip(1.0 - xa * xa, 0.0, None))
    pmm = np.ones_like(xa)
    if m > 0:
        fact = 1.0
        for _ in range(m):
            pmm *= -fact * somx2
            fact += 2.0
    if l == m:
        return float(pmm) if scalar else pmm
    pmmp1 = xa * (2 * m + 1) * pmm
    if l == m + 1:
        return float(pmmp1) if scalar else pmmp1
    for ll in range(m + 2, l + 1):
        pmm, pmmp1 = pmmp1, (xa * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m)
    return float(pmmp1) if scalar else pmmp1


def spherical_harmonic(l: int, m: int, theta, phi):
    """Complex spherical harmonic Y_lm(theta, phi), Condon-Shortley phase.

    Normalized so that the squared modulus integrates to 1 over the sphere;
    negative orders follow Y_{l,-m} = (-1)^m conj(Y_{lm}).
    """
    if l < 0 or abs(m) > l:
        raise ValueError(f"need |m| <= l and l >= 0, got l={l} m={m}")
    ma = abs(m)
    th, scalar_t = _as_array(theta)
    ph, scalar_p = _as_array(phi)
    # log-space normalization keeps (l-m)!/(l+m)! accurate at large l
    lognorm = 0.5 * (
        math.log(2 * l + 1)
        - math.log(4 * math.pi)
        + log_factorial(l - ma)
        - log_factorial(l + ma)
    )
    plm = legendre_assoc(l, ma, np.cos(th))
    y = math.exp(lognorm) * plm * np.exp(1j * ma * ph)
    if m < 0:
        y = (-1) ** ma * np.conj(y)
    return complex(y) if (scalar_t and scalar_p) else y


# (2l+1)!! for l = 0..3, used by the series branch below
_DOUBLE_FACTORIAL_ODD = (1.0, 3.0, 15.0, 105.0)


def spherical_bessel(l: int, x):
    """Spherical Bessel function j_l(x) for 0 <= l <= 3 and x >= 0.

    Closed forms in sin/cos, switched to the ascending series below x = 0.5
    where the l = 2, 3 closed forms lose ~10 digits to cancellation.  Higher
    orders are deliberately unsupported; the Fourier-consistency oracle
    never needs them.
    """
    if l not in (0, 1, 2, 3):
        raise ValueError(f"order must be one of 0..3, got {l}")
    xa, scalar = _as_array(x)
    if np.any(xa < 0):
        raise ValueError("argument must be non-negative")

    small = xa < 0.5
    xs = np.where(small, xa, 1.0)  # placeholder avoids 0-division in closed form
    xl = np.where(small, 1.0, xa)

    # ascending series: j_l(x) = x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    x2 = xs * xs
    term = np.ones_like(xs)
    series = np.ones_like(xs)
    for k in range(1, 12):
        term = term * (-x2 / 2.0) / (k * (2 * l + 2 * k + 1))
        series = series + term
    series = series * xs**l / _DOUBLE_FACTORIAL_ODD[l]

    s, c = np.sin(xl), np.cos(xl)
    if l == 0:
        closed = s / xl
    elif l == 1:
        closed = s / xl**2 - c / xl
    elif l == 2:
        closed = (3.0 / xl**3 - 1.0 / xl) * s - 3.0 * c / xl**2
    else:
        closed = (15.0 / xl**4 - 6.0 / xl**2) * s - (15.0 / xl**3 - 1.0 / xl) * c

    out = np.where(small, series, closed)
    return float(out) if scalar else out
