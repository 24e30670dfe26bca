"""Independent numerical oracles for the analytic machinery.

Every check integrates something by quadrature and compares against a value
the analytic side predicts; none of them reuse the code path under test
beyond evaluating the wavefunctions pointwise.  Checks return reports
instead of raising: two families are *expected* to diverge (the
squared-denominator variant forms of the n=2 momentum functions), and those
are flagged rather than failed so the divergence stays visible.

Tolerances are artifact decisions tied to the default quadrature orders
below; no external reference prescribes them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .hydrogen import (
    QuantumNumbers,
    psi_momentum,
    psi_position,
    radial_momentum,
    radial_momentum_variant,
    radial_position,
)
from .phase_space import (
    Convention,
    PhasePoint,
    cos_angle_between,
    kr_hydrogen,
    momentum_fourier_phase,
)
from .quadrature import (
    gauss_legendre,
    oscillatory_semi_infinite,
    semi_infinite_rational,
    semi_infinite_tangent,
    uniform_periodic,
)
from .slicing import count_extrema_law
from .special_functions import spherical_bessel, spherical_harmonic

__all__ = [
    "VerificationReport",
    "DEFAULT_TOLERANCES",
    "check_rule_sanity",
    "check_normalization",
    "check_marginal_momentum",
    "check_marginal_position",
    "check_fourier_consistency",
    "check_closed_form",
    "check_extrema_law",
    "run_verify",
    "render_report_lines",
]

DEFAULT_TOLERANCES = {
    "rule_sanity": 1e-10,
    "normalization": 1e-8,
    "marginal": 1e-6,
    "fourier": 1e-6,
    "closed_form": 1e-12,  # relative, for the 1s ratio
    "extrema": 0.5,  # counts are integers; any mismatch fails
}

# default quadrature orders (measured to converge at n = 10)
POSITION_ORDER = 96
MOMENTUM_ORDER = 200


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check; pass iff |computed - target| <= tolerance."""

    name: str
    target: float
    computed: float
    tolerance: float
    flagged: bool = False
    note: str = ""
    imag_residue: float | None = None

    @property
    def error(self) -> float:
        return abs(self.computed - self.target)

    @property
    def passed(self) -> bool:
        ok = self.error <= self.tolerance
        if self.imag_residue is not None:
            ok = ok and self.imag_residue <= self.tolerance
        return ok


def render_report_lines(reports) -> list[str]:
    lines = []
    for rep in reports:
        status = "FLAG" if rep.flagged else ("PASS" if rep.passed else "FAIL")
        extra = f" note={rep.note}" if rep.note else ""
        residue = f" imag={rep.imag_residue:.3e}" if rep.imag_residue is not None else ""
        lines.append(
            f"[{status}] {rep.name}: computed={rep.computed:.12g} target={rep.target:.12g} "
            f"err={rep.error:.3e} tol={rep.tolerance:.1e}{residue}{extra}"
        )
    return lines


# ---------------------------------------------------------------------------
# rule sanity
# ---------------------------------------------------------------------------


def check_rule_sanity(tolerance: float = DEFAULT_TOLERANCES["rule_sanity"]) -> list[VerificationReport]:
    """Exercise every mapped rule family on integrals with known values."""
    reports = []

    rule = gauss_legendre(64)
    computed = float(rule.integrate(lambda x: ((x + 1.0) / 2.0) ** 5) * 0.5)
    reports.append(
        VerificationReport(
            name="rule-sanity/legendre-64/x^5 on [0,1]",
            target=1.0 / 6.0,
            computed=computed,
            tolerance=1e-15,
        )
    )

    for label, mapped in (
        ("rational", semi_infinite_rational(MOMENTUM_ORDER, scale=2.0)),
        ("tangent", semi_infinite_tangent(MOMENTUM_ORDER, scale=2.0)),
    ):
        worst = 0.0
        for k in range(9):
            val = float(mapped.integrate(lambda r, k=k: np.exp(-r) * r**k))
            worst = max(worst, abs(val - math.factorial(k)) / math.factorial(k))
        reports.append(
            VerificationReport(
                name=f"rule-sanity/{label}/exp(-r) r^k, k<=8 (max rel err)",
                target=0.0,
                computed=worst,
                tolerance=tolerance,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# normalization
# ---------------------------------------------------------------------------


def check_normalization(
    qn: QuantumNumbers,
    z: float = 1.0,
    which: str = "position",
    order: int | None = None,
    variant: bool = False,
    tolerance: float = DEFAULT_TOLERANCES["normalization"],
) -> VerificationReport:
    """Radial norm integral against the unit target."""
    if which == "position":
        rule = semi_infinite_rational(order or POSITION_ORDER, scale=max(1.0, 1.5 * qn.n**2 / z))
        computed = float(rule.integrate(lambda r: radial_position(qn, z, r) ** 2 * r**2))
        name = f"normalization/position {qn.label} z={z}"
        return VerificationReport(name=name, target=1.0, computed=computed, tolerance=tolerance)
    if which != "momentum":
        raise ValueError(f"which must be 'position' or 'momentum', got {which!r}")
    rule = semi_infinite_rational(order or MOMENTUM_ORDER, scale=2.0 * z / qn.n)
    if variant:
        computed = float(
            rule.integrate(lambda p: radial_momentum_variant(qn.n, qn.l, p) ** 2 * p**2)
        )
        return VerificationReport(
            name=f"normalization/momentum-variant n={qn.n} l={qn.l}",
            target=1.0,
            computed=computed,
            tolerance=tolerance,
            flagged=True,
            note="expected divergence: squared-denominator variant form",
        )
    computed = float(rule.integrate(lambda p: radial_momentum(qn, z, p) ** 2 * p**2))
    name = f"normalization/momentum {qn.label} z={z}"
    return VerificationReport(name=name, target=1.0, computed=computed, tolerance=tolerance)


# ---------------------------------------------------------------------------
# marginals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MarginalOrders:
    """Quadrature sizing for the 3-D marginal integrals.

    ``scale`` multiplies every resolution knob at once, which is what the
    convergence-doubling check varies.
    """

    panel_order: int = 16
    angular_base: int = 48
    scale: float = 1.0


def _angular_grids(bandwidth: float, orders: MarginalOrders):
    n_polar = int(orders.scale * (orders.angular_base + int(0.62 * bandwidth) + 16))
    n_azimuth = int(orders.scale * (orders.angular_base + int(0.70 * bandwidth) + 24))
    u_rule = gauss_legendre(max(8, n_polar))
    phi_rule = uniform_periodic(max(8, n_azimuth))
    return u_rule, phi_rule


def check_marginal_momentum(
    qn: QuantumNumbers,
    z: float = 1.0,
    x_point: tuple[float, float, float] = (1.0, 0.7, 0.3),
    orders: MarginalOrders = MarginalOrders(),
    tolerance: float = DEFAULT_TOLERANCES["marginal"],
) -> VerificationReport:
    """Integrate the distribution over all momenta; target |psi(x)|^2.

    Brute-force product grid: an oscillation-resolving composite radial
    rule times Gauss-Legendre in cos(theta') times uniform phi'.
    """
    r, theta, phi = x_point
    psi_x = psi_position(qn, z, r, theta, phi)
    target = abs(psi_x) ** 2

    p_cut = z * (40.0 + 80.0 / max(r * z, 0.4))
    p_rule = oscillatory_semi_infinite(
        p_cut,
        frequency=r,
        intrinsic_scale=z / (2.0 * qn.n * orders.scale),
        order=orders.panel_order,
        cycles_per_panel=3.0 / orders.scale,
    )
    u_rule, phi_rule = _angular_grids(p_cut * r, orders)

    theta_p = np.arccos(u_rule.nodes)[:, None]
    phi_p = phi_rule.nodes[None, :]
    y_conj = np.conj(spherical_harmonic(qn.l, qn.m, theta_p, phi_p))
    cos_big = cos_angle_between(theta, phi, theta_p, phi_p)
    ang_w = u_rule.weights[:, None] * phi_rule.weights[None, :]

    f_vals = radial_momentum(qn, z, p_rule.nodes) * p_rule.nodes**2 * p_rule.weights
    phase = np.exp(-1j * np.multiply.outer(p_rule.nodes * r, cos_big))
    angular = phase * (y_conj * ang_w)[None, :, :]
    total = (
        (2.0 * math.pi) ** -1.5
        * np.conj(momentum_fourier_phase(qn.l))
        * psi_x
        * np.sum(f_vals[:, None, None] * angular)
    )
    return VerificationReport(
        name=f"marginal/momentum {qn.label} z={z} at r={r} theta={theta} phi={phi}",
        target=float(target),
        computed=float(total.real),
        tolerance=tolerance,
        imag_residue=float(abs(total.imag)),
    )


def check_marginal_position(
    qn: QuantumNumbers,
    z: float = 1.0,
    p_point: tuple[float, float, float] = (0.5, 0.7, 0.3),
    orders: MarginalOrders = MarginalOrders(),
    tolerance: float = DEFAULT_TOLERANCES["marginal"],
) -> VerificationReport:
    """Integrate the distribution over all positions; target |psi~(p)|^2."""
    p, theta_p, phi_p = p_point
    psi_p = momentum_fourier_phase(qn.l) * psi_momentum(qn, z, p, theta_p, phi_p)
    target = abs(psi_p) ** 2

    r_cut = 45.0 * qn.n / z
    r_rule = oscillatory_semi_infinite(
        r_cut,
        frequency=p,
        intrinsic_scale=qn.n / (2.0 * z * orders.scale),
        order=orders.panel_order,
        cycles_per_panel=3.0 / orders.scale,
    )
    u_rule, phi_rule = _angular_grids(r_cut * p, orders)

    theta = np.arccos(u_rule.nodes)[:, None]
    phi = phi_rule.nodes[None, :]
    y_vals = spherical_harmonic(qn.l, qn.m, theta, phi)
    cos_big = cos_angle_between(theta, phi, theta_p, phi_p)
    ang_w = u_rule.weights[:, None] * phi_rule.weights[None, :]

    r_vals = radial_position(qn, z, r_rule.nodes) * r_rule.nodes**2 * r_rule.weights
    phase = np.exp(-1j * np.multiply.outer(r_rule.nodes * p, cos_big))
    angular = phase * (y_vals * ang_w)[None, :, :]
    total = (2.0 * math.pi) ** -1.5 * np.conj(psi_p) * np.sum(
        r_vals[:, None, None] * angular
    )
    return VerificationReport(
        name=f"marginal/position {qn.label} z={z} at p={p} theta_p={theta_p} phi_p={phi_p}",
        target=float(target),
        computed=float(total.real),
        tolerance=tolerance,
        imag_residue=float(abs(total.imag)),
    )


# ---------------------------------------------------------------------------
# Fourier consistency
# ---------------------------------------------------------------------------


def check_fourier_consistency(
    qn: QuantumNumbers,
    z: float = 1.0,
    p_samples=None,
    order: int = 24,
    variant: bool = False,
    tolerance: float = DEFAULT_TOLERANCES["fourier"],
) -> list[VerificationReport]:
    """Hankel-type transform of the position radial function vs momentum form.

    G(p) = sqrt(2/pi) * int_0^inf R_nl(r) j_l(p r) r^2 dr must satisfy
    |G(p)| = |F_nl(p)| (the overall (-i)^l phase is not compared).  With
    ``variant=True`` the comparison runs against the squared-denominator
    n=2 forms instead, where a divergence is the expected outcome.
    """
    if qn.l > 3:
        raise ValueError("the spherical Bessel oracle only supports l <= 3")
    if p_samples is None:
        p_samples = z * np.geomspace(0.15 / qn.n, 2.0 / qn.n, 5)
    reports = []
    r_cut = 45.0 * qn.n / z
    for p in np.atleast_1d(p_samples):
        rule = oscillatory_semi_infinite(
            r_cut, frequency=float(p), intrinsic_scale=qn.n / (2.0 * z), order=order
        )
        g_val = math.sqrt(2.0 / math.pi) * float(
            rule.integrate(
                lambda r: radial_position(qn, z, r) * spherical_bessel(qn.l, p * r) * r**2
            )
        )
        if variant:
            f_val = radial_momentum_variant(qn.n, qn.l, float(p))
            reports.append(
                VerificationReport(
                    name=f"fourier/variant n={qn.n} l={qn.l} p={float(p):.6g}",
                    target=abs(f_val),
                    computed=abs(g_val),
                    tolerance=tolerance,
                    flagged=True,
                    note="expected divergence: squared-denominator variant form",
                )
            )
        else:
            f_val = radial_momentum(qn, z, float(p))
            reports.append(
                VerificationReport(
                    name=f"fourier/{qn.label} z={z} p={float(p):.6g}",
                    target=abs(f_val),
                    computed=abs(g_val),
                    tolerance=tolerance,
                )
            )
    return reports


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def _ratio_points(rng, count: int):
    for _ in range(count):
        yield PhasePoint(
            r=float(rng.uniform(0.2, 6.0)),
            theta=float(rng.uniform(0.2, math.pi - 0.2)),
            phi=float(rng.uniform(0.0, 2.0 * math.pi)),
            p=float(rng.uniform(0.05, 1.5)),
            theta_p=float(rng.uniform(0.2, math.pi - 0.2)),
            phi_p=float(rng.uniform(0.0, 2.0 * math.pi)),
        )


def check_closed_form(
    tolerance: float = DEFAULT_TOLERANCES["closed_form"], samples: int = 20
) -> list[VerificationReport]:
    """Compare the general evaluator with the hard-coded low-state forms.

    The 1s ratio must be the constant (2 pi)^{3/2} everywhere.  For 2s and
    2p the ratio is constant in everything but p; the leftover p-dependence
    (one denominator power) and the transcription prefactors are reported
    as flagged, expected divergences.
    """
    from .phase_space import kr_closed_form

    reports = []
    rng = np.random.default_rng(20021216)

    ratios = []
    for point in _ratio_points(rng, samples):
        num = kr_hydrogen(QuantumNumbers(1, 0, 0), 1.0, point, Convention.MARGINAL_EXACT)
        den = kr_closed_form("1s", point)
        ratios.append(num / den)
    ratios = np.asarray(ratios)
    target = (2.0 * math.pi) ** 1.5
    worst_idx = int(np.argmax(np.abs(ratios - target)))
    reports.append(
        VerificationReport(
            name="closed-form/1s ratio vs marginal-exact",
            target=target,
            computed=float(ratios[worst_idx].real),
            tolerance=tolerance * target,
            imag_residue=float(np.max(np.abs(ratios.imag))),
            note="worst ratio over sampled phase-space points",
        )
    )

    for state, qn in (("2s", QuantumNumbers(2, 0, 0)), ("2p", QuantumNumbers(2, 1, 0))):
        # shape: at fixed p the ratio must not depend on the other five variables
        p_fixed = 0.35
        vals = []
        for point in _ratio_points(rng, samples):
            point = replace(point, p=p_fixed)
            num = kr_hydrogen(qn, 1.0, point, Convention.MARGINAL_EXACT)
            den = kr_closed_form(state, point)
            if abs(den) > 1e-300:
                vals.append(num / den)
        vals = np.asarray(vals)
        spread = float(np.max(np.abs(vals - vals[0])) / abs(vals[0]))
        reports.append(
            VerificationReport(
                name=f"closed-form/{state} shape constancy at fixed p",
                target=0.0,
                computed=spread,
                tolerance=tolerance,
            )
        )
        # prefactor/denominator-power transcription mismatch, kept visible
        point = PhasePoint(r=1.3, theta=0.9, phi=0.4, p=0.0, theta_p=1.1, phi_p=5.1)
        p1, p2 = 0.2, 0.8
        ratio = []
        for p_val in (p1, p2):
            pt = replace(point, p=p_val)
            ratio.append(
                kr_hydrogen(qn, 1.0, pt, Convention.MARGINAL_EXACT) / kr_closed_form(state, pt)
            )
        drift = abs(ratio[1] / ratio[0])
        expected_drift = (1.0 + 4.0 * p1**2) / (1.0 + 4.0 * p2**2)
        reports.append(
            VerificationReport(
                name=f"closed-form/{state} printed-prefactor consistency",
                target=1.0,
                computed=float(drift),
                tolerance=tolerance,
                flagged=True,
                note=(
                    "expected divergence: ratio drifts by one denominator power, "
                    f"measured {drift:.9g} vs (1+4p1^2)/(1+4p2^2) = {expected_drift:.9g}"
                ),
            )
        )
    return reports


# ---------------------------------------------------------------------------
# extrema law
# ---------------------------------------------------------------------------


def check_extrema_law(states, z: float = 1.0, resolution: int = 256) -> list[VerificationReport]:
    """Maxima counts of absolute-value slices against (n-l)^2."""
    reports = []
    for row in count_extrema_law(states, z=z, resolution=resolution):
        reports.append(
            VerificationReport(
                name=f"extrema/{row['state']} count",
                target=float(row["expected"]),
                computed=float(row["found"]),
                tolerance=DEFAULT_TOLERANCES["extrema"],
            )
        )
    return reports


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

_MARGINAL_RADII = (0.5, 1.0, 2.0)
_MARGINAL_MOMENTA = (0.25, 0.6, 1.2)
_TEST_ANGLES = (0.7, 0.3)


def run_verify(
    n_max: int = 3,
    z: float = 1.0,
    tolerance_overrides: dict | None = None,
    include_marginals: bool = True,
    include_extrema: bool = True,
) -> tuple[list[VerificationReport], int]:
    """Run the full verification suite; exit status 0 iff nothing unexpected failed."""
    if not 1 <= n_max <= 10:
        raise ValueError("n_max must lie in 1..10")
    tol = dict(DEFAULT_TOLERANCES)
    if tolerance_overrides:
        unknown = set(tolerance_overrides) - set(tol)
        if unknown:
            raise ValueError(f"unknown tolerance names: {sorted(unknown)}")
        tol.update(tolerance_overrides)

    reports: list[VerificationReport] = []
    reports.extend(check_rule_sanity(tol["rule_sanity"]))

    for n in range(1, n_max + 1):
        for l in range(n):
            qn = QuantumNumbers(n, l, 0)
            for zz in (z, 2.0 * z):
                reports.append(check_normalization(qn, zz, "position", tolerance=tol["normalization"]))
                reports.append(check_normalization(qn, zz, "momentum", tolerance=tol["normalization"]))
    if n_max >= 2:
        for l in (0, 1):
            reports.append(
                check_normalization(QuantumNumbers(2, l, 0), 1.0, "momentum", variant=True,
                                    tolerance=tol["normalization"])
            )

    if include_marginals:
        theta, phi = _TEST_ANGLES
        for n in range(1, min(n_max, 3) + 1):
            for l in range(n):
                for m in range(-l, l + 1):
                    qn = QuantumNumbers(n, l, m)
                    for r in _MARGINAL_RADII:
                        reports.append(
                            check_marginal_momentum(qn, z, (r, theta, phi), tolerance=tol["marginal"])
                        )
                    for p in _MARGINAL_MOMENTA:
                        reports.append(
                            check_marginal_position(
                                qn, z, (p * z / n, theta, phi), tolerance=tol["marginal"]
                            )
                        )

    for n in range(1, min(n_max, 4) + 1):
        for l in range(min(n, 4)):
            reports.extend(check_fourier_consistency(QuantumNumbers(n, l, 0), z, tolerance=tol["fourier"]))
    if n_max >= 2:
        for l in (0, 1):
            reports.extend(
                check_fourier_consistency(QuantumNumbers(2, l, 0), 1.0, variant=True, tolerance=tol["fourier"])
            )

    if n_max >= 2:
        reports.extend(check_closed_form(tol["closed_form"]))

    if include_extrema:
        states = [(n, l) for n in range(1, min(n_max, 3) + 1) for l in range(n)]
        if n_max >= 10:
            states.extend([(10, 8), (10, 9)])
        reports.extend(check_extrema_law(states, z=z))

    failed = [r for r in reports if not r.passed and not r.flagged]
    return reports, (1 if failed else 0)
