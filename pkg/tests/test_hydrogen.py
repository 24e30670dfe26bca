import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from krphase.hydrogen import (
    QuantumNumbers,
    psi_momentum,
    psi_position,
    radial_momentum,
    radial_momentum_variant,
    radial_position,
)
from krphase.quadrature import gauss_legendre, semi_infinite_rational, uniform_periodic


class TestQuantumNumbers:
    @pytest.mark.parametrize("n,l,m", [(0, 0, 0), (1, 1, 0), (2, 2, 0), (2, 1, 2), (3, -1, 0)])
    def test_invalid_triples(self, n, l, m):
        with pytest.raises(ValueError):
            QuantumNumbers(n, l, m)

    def test_label(self):
        assert QuantumNumbers(3, 2, -1).label == "n=3 l=2 m=-1"


class TestRadialPosition:
    def test_ground_state_closed_form(self):
        r = np.linspace(0.0, 12.0, 50)
        assert_allclose(radial_position(QuantumNumbers(1, 0, 0), 1.0, r), 2.0 * np.exp(-r), rtol=1e-13)
        assert_allclose(radial_position(QuantumNumbers(1, 0, 0), 1.0, 0.0), 2.0, rtol=1e-14)

    def test_2s_node(self):
        assert radial_position(QuantumNumbers(2, 0, 0), 1.0, 2.0) == 0.0

    def test_2p_value(self):
        # R_21(r) = r exp(-r/2) / (2 sqrt(6)); at r=2 this is exp(-1)/sqrt(6)
        assert_allclose(
            radial_position(QuantumNumbers(2, 1, 0), 1.0, 2.0), 0.15018615295504259, rtol=1e-12
        )

    def test_rejects_negative_radius(self):
        with pytest.raises(ValueError):
            radial_position(QuantumNumbers(1, 0, 0), 1.0, -0.1)

    def test_extreme_radii_underflow_to_zero(self):
        # far tails must underflow cleanly, never overflow to inf or NaN
        qn = QuantumNumbers(10, 9, 9)
        vals = radial_position(qn, 1.0, np.array([0.0, 1e6, 1e12, 1e300]))
        assert np.all(np.isfinite(vals))
        assert np.all(vals[1:] == 0.0)
        assert abs(radial_momentum(qn, 1.0, 1e12)) < 1e-100

    def test_rejects_bad_charge(self):
        with pytest.raises(ValueError):
            radial_position(QuantumNumbers(1, 0, 0), 0.0, 1.0)


class TestRadialMomentum:
    def test_ground_state_closed_form(self):
        p = np.linspace(0.0, 5.0, 40)
        expected = 4.0 * math.sqrt(2.0 / math.pi) / (1.0 + p**2) ** 2
        assert_allclose(radial_momentum(QuantumNumbers(1, 0, 0), 1.0, p), expected, rtol=1e-13)
        assert_allclose(radial_momentum(QuantumNumbers(1, 0, 0), 1.0, 0.0), 3.1915382432114616, rtol=1e-13)

    def test_2s_node(self):
        assert abs(radial_momentum(QuantumNumbers(2, 0, 0), 1.0, 0.5)) < 1e-15

    def test_2p_closed_form(self):
        p = np.linspace(0.0, 3.0, 31)
        expected = 128.0 / math.sqrt(3.0 * math.pi) * p / (1.0 + 4.0 * p**2) ** 3
        assert_allclose(radial_momentum(QuantumNumbers(2, 1, 0), 1.0, p), expected, rtol=1e-12)

    def test_variant_forms(self):
        p = 0.3
        assert_allclose(
            radial_momentum_variant(2, 0, p),
            32.0 / math.sqrt(math.pi) * (4 * p**2 - 1) / (1 + 4 * p**2) ** 2,
            rtol=1e-15,
        )
        with pytest.raises(ValueError):
            radial_momentum_variant(3, 0, p)


@pytest.mark.parametrize("z", [1.0, 2.0])
class TestNormalization:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_unit_norms(self, n, z):
        for l in range(n):
            qn = QuantumNumbers(n, l, 0)
            pos = semi_infinite_rational(96, scale=max(1.0, 1.5 * n * n / z))
            val = float(pos.integrate(lambda r: radial_position(qn, z, r) ** 2 * r**2))
            assert abs(val - 1.0) < 1e-8, ("position", n, l, z)
            mom = semi_infinite_rational(200, scale=2.0 * z / n)
            val = float(mom.integrate(lambda p: radial_momentum(qn, z, p) ** 2 * p**2))
            assert abs(val - 1.0) < 1e-8, ("momentum", n, l, z)


class TestNodeCounts:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_radial_zero_counts(self, n):
        for l in range(n):
            qn = QuantumNumbers(n, l, 0)
            r = np.geomspace(1e-3, 40.0 * n, 4000)
            signs = np.sign(radial_position(qn, 1.0, r))
            assert int(np.sum(signs[:-1] * signs[1:] < 0)) == n - l - 1, ("position", n, l)
            p = np.geomspace(1e-4, 20.0 / n, 4000)
            signs = np.sign(radial_momentum(qn, 1.0, p))
            assert int(np.sum(signs[:-1] * signs[1:] < 0)) == n - l - 1, ("momentum", n, l)


class TestChargeScaling:
    def test_position_scaling_law(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            n = int(rng.integers(1, 7))
            l = int(rng.integers(0, n))
            z = float(rng.uniform(0.5, 3.0))
            r = float(rng.uniform(0.01, 30.0))
            qn = QuantumNumbers(n, l, 0)
            assert_allclose(
                radial_position(qn, z, r),
                z**1.5 * radial_position(qn, 1.0, z * r),
                rtol=1e-12,
            )

    def test_momentum_scaling_law(self):
        rng = np.random.default_rng(43)
        for _ in range(50):
            n = int(rng.integers(1, 7))
            l = int(rng.integers(0, n))
            z = float(rng.uniform(0.5, 3.0))
            p = float(rng.uniform(0.001, 3.0))
            qn = QuantumNumbers(n, l, 0)
            assert_allclose(
                radial_momentum(qn, z, p),
                z**-1.5 * radial_momentum(qn, 1.0, p / z),
                rtol=1e-12,
            )


class TestFullStates:
    def test_ground_state_origin(self):
        val = psi_position(QuantumNumbers(1, 0, 0), 1.0, 0.0, 0.9, 2.2)
        assert_allclose(val.real, 0.5641895835477563, rtol=1e-13)
        assert abs(val.imag) < 1e-16

    def test_2p_equatorial_zero(self):
        # cos(pi/2) rounds to ~6e-17, so "zero" means float-epsilon scale
        assert abs(psi_position(QuantumNumbers(2, 1, 0), 1.0, 1.0, math.pi / 2, 0.0)) < 1e-15

    def test_momentum_origin(self):
        val = psi_momentum(QuantumNumbers(1, 0, 0), 1.0, 0.0, 1.1, 0.4)
        assert_allclose(val.real, 0.9003163161571061, rtol=1e-13)

    def test_momentum_2p_equatorial_zero(self):
        assert abs(psi_momentum(QuantumNumbers(2, 1, 0), 1.0, 0.3, math.pi / 2, 0.0)) < 1e-15

    @pytest.mark.parametrize("n,l,m", [(1, 0, 0), (2, 1, 1), (3, 1, 0), (4, 3, -2)])
    def test_full_normalization(self, n, l, m):
        # product quadrature: radial x Gauss-Legendre(cos theta) x uniform phi
        qn = QuantumNumbers(n, l, m)
        radial = semi_infinite_rational(96, scale=max(1.0, 1.5 * n * n))
        u = gauss_legendre(2 * l + 8)
        phi = uniform_periodic(4 * l + 8)
        theta = np.arccos(u.nodes)
        radial_part = float(radial.integrate(lambda r: radial_position(qn, 1.0, r) ** 2 * r**2))
        ang = 0.0
        for th, wu in zip(theta, u.weights):
            vals = psi_position(qn, 1.0, 1.0, th, phi.nodes) / radial_position(qn, 1.0, 1.0)
            ang += wu * float(np.sum(np.abs(vals) ** 2 * phi.weights))
        assert abs(radial_part * ang - 1.0) < 1e-7

    def test_rydberg_position_peak(self):
        # grid-search oracle for the n=10, l=m=9 circular state
        qn = QuantumNumbers(10, 9, 9)
        r = np.linspace(1e-3, 250.0, 5000)
        dens = np.abs(psi_position(qn, 1.0, r, math.pi / 2, 0.0)) ** 2
        peak_r = r[np.argmax(dens)]
        assert abs(peak_r - 90.0) < 0.1  # |R| ~ r^9 exp(-r/10) peaks at r = 90
        direct = abs(psi_position(qn, 1.0, peak_r, math.pi / 2, 0.0)) ** 2
        assert_allclose(dens.max(), direct, rtol=1e-12)

    def test_rydberg_momentum_peak(self):
        qn = QuantumNumbers(10, 9, 9)
        p = np.linspace(1e-4, 1.0, 20000)
        dens = np.abs(psi_momentum(qn, 1.0, p, math.pi / 2, 0.0)) ** 2
        peak_p = p[np.argmax(dens)]
        assert abs(peak_p - 3.0 / math.sqrt(1300.0)) < 1e-3  # = 0.08320502943378437
