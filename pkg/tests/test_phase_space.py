import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from krphase.hydrogen import QuantumNumbers, psi_momentum, psi_position
from krphase.phase_space import (
    Convention,
    PhasePoint,
    cos_angle_between,
    kr_abs_squared,
    kr_closed_form,
    kr_grid,
    kr_hydrogen,
    momentum_fourier_phase,
)

ANGLES = st.floats(min_value=0.0, max_value=math.pi)
AZIMUTHS = st.floats(min_value=0.0, max_value=2 * math.pi - 1e-9)


def random_points(count, seed=0):
    rng = np.random.default_rng(seed)
    return [
        PhasePoint(
            r=float(rng.uniform(0.0, 8.0)),
            theta=float(rng.uniform(0.0, math.pi)),
            phi=float(rng.uniform(0.0, 2 * math.pi)),
            p=float(rng.uniform(0.0, 2.0)),
            theta_p=float(rng.uniform(0.0, math.pi)),
            phi_p=float(rng.uniform(0.0, 2 * math.pi)),
        )
        for _ in range(count)
    ]


class TestAngleKernel:
    def test_aligned(self):
        assert_allclose(cos_angle_between(0.7, 1.1, 0.7, 1.1), 1.0, rtol=1e-15)

    def test_equatorial_antipodal(self):
        assert_allclose(cos_angle_between(math.pi / 2, 0.0, math.pi / 2, math.pi), -1.0, rtol=1e-15)

    def test_pole_vs_equator(self):
        assert abs(cos_angle_between(0.0, 0.0, math.pi / 2, 0.0)) < 1e-15

    @settings(max_examples=200, deadline=None)
    @given(ANGLES, AZIMUTHS, ANGLES, AZIMUTHS)
    def test_bounded(self, theta, phi, theta_p, phi_p):
        val = float(cos_angle_between(theta, phi, theta_p, phi_p))
        assert -1.0 - 1e-12 <= val <= 1.0 + 1e-12


class TestPhasePoint:
    def test_rejects_negative_radius(self):
        with pytest.raises(ValueError):
            PhasePoint(r=-1.0, theta=0, phi=0, p=0, theta_p=0, phi_p=0)

    def test_rejects_polar_out_of_range(self):
        with pytest.raises(ValueError):
            PhasePoint(r=1.0, theta=3.5, phi=0, p=0, theta_p=0, phi_p=0)

    def test_wraps_azimuth(self):
        pt = PhasePoint(r=1.0, theta=0.3, phi=7.0, p=0.1, theta_p=0.2, phi_p=-1.0)
        assert 0.0 <= pt.phi < 2 * math.pi
        assert_allclose(pt.phi, 7.0 - 2 * math.pi, rtol=1e-12)
        assert_allclose(pt.phi_p, 2 * math.pi - 1.0, rtol=1e-12)


class TestDistribution:
    def test_origin_paper_figure(self):
        pt = PhasePoint(r=0.0, theta=math.pi / 2, phi=0, p=0.0, theta_p=math.pi / 2, phi_p=0)
        val = kr_hydrogen(QuantumNumbers(1, 0, 0), 1.0, pt, Convention.PAPER_FIGURE)
        assert_allclose(val.real, (2.0 * math.pi**3) ** -1.5, rtol=1e-13)
        assert val.imag == 0.0

    def test_origin_marginal_exact(self):
        pt = PhasePoint(r=0.0, theta=math.pi / 2, phi=0, p=0.0, theta_p=math.pi / 2, phi_p=0)
        val = kr_hydrogen(QuantumNumbers(1, 0, 0), 1.0, pt, Convention.MARGINAL_EXACT)
        assert_allclose(val.real, math.pi**-3, rtol=1e-13)

    def test_2p_equatorial_zero(self):
        pt = PhasePoint(r=1.3, theta=math.pi / 2, phi=0.2, p=0.4, theta_p=math.pi / 2, phi_p=1.0)
        assert abs(kr_hydrogen(QuantumNumbers(2, 1, 0), 1.0, pt)) < 1e-33

    def test_convention_ratio_everywhere(self):
        qn = QuantumNumbers(3, 1, -1)
        for pt in random_points(10, seed=3):
            me = kr_hydrogen(qn, 1.0, pt, Convention.MARGINAL_EXACT)
            pf = kr_hydrogen(qn, 1.0, pt, Convention.PAPER_FIGURE)
            if me != 0:
                assert_allclose(pf / me, (2 * math.pi) ** -1.5, rtol=1e-14)

    def test_abs_squared_matches_modulus(self):
        for qn in (QuantumNumbers(1, 0, 0), QuantumNumbers(3, 2, -2), QuantumNumbers(4, 1, 1)):
            for pt in random_points(8, seed=qn.n):
                direct = abs(kr_hydrogen(qn, 1.0, pt, Convention.PAPER_FIGURE)) ** 2
                shortcut = kr_abs_squared(qn, 1.0, pt, Convention.PAPER_FIGURE)
                assert_allclose(shortcut, direct, rtol=1e-13, atol=1e-300)

    def test_abs_squared_origin_value(self):
        pt = PhasePoint(r=0.0, theta=math.pi / 2, phi=0, p=0.0, theta_p=math.pi / 2, phi_p=0)
        val = kr_abs_squared(QuantumNumbers(1, 0, 0), 1.0, pt, Convention.PAPER_FIGURE)
        assert_allclose(val, (2.0 * math.pi**3) ** -3.0, rtol=1e-13)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(min_value=0.0, max_value=2 * math.pi))
    def test_joint_azimuth_shift_invariance(self, shift):
        qn = QuantumNumbers(3, 2, 1)
        base = PhasePoint(r=2.0, theta=0.8, phi=0.5, p=0.3, theta_p=1.9, phi_p=4.0)
        shifted = PhasePoint(
            r=2.0, theta=0.8, phi=0.5 + shift, p=0.3, theta_p=1.9, phi_p=4.0 + shift
        )
        assert_allclose(
            kr_abs_squared(qn, 1.0, shifted), kr_abs_squared(qn, 1.0, base), rtol=1e-12
        )

    def test_magnetic_sign_invariance(self):
        for pt in random_points(10, seed=11):
            plus = kr_abs_squared(QuantumNumbers(3, 2, 2), 1.0, pt)
            minus = kr_abs_squared(QuantumNumbers(3, 2, -2), 1.0, pt)
            assert_allclose(plus, minus, rtol=1e-13, atol=1e-300)

    def test_plane_wave_phase_structure(self):
        # fixed aligned angles make cos Theta = 1; Re K / |K| must be cos(r p)
        qn = QuantumNumbers(1, 0, 0)
        for r, p in [(0.5, 0.5), (2.0, 1.0), (3.3, 0.7), (5.0, 1.9)]:
            pt = PhasePoint(r=r, theta=math.pi / 2, phi=0, p=p, theta_p=math.pi / 2, phi_p=0)
            val = kr_hydrogen(qn, 1.0, pt)
            envelope = math.sqrt(kr_abs_squared(qn, 1.0, pt))
            assert_allclose(val.real / envelope, math.cos(r * p), atol=1e-10)
            assert_allclose(val.imag / envelope, -math.sin(r * p), atol=1e-10)

    def test_conjugate_reconstruction(self):
        # conj(K) equals the standard-ordering reconstruction from the parts
        for qn in (QuantumNumbers(2, 1, 1), QuantumNumbers(3, 2, 0)):
            for pt in random_points(6, seed=17 + qn.n):
                direct = np.conj(kr_hydrogen(qn, 1.0, pt))
                cos_big = float(cos_angle_between(pt.theta, pt.phi, pt.theta_p, pt.phi_p))
                rebuilt = (
                    (2 * math.pi) ** -1.5
                    * np.conj(psi_position(qn, 1.0, pt.r, pt.theta, pt.phi))
                    * np.exp(1j * pt.p * pt.r * cos_big)
                    * momentum_fourier_phase(qn.l)
                    * psi_momentum(qn, 1.0, pt.p, pt.theta_p, pt.phi_p)
                )
                assert_allclose(direct, rebuilt, rtol=1e-13, atol=1e-300)

    def test_grid_matches_pointwise(self):
        qn = QuantumNumbers(2, 1, 1)
        r = np.linspace(0.0, 8.0, 5)
        p = np.linspace(0.0, 1.5, 4)
        angles = (1.0, 0.3, 1.2, 5.5)
        grid = kr_grid(qn, 1.0, r, p, angles, Convention.PAPER_FIGURE)
        for i, rv in enumerate(r):
            for j, pv in enumerate(p):
                pt = PhasePoint(r=rv, theta=1.0, phi=0.3, p=pv, theta_p=1.2, phi_p=5.5)
                assert_allclose(
                    grid[i, j], kr_hydrogen(qn, 1.0, pt, Convention.PAPER_FIGURE),
                    rtol=1e-13, atol=1e-300,
                )


class TestClosedForms:
    def test_1s_constant_ratio(self):
        target = (2 * math.pi) ** 1.5
        for pt in random_points(20, seed=5):
            num = kr_hydrogen(QuantumNumbers(1, 0, 0), 1.0, pt, Convention.MARGINAL_EXACT)
            den = kr_closed_form("1s", pt)
            assert_allclose(num / den, target, rtol=1e-12)

    def test_2s_zero_sets(self):
        on_r_node = PhasePoint(r=2.0, theta=0.4, phi=0.1, p=0.3, theta_p=1.0, phi_p=0.2)
        on_p_node = PhasePoint(r=1.0, theta=0.4, phi=0.1, p=0.5, theta_p=1.0, phi_p=0.2)
        off = PhasePoint(r=1.0, theta=0.4, phi=0.1, p=0.3, theta_p=1.0, phi_p=0.2)
        assert kr_closed_form("2s", on_r_node) == 0
        assert kr_closed_form("2s", on_p_node) == 0
        assert kr_closed_form("2s", off) != 0
        # the general evaluator shares both nodal sets
        assert abs(kr_hydrogen(QuantumNumbers(2, 0, 0), 1.0, on_r_node)) < 1e-30
        assert abs(kr_hydrogen(QuantumNumbers(2, 0, 0), 1.0, on_p_node)) < 1e-30

    def test_2p_sign_flip_across_equator(self):
        above = PhasePoint(r=2.0, theta=1.2, phi=0.0, p=0.22, theta_p=0.4, phi_p=0.0)
        below = PhasePoint(r=2.0, theta=math.pi - 1.2, phi=0.0, p=0.22, theta_p=0.4, phi_p=0.0)
        cf_above = kr_closed_form("2p", above)
        cf_below = kr_closed_form("2p", below)
        assert cf_above.real * cf_below.real < 0
        kr_above = kr_hydrogen(QuantumNumbers(2, 1, 0), 1.0, above)
        kr_below = kr_hydrogen(QuantumNumbers(2, 1, 0), 1.0, below)
        assert kr_above.real * kr_below.real < 0
        # at p = 0 the plane-wave phase drops out and the flip is an exact negation
        above0 = PhasePoint(r=2.0, theta=1.2, phi=0.0, p=0.0, theta_p=0.4, phi_p=0.0)
        below0 = PhasePoint(r=2.0, theta=math.pi - 1.2, phi=0.0, p=0.0, theta_p=0.4, phi_p=0.0)
        assert_allclose(
            kr_hydrogen(QuantumNumbers(2, 1, 0), 1.0, above0),
            -kr_hydrogen(QuantumNumbers(2, 1, 0), 1.0, below0),
            rtol=1e-12,
        )

    def test_rejects_unknown_state(self):
        pt = PhasePoint(r=1, theta=0.3, phi=0, p=0.2, theta_p=0.3, phi_p=0)
        with pytest.raises(ValueError):
            kr_closed_form("3d", pt)
