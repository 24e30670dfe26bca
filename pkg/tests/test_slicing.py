import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from krphase.hydrogen import QuantumNumbers
from krphase.phase_space import Convention
from krphase.slicing import (
    SliceSpec,
    count_extrema_law,
    default_angles,
    default_ranges,
    find_extrema,
    sample_slice,
)

EQUATOR = (math.pi / 2, 0.0, math.pi / 2, 0.0)
POLAR = (0.0, 0.0, 0.0, 0.0)


def make_spec(**kwargs):
    defaults = dict(
        qn=QuantumNumbers(1, 0, 0),
        angles=EQUATOR,
        r_range=(0.0, 5.0),
        p_range=(0.0, 4.0),
        resolution=(64, 64),
        quantity="abs",
    )
    defaults.update(kwargs)
    return SliceSpec(**defaults)


class TestSpecValidation:
    def test_rejects_bad_ranges(self):
        with pytest.raises(ValueError):
            make_spec(r_range=(2.0, 1.0))
        with pytest.raises(ValueError):
            make_spec(p_range=(-0.5, 1.0))

    def test_rejects_small_resolution(self):
        with pytest.raises(ValueError):
            make_spec(resolution=(1, 64))

    def test_rejects_unknown_quantity(self):
        with pytest.raises(ValueError):
            make_spec(quantity="phase")

    def test_defaults_adapt_to_state(self):
        assert default_angles(QuantumNumbers(2, 1, 0)) == POLAR
        assert default_angles(QuantumNumbers(2, 1, 1)) == EQUATOR
        r_max, p_max = default_ranges(QuantumNumbers(10, 9, 9))
        assert r_max == 500.0 and p_max == pytest.approx(0.4)


class TestSampling:
    def test_figure_corner_value(self):
        spec = make_spec(
            quantity="re", convention=Convention.PAPER_FIGURE, display_scale=True,
            resolution=(8, 8),
        )
        result = sample_slice(spec)
        # (2 pi)^3 (2 pi^3)^{-3/2} = (2/pi)^{3/2}
        assert_allclose(result.values[0, 0], 0.50794908747392835, rtol=1e-13)
        assert result.metadata["display_scale"] == pytest.approx((2 * math.pi) ** 3)

    def test_real_part_sign_tracks_cos_rp(self):
        # on the aligned-angle slice cos Theta = 1, so sign(Re K) = sign(cos(r p))
        spec = make_spec(quantity="re", resolution=(40, 40), r_range=(0.0, 6.0), p_range=(0.0, 2.0))
        result = sample_slice(spec)
        rp = np.outer(result.r, result.p)
        mask = np.abs(np.cos(rp)) > 0.05  # keep clear of the nodal curves r p = pi/2 + k pi
        assert np.all(np.sign(result.values[mask]) == np.sign(np.cos(rp[mask])))

    def test_zero_slice_warns(self):
        spec = make_spec(qn=QuantumNumbers(2, 1, 0), angles=EQUATOR)
        result = sample_slice(spec)
        assert len(result.warnings) == 2
        assert np.max(np.abs(result.values)) < 1e-30

    def test_abs_grids_non_negative(self):
        for quantity in ("abs", "abs2"):
            result = sample_slice(make_spec(qn=QuantumNumbers(3, 1, 1), quantity=quantity))
            assert np.all(result.values >= 0.0)

    def test_azimuth_shift_invariance(self):
        base = make_spec(qn=QuantumNumbers(3, 2, 2), angles=(1.1, 0.2, 0.9, 1.5))
        shifted = make_spec(qn=QuantumNumbers(3, 2, 2), angles=(1.1, 0.2 + 2.1, 0.9, 1.5 + 2.1))
        assert_allclose(sample_slice(base).values, sample_slice(shifted).values, rtol=1e-12)


class TestExtrema:
    def test_requires_abs_quantity(self):
        result = sample_slice(make_spec(quantity="re"))
        with pytest.raises(ValueError):
            find_extrema(result)

    def test_1s_single_corner_maximum(self):
        result = sample_slice(make_spec(resolution=(256, 256)))
        records = find_extrema(result)
        assert len(records) == 1
        assert records[0].boundary and records[0].r == 0.0 and records[0].p == 0.0

    def test_2s_structure(self):
        spec = make_spec(
            qn=QuantumNumbers(2, 0, 0), r_range=(0.0, 20.0), p_range=(0.0, 2.0),
            resolution=(256, 256),
        )
        records = find_extrema(sample_slice(spec))
        assert len(records) == 4
        # global maximum at the origin corner
        assert records[0].r == 0.0 and records[0].p == 0.0
        expected = {(0.0, 0.0), (0.0, 1 / math.sqrt(2)), (4.0, 0.0), (4.0, 1 / math.sqrt(2))}
        for rec in records:
            assert min(math.hypot(rec.r - er, rec.p - ep) for er, ep in expected) < 0.05

    def test_2p_maximum_location_refined(self):
        spec = make_spec(
            qn=QuantumNumbers(2, 1, 0), angles=POLAR, r_range=(0.0, 12.0),
            p_range=(0.0, 1.2), resolution=(512, 512),
        )
        records = find_extrema(sample_slice(spec), refine=True)
        assert len(records) == 1
        assert abs(records[0].r - 2.0) < 1e-3
        assert abs(records[0].p - math.sqrt(5.0) / 10.0) < 1e-3

    def test_refinement_beats_grid_snap(self):
        spec = make_spec(
            qn=QuantumNumbers(2, 1, 0), angles=POLAR, r_range=(0.0, 12.0),
            p_range=(0.0, 1.2), resolution=(128, 128),
        )
        result = sample_slice(spec)
        raw = find_extrema(result, refine=False)[0]
        refined = find_extrema(result, refine=True)[0]
        true_r, true_p = 2.0, math.sqrt(5.0) / 10.0
        assert math.hypot(refined.r - true_r, refined.p - true_p) < math.hypot(
            raw.r - true_r, raw.p - true_p
        )

    def test_resolution_doubling_stability(self):
        spec_c = make_spec(
            qn=QuantumNumbers(2, 0, 0), r_range=(0.0, 20.0), p_range=(0.0, 2.0),
            resolution=(128, 128),
        )
        spec_f = make_spec(
            qn=QuantumNumbers(2, 0, 0), r_range=(0.0, 20.0), p_range=(0.0, 2.0),
            resolution=(256, 256),
        )
        coarse = find_extrema(sample_slice(spec_c))
        fine = find_extrema(sample_slice(spec_f))
        assert len(coarse) == len(fine)
        cell = (20.0 / 127.0, 2.0 / 127.0)
        for rec_f in fine:
            nearest = min(coarse, key=lambda rec: math.hypot(rec.r - rec_f.r, rec.p - rec_f.p))
            assert abs(nearest.r - rec_f.r) < cell[0] and abs(nearest.p - rec_f.p) < cell[1]


class TestExtremaLaw:
    def test_full_state_list(self):
        states = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (10, 8), (10, 9)]
        for row in count_extrema_law(states):
            assert row["passed"], row

    def test_rydberg_counts_explicit(self):
        rows = {row["state"]: row for row in count_extrema_law([(10, 9), (10, 8)])}
        assert rows["n=10 l=9 m=9"]["found"] == 1
        assert rows["n=10 l=8 m=8"]["found"] == 4

    def test_law_invariant_under_charge(self):
        for row in count_extrema_law([(2, 1), (3, 1)], z=2.0):
            assert row["passed"], row
