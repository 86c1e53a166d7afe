import math

import mpmath as mp
import numpy as np
import pytest

from theta_shift.specfun.whittaker import (
    AccuracyWarning,
    WhittakerParams,
    whittaker_W,
    whittaker_W_grid,
    whittaker_l2_norm,
    whittaker_lower_bound_check,
    whittaker_norm_closed_form,
    whittaker_ode_residual_probe,
    whittaker_uniform_ratio,
    whittaker_uniform_ratio_grid,
)

mp.mp.dps = 25


class TestClosedForms:
    def test_exponential_reduction(self):
        for y in (0.3, 1.0, 5.0, 20.0):
            assert whittaker_W(WhittakerParams(0.0, 0.5, y)) == pytest.approx(
                math.exp(-y / 2), rel=1e-12)

    def test_residual_spectrum_shape(self):
        # W_{b+1/2, b}(y) = e^{-y/2} y^{b+1/2} at b = 1/4
        b = 0.25
        for y in (0.2, 1.7, 9.0):
            assert whittaker_W(WhittakerParams(b + 0.5, b, y)) == pytest.approx(
                math.exp(-y / 2) * y ** (b + 0.5), rel=1e-12)

    def test_against_reference_imaginary_parameter(self):
        for (eta, t, y) in [(1.25, 1.0, 0.4), (1.25, 2.0, 3.0), (-1.25, 2.0, 0.7),
                            (0.25, 5.0, 6.0), (2.25, 3.0, 1.0)]:
            got = whittaker_W(WhittakerParams(eta, 1j * t, y))
            ref = complex(mp.whitw(eta, 1j * t, y))
            assert abs(ref.imag) < 1e-20 * abs(ref)
            assert got == pytest.approx(ref.real, rel=5e-12)

    def test_against_reference_real_parameter(self):
        for (eta, mu, y) in [(2.25, 0.25, 0.9), (-2.25, 0.25, 2.0), (4.25, 0.25, 4.0)]:
            got = whittaker_W(WhittakerParams(eta, mu, y))
            ref = float(mp.whitw(eta, mu, y))
            assert got == pytest.approx(ref, rel=5e-12)


class TestDomain:
    def test_mixed_mu_rejected(self):
        with pytest.raises(ValueError):
            WhittakerParams(0.5, 0.3 + 0.4j, 1.0)

    def test_nonpositive_y_rejected(self):
        with pytest.raises(ValueError):
            WhittakerParams(0.5, 0.25, 0.0)

    def test_tiny_y_warns(self):
        with pytest.warns(AccuracyWarning):
            whittaker_W(WhittakerParams(0.0, 0.5, 1e-8))


class TestNormIdentity:
    @pytest.mark.parametrize("eta", [0.25, -0.25, 1.25, -1.25])
    @pytest.mark.parametrize("t", [1.0, 2.0, 5.0, 10.0])
    def test_quadrature_vs_closed_form(self, eta, t):
        q = whittaker_l2_norm(eta, t)
        cf = whittaker_norm_closed_form(eta, t)
        assert q == pytest.approx(cf, rel=1e-6)


class TestUniformRatio:
    def test_matches_scalar(self):
        r1 = whittaker_uniform_ratio(1.25, 2.0, 1.5)
        r2 = whittaker_uniform_ratio_grid(1.25, 2.0, [1.5])[0]
        assert r1 == pytest.approx(r2, rel=1e-9)

    def test_domain(self):
        with pytest.raises(ValueError):
            whittaker_uniform_ratio(1.25, 0.5, 0.3)   # t < 1
        with pytest.raises(ValueError):
            whittaker_uniform_ratio(1.25, 2.0, 3.5)   # y > 1.5 t

    def test_bounded_near_zero(self):
        # refinement grid toward y -> 0+ stays bounded
        t = 5.0
        ys = np.geomspace(1e-4, 0.5, 25) * t
        r = whittaker_uniform_ratio_grid(1.25, t, ys)
        assert np.all(np.isfinite(r))
        assert r.max() < 10.0

    def test_finite_sup_both_signs(self):
        for eta in (1.25, -1.25):
            sup = 0.0
            for t in (1.0, 2.0, 5.0, 10.0, 20.0, 40.0):
                ys = np.array([0.1, 0.5, 1.0, 1.4]) * t
                sup = max(sup, whittaker_uniform_ratio_grid(eta, t, ys).max())
            assert math.isfinite(sup)


class TestLowerBound:
    def test_strictly_positive(self):
        v = whittaker_lower_bound_check(1.25, 5.0, 1.0 / (8 * math.pi))
        assert v > 0

    def test_band_across_t(self):
        vals = [whittaker_lower_bound_check(1.25, t, 1.0 / (8 * math.pi))
                for t in (1.0, 3.0, 10.0, 30.0)]
        assert min(vals) > 0
        assert max(vals) / min(vals) < 10.0

    def test_monotone_in_alpha(self):
        # enlarging the domain (smaller alpha) never decreases the integral
        t = 4.0
        big = whittaker_lower_bound_check(1.25, t, 0.5 / (8 * math.pi))
        small = whittaker_lower_bound_check(1.25, t, 1.0 / (8 * math.pi))
        assert big >= small

    def test_alpha_domain(self):
        with pytest.raises(ValueError):
            whittaker_lower_bound_check(1.25, 2.0, 0.5)  # above 3/(8 pi)


class TestOdeConsistency:
    def test_local_reintegration_defect(self):
        worst = whittaker_ode_residual_probe(1.25, 2j, 0.5, 8.0, n_points=100, seed=1)
        assert worst <= 1e-6

    def test_real_output_on_grid(self):
        vals = whittaker_W_grid(1.25, 2j, np.linspace(0.5, 10.0, 40))
        assert vals.dtype == np.float64
        assert np.all(np.isfinite(vals))
