import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sp

from oracles import erfc_oracle, stirling_gamma
from scarpi_visco.errors import DomainError, NumericalFailure
from scarpi_visco.special import (
    gamma_fn,
    mittag_leffler,
    mittag_leffler_laplace,
    mittag_leffler_series,
)


def test_oracles_frozen():
    assert stirling_gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert erfc_oracle(1.0) == pytest.approx(0.15729920705028513, rel=1e-14)
    assert erfc_oracle(3.0) == pytest.approx(2.209049699858544e-05, rel=1e-12)


class TestGamma:
    def test_one(self):
        assert gamma_fn(1.0) == pytest.approx(1.0, rel=1e-15)

    def test_half_is_root_pi(self):
        assert gamma_fn(0.5) == pytest.approx(1.7724539, abs=1e-7)
        assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    def test_one_point_seven(self):
        assert gamma_fn(1.7) == pytest.approx(0.9086387, abs=1e-7)
        assert gamma_fn(1.7) == pytest.approx(stirling_gamma(1.7), rel=1e-12)

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_nonpositive_rejected(self, x):
        with pytest.raises(DomainError):
            gamma_fn(x)

    def test_vectorised(self):
        np.testing.assert_allclose(gamma_fn(np.array([1.0, 2.0, 5.0])), [1, 1, 24], rtol=1e-15)

    @settings(max_examples=200)
    @given(st.floats(1e-3, 50.0))
    def test_matches_stirling_oracle(self, x):
        assert gamma_fn(x) == pytest.approx(stirling_gamma(x), rel=1e-12)

    @given(st.floats(1e-6, 50.0))
    def test_matches_math_gamma(self, x):
        assert gamma_fn(x) == pytest.approx(math.gamma(x), rel=1e-12)


class TestMittagLeffler:
    def test_exp_case(self):
        assert mittag_leffler(1.0, -1.0) == pytest.approx(0.3678794, abs=1e-7)

    @pytest.mark.parametrize("beta", [0.1, 0.5, 0.9, 1.0])
    def test_zero_argument(self, beta):
        assert mittag_leffler(beta, 0.0) == 1.0

    def test_half_order_against_erfc(self):
        assert mittag_leffler(0.5, -1.0) == pytest.approx(math.e * erfc_oracle(1.0), abs=1e-8)
        assert mittag_leffler(0.5, -1.0) == pytest.approx(0.4275836, abs=1e-7)

    @pytest.mark.parametrize("x", [0.5, 2.0, 4.5, 6.0, 10.0, 20.0])
    def test_half_order_closed_form(self, x):
        # E_{1/2}(-x) = exp(x^2) erfc(x); use the scaled form to avoid overflow
        ref = math.exp(x * x) * erfc_oracle(x) if x < 20 else sp.erfcx(x)
        assert mittag_leffler(0.5, -x) == pytest.approx(ref, rel=1e-8)

    def test_exp_reduction(self):
        z = np.linspace(-10, 0, 201)
        assert np.max(np.abs(mittag_leffler(1.0, z) - np.exp(z))) <= 1e-10

    @pytest.mark.parametrize("beta", [0.25, 0.5, 0.75, 1.0])
    def test_positive_and_decreasing(self, beta):
        z = -np.arange(0, 41) * 0.5
        e = mittag_leffler(beta, z)
        assert np.all(e > 0) and np.all(e <= 1)
        assert np.all(np.diff(e) < 0)

    @pytest.mark.parametrize("beta", [0.75, 0.9, 1.0])
    @pytest.mark.parametrize("lam", [4.0, 4.5, 5.0, 5.5, 6.0])
    def test_series_inversion_overlap(self, beta, lam):
        series, _ = mittag_leffler_series(beta, -lam)
        inverted = mittag_leffler_laplace(beta, -lam)
        assert abs(series - inverted) <= 1e-7 * abs(inverted)

    def test_series_condition_grows_for_small_beta(self):
        # why the series is not trusted on its own at |z| ~ 5 for small beta
        _, cond = mittag_leffler_series(0.5, -5.0)
        assert cond > 1e8

    def test_series_overflow_is_reported(self):
        with pytest.raises(NumericalFailure, match="overflow"):
            mittag_leffler_series(0.05, -5.0)
        assert 0 < mittag_leffler(0.05, -5.0) < mittag_leffler(0.05, -4.0)

    @pytest.mark.parametrize("beta,z", [(0.0, -1.0), (1.5, -1.0), (0.5, 1.0), (0.5, math.nan)])
    def test_rejects(self, beta, z):
        with pytest.raises(DomainError):
            mittag_leffler(beta, z)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(0.05, 1.0), st.floats(0.0, 30.0), st.floats(0.01, 5.0))
    def test_monotone_in_modulus(self, beta, x, dx):
        assert mittag_leffler(beta, -(x + dx)) < mittag_leffler(beta, -x)
