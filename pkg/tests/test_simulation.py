import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from arscope.errors import DomainError, InputError, NumericalError
from arscope.model import ModelSpec
from arscope.simulation import (
    NoiseSpec,
    TimeSeries,
    difference,
    gaussian_white_noise,
    integrate,
    simulate_arima,
)

from conftest import random_stationary_phi

PAPER = ModelSpec(phi=(0.25, 0.5))


class TestWhiteNoise:
    def test_zero_sigma(self):
        np.testing.assert_array_equal(gaussian_white_noise(NoiseSpec(3, 5, 0.0)).values, np.zeros(5))

    def test_deterministic(self):
        a = gaussian_white_noise(NoiseSpec(11, 100))
        b = gaussian_white_noise(NoiseSpec(11, 100))
        assert a.values.tobytes() == b.values.tobytes()

    def test_seeds_differ(self):
        assert not np.array_equal(
            gaussian_white_noise(NoiseSpec(1, 10)).values, gaussian_white_noise(NoiseSpec(2, 10)).values
        )

    @pytest.mark.parametrize("seed", [0, 1, 2**63 + 5])
    def test_moments(self, seed):
        z = gaussian_white_noise(NoiseSpec(seed, 100_000)).values
        assert abs(z.mean()) <= 0.02
        assert abs(z.var() - 1) <= 0.05

    def test_sigma_scales(self):
        a = gaussian_white_noise(NoiseSpec(4, 50, 1.0)).values
        b = gaussian_white_noise(NoiseSpec(4, 50, 2.5)).values
        np.testing.assert_array_equal(b, a * 2.5)

    @pytest.mark.parametrize("kwargs", [dict(seed=-1, n=5), dict(seed=0, n=0), dict(seed=0, n=5, sigma=-1.0)])
    def test_bad_spec(self, kwargs):
        with pytest.raises(InputError):
            NoiseSpec(**kwargs)


class TestSimulate:
    def test_identity_recursion(self):
        noise = NoiseSpec(5, 200)
        out = simulate_arima(ModelSpec(), noise, burn_in=0)
        np.testing.assert_array_equal(out.values, gaussian_white_noise(noise).values)

    def test_burn_in_discards_prefix(self):
        full = gaussian_white_noise(NoiseSpec(5, 300)).values
        out = simulate_arima(ModelSpec(), NoiseSpec(5, 200), burn_in=100)
        np.testing.assert_array_equal(out.values, full[100:])

    def test_integrated_noise(self):
        out = simulate_arima(ModelSpec(d=1), NoiseSpec(9, 300), burn_in=50)
        np.testing.assert_array_equal(np.diff(out.values), out.aligned_noise[1:])

    def test_paper_variance_range_over_seeds(self):
        variances = [simulate_arima(PAPER, NoiseSpec(s, 500)).values.var() for s in range(200)]
        assert all(1.2 <= v <= 2.4 for v in variances)
        assert np.mean(variances) == pytest.approx(16 / 9, rel=0.05)

    def test_matches_lfilter_oracle(self):
        from scipy.signal import lfilter

        noise = NoiseSpec(13, 400)
        raw = gaussian_white_noise(NoiseSpec(13, 600)).values
        expected = lfilter([1.0, -0.4], [1.0, -0.25, -0.5], raw)[200:]
        out = simulate_arima(ModelSpec(phi=(0.25, 0.5), theta=(0.4,)), noise, burn_in=200)
        np.testing.assert_allclose(out.values, expected, atol=1e-12)

    def test_drift_and_mean(self):
        out = simulate_arima(ModelSpec(phi=(0.5,), theta0=1.0, mu=3.0), NoiseSpec(1, 20_000))
        # E[w] = theta0 / (1 - phi)
        assert out.values.mean() == pytest.approx(3.0 + 2.0, abs=0.1)

    def test_nonstationary_rejected(self):
        with pytest.raises(DomainError):
            simulate_arima(ModelSpec(phi=(1.0,)), NoiseSpec(1, 10))

    def test_overflow_reported(self):
        with pytest.raises(NumericalError, match="recursion step 1"):
            simulate_arima(ModelSpec(phi=(0.9,), theta0=1e308), NoiseSpec(1, 10), burn_in=0)

    def test_aligned_noise_close_to_draws(self):
        out = simulate_arima(ModelSpec(phi=(0.25, 0.5), mu=2.0), NoiseSpec(3, 500), burn_in=100)
        raw = gaussian_white_noise(NoiseSpec(3, 600)).values[100:]
        np.testing.assert_allclose(out.aligned_noise, raw, atol=1e-13)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 6), st.integers(0, 2**32 - 1), st.sampled_from([0.0, 1.5]), st.integers(0, 2))
    def test_innovation_identity(self, p, seed, mu, d):
        phi = random_stationary_phi(np.random.default_rng(seed), p)
        out = simulate_arima(ModelSpec(phi=phi, mu=mu, d=d), NoiseSpec(seed, 300), burn_in=200)
        x = out.values - mu
        if d:
            x = np.diff(x, n=d)
        for t in range(p, len(x)):
            s = 0.0
            for i in range(p):
                s = s + phi[i] * x[t - 1 - i]
            assert x[t] - s == out.aligned_noise[t + d]

    def test_deterministic(self):
        a = simulate_arima(PAPER, NoiseSpec(77, 500))
        b = simulate_arima(PAPER, NoiseSpec(77, 500))
        assert a.values.tobytes() == b.values.tobytes()
        assert a.aligned_noise.tobytes() == b.aligned_noise.tobytes()


class TestDifferenceIntegrate:
    def test_constant(self):
        np.testing.assert_array_equal(difference([4.0] * 5, 1).values, np.zeros(4))

    def test_identity(self):
        ts = TimeSeries([1.0, 2.0])
        assert difference(ts, 0) is ts
        np.testing.assert_array_equal(integrate(ts, 0).values, ts.values)

    def test_double_difference(self):
        np.testing.assert_array_equal(difference([1, 3, 6, 10], 2).values, [1, 1])

    def test_too_short(self):
        with pytest.raises(InputError):
            difference([1.0, 2.0], 2)

    def test_integrate_ones(self):
        np.testing.assert_array_equal(integrate([1, 1, 1], 1).values, [1, 2, 3])

    @settings(max_examples=50, deadline=None)
    @given(arrays(np.int64, st.integers(3, 40), elements=st.integers(-1000, 1000)), st.integers(0, 2))
    def test_round_trip_integers(self, x, d):
        x = x.astype(float)
        back = difference(integrate(x, d), d).values
        np.testing.assert_array_equal(back, x[d:])

    @settings(max_examples=50, deadline=None)
    @given(arrays(np.float64, st.integers(3, 40), elements=st.floats(-1e3, 1e3)), st.integers(0, 2))
    def test_round_trip_floats(self, x, d):
        np.testing.assert_allclose(difference(integrate(x, d), d).values, x[d:], atol=1e-9)


def test_time_series_validation():
    with pytest.raises(InputError):
        TimeSeries([])
    with pytest.raises(InputError):
        TimeSeries([1.0, np.inf])
    with pytest.raises(InputError):
        TimeSeries([1.0, 2.0], aligned_noise=[1.0])
