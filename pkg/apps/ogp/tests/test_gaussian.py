"""Unit tests for the Gaussian tail sandwich and binomial intervals"""

import numpy as np
import pytest
from scipy import stats

from _library.exceptions import DomainError
from apps.ogp.functions.gaussian import gaussian_min_tail, wilson_interval


def random_case(rng: np.random.Generator, m: int) -> tuple[np.ndarray, np.ndarray]:
    """
    A unit-diagonal covariance and a point x whose sigma^-1 x lies in [0.5, 2]^m.
    """
    factor = rng.normal(size=(m, m))
    sigma = factor @ factor.T + 0.5 * np.eye(m)
    scale = np.sqrt(np.diag(sigma))
    sigma = sigma / np.outer(scale, scale)
    return sigma, sigma @ rng.uniform(0.5, 2.0, size=m)


class TestWilson:
    def test_no_trials(self):
        assert wilson_interval(0, 0) == (0.0, 1.0)

    def test_half(self):
        low, high = wilson_interval(5, 10)
        assert low == pytest.approx(0.2366, abs=1e-4)
        assert high == pytest.approx(0.7634, abs=1e-4)

    def test_zero_successes(self):
        low, high = wilson_interval(0, 50)
        assert low == pytest.approx(0.0, abs=1e-12)
        assert 0.0 < high < 0.1


class TestGaussianMinTail:
    def test_standard_normal(self):
        density = stats.norm.pdf(2.0)
        result = gaussian_min_tail([[1.0]], [2.0], mc_samples=1_000_000, seed=3)

        assert result["upper"] == pytest.approx(density / 2)
        assert result["lower"] == pytest.approx(0.75 * density / 2)
        assert result["exact"] == pytest.approx(0.02275, abs=1e-5)
        assert result["monte_carlo"] == pytest.approx(0.02275, abs=6e-4)
        low, high = result["interval"]
        assert low < result["monte_carlo"] < high
        assert high - low < 1e-3

    def test_precondition_flagged(self):
        result = gaussian_min_tail([[1.0, 0.9], [0.9, 1.0]], [1.0, 0.1])
        assert result["skipped"]
        assert result["lower"] is None and result["upper"] is None

    def test_singular(self):
        with pytest.raises(DomainError):
            gaussian_min_tail([[1.0, 1.0], [1.0, 1.0]], [1.0, 1.0])

    def test_deterministic_monte_carlo(self):
        first = gaussian_min_tail([[1.0, 0.3], [0.3, 1.0]], [0.5, 0.5], mc_samples=20_000, seed=7)
        second = gaussian_min_tail([[1.0, 0.3], [0.3, 1.0]], [0.5, 0.5], mc_samples=20_000, seed=7)
        assert first["monte_carlo"] == second["monte_carlo"]

    def test_sandwich_holds(self):
        rng = np.random.default_rng(11)
        for case in range(100):
            sigma, x = random_case(rng, 1 + case % 3)
            result = gaussian_min_tail(sigma, x)
            assert not result["skipped"]
            assert result["lower"] - 2e-5 <= result["exact"] <= result["upper"] + 2e-5

    @pytest.mark.slow
    def test_monte_carlo_inside_sandwich(self):
        rng = np.random.default_rng(12)
        for case in range(100):
            sigma, x = random_case(rng, 1 + case % 3)
            result = gaussian_min_tail(sigma, x, mc_samples=1_000_000, seed=case)
            low, high = result["interval"]
            assert low <= result["upper"]
            assert high >= result["lower"]
