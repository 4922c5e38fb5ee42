"""
Tests for ratio statistics
"""

import math

import numpy as np
import pytest

from hallsearch.arith import hall_k
from hallsearch.exceptions import InvalidInputError
from hallsearch.models import Hit, HitSource, RatioSample
from hallsearch.stats import (
    build_report,
    count_model,
    histogram,
    ks_uniform,
    mean_ratio,
    ratio_samples_from_hits,
)


def grid(n: int, upper: int = 16) -> list[float]:
    return [(i - 0.5) * upper / n for i in range(1, n + 1)]


class TestKS:
    def test_midpoint_grid(self):
        result = ks_uniform(grid(100))
        assert result.n == 100
        assert result.d == pytest.approx(0.005)
        assert result.p_value == pytest.approx(1.0)

    def test_degenerate_sample(self):
        result = ks_uniform([16] * 50)
        assert result.d == pytest.approx(1.0)
        assert result.p_value < 1e-6

    def test_accepts_samples_and_strings(self):
        samples = [RatioSample(x=2, k=-1, ratio="0.707107"), "8.0", 15]
        assert ks_uniform(samples).n == 3

    def test_out_of_range(self):
        with pytest.raises(InvalidInputError):
            ks_uniform([17.0])
        with pytest.raises(InvalidInputError):
            ks_uniform([])

    def test_zero_is_outside_support(self):
        with pytest.raises(InvalidInputError):
            ks_uniform([0.0, 8.0])

    def test_uniform_draws_pass_for_almost_every_seed(self):
        passed = 0
        for seed in range(200):
            draws = 16 - np.random.default_rng(seed).uniform(0, 16, 10_000)
            passed += ks_uniform(draws).p_value > 0.001
        assert passed >= 198


class TestSummaries:
    def test_mean(self):
        assert mean_ratio([1, 15]) == 8.0

    def test_count_model(self):
        assert count_model(1e6, 16) == pytest.approx(176.84, abs=0.01)
        assert count_model(math.e, 1) == pytest.approx(0.8)
        assert count_model(1e6, 1) == pytest.approx(11.05, abs=0.01)
        assert count_model(1e6, 1, 10) == pytest.approx(4.8)
        assert count_model(1e6, 1, 0) == count_model(1e6, 1)

    def test_count_model_domain(self):
        with pytest.raises(InvalidInputError):
            count_model(1, 16)

    def test_histogram(self):
        counts = histogram([0.5, 1.5, 1.7, 16.0], upper=16)
        assert len(counts) == 16
        assert counts[0] == 1
        assert counts[1] == 2
        assert counts[15] == 1


class TestReport:
    def test_from_hits(self):
        hits = [Hit.from_point(hall_k(x), HitSource.BRUTE) for x in (2, 5234, 8158, 3)]
        samples = ratio_samples_from_hits(hits, n_max=1)
        assert [s.x for s in samples] == [2, 5234, 8158]
        assert samples[0].ratio == "0.707107"

    def test_build_report(self):
        report = build_report(grid(100), upper=16, x_max=1_000_000)
        assert report.n == 100
        assert report.mean == pytest.approx(8.0)
        assert report.model_ratio == pytest.approx(100 / 176.84, rel=1e-3)
        data = report.to_dict()
        assert sum(data["histogram"]) == 100
        assert data["ks_d"] == pytest.approx(0.005)
