"""
Tests for the brute-force oracle
"""

import csv

import pytest

from hallsearch.arith import hall_k
from hallsearch.config import reload_settings
from hallsearch.exceptions import ConfigurationError
from hallsearch.known import load_known_table
from hallsearch.oracle import brute_scan, scan_partition, write_samples_csv
from hallsearch.stats import count_model, ks_uniform, mean_ratio

from .conftest import SMALL_HITS


@pytest.fixture(scope="module")
def million_scan():
    return brute_scan(2, 1_000_000, n_max=16, workers=1)


class TestMillionScan:
    def test_hits(self, million_scan):
        assert million_scan.hit_xs == SMALL_HITS

    def test_hits_are_exact(self, million_scan):
        for hit in million_scan.hits:
            assert hit.point == hall_k(hit.x)

    def test_counts(self, million_scan):
        assert million_scan.squares_skipped == 999
        assert million_scan.evaluated == 999_999 - 999
        model = count_model(1_000_000, 16)
        assert 0.5 * model < len(million_scan.samples) < 1.5 * model

    def test_samples_look_uniform(self, million_scan):
        assert 6.0 < mean_ratio(million_scan.samples) < 10.0
        assert ks_uniform(million_scan.samples, 16).p_value > 0.01

    def test_samples_within_bound(self, million_scan):
        for sample in million_scan.samples:
            assert sample.k_squared <= 256 * sample.x


class TestScan:
    def test_square_only_range(self):
        result = brute_scan(4, 4)
        assert result.evaluated == 0
        assert result.squares_skipped == 1
        assert result.samples == []

    def test_smallest_hit(self):
        result = brute_scan(2, 3, n_max=1)
        assert result.hit_xs == [2]

    def test_matches_direct_evaluation(self):
        result = scan_partition(10_000, 12_000, 16, 1)
        direct = [x for x in range(10_000, 12_001) if hall_k(x).k and hall_k(x).k ** 2 <= 256 * x]
        assert [s.x for s in result.samples] == direct

    def test_workers_do_not_change_result(self):
        inline = brute_scan(2, 30_000, workers=1)
        pooled = brute_scan(2, 30_000, workers=3)
        assert pooled.samples == inline.samples
        assert pooled.hit_xs == inline.hit_xs
        assert pooled.evaluated == inline.evaluated

    def test_recheck_every_step(self):
        assert brute_scan(2, 6000, recheck_period=1).hit_xs == [2, 5234]

    @pytest.mark.parametrize("x_lo, x_hi, n_max", [(1, 10, 16), (10, 9, 16), (2, 10, 0)])
    def test_invalid_arguments(self, x_lo, x_hi, n_max):
        with pytest.raises(ConfigurationError):
            brute_scan(x_lo, x_hi, n_max=n_max)

    def test_large_range_needs_force(self, monkeypatch):
        monkeypatch.setenv("HALLSEARCH_ORACLE_LARGE_SCAN_X", "1000")
        reload_settings()
        with pytest.raises(ConfigurationError):
            brute_scan(2, 2000)
        assert brute_scan(2, 2000, force=True).hit_xs == [2]

    def test_samples_csv(self, tmp_path):
        result = brute_scan(2, 6000)
        path = tmp_path / "out" / "samples.csv"
        assert write_samples_csv(path, result.samples) == len(result.samples)
        with open(path, newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["x", "k", "ratio"]
        assert ["5234", "-17"] in [row[:2] for row in rows]


@pytest.mark.slow
class TestExtendedScan:
    def test_first_table_rows(self):
        rows = [row for row in load_known_table() if row.index <= 10]
        result = brute_scan(2, rows[-1].x, n_max=1, workers=None)
        assert result.hit_xs == [row.x for row in rows]
