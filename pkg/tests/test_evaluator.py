"""
Tests for exact evaluation around candidates
"""

from fractions import Fraction

import pytest

from hallsearch.arith import HallPoint
from hallsearch.exceptions import EquationMismatchError
from hallsearch.models import HitSource
from hallsearch.pipeline import evaluate_candidate, evaluate_window, verify_point


class TestEvaluate:
    def test_golden_hit(self, golden_candidate):
        hits = evaluate_candidate(golden_candidate)
        assert len(hits) == 1
        hit = hits[0]
        assert (hit.x, hit.y, hit.k) == (5234, 378661, -17)
        assert (hit.b, hit.c2, hit.a) == (26, 1, 1881)
        assert hit.r_display == "4.26"
        assert hit.source is HitSource.SEARCH

    def test_threshold_is_exact(self, golden_candidate):
        assert evaluate_candidate(golden_candidate, theta=4) != []
        assert evaluate_candidate(golden_candidate, theta=Fraction(9, 2)) == []

    def test_zero_window_hits_x0_only(self, golden_candidate):
        assert [h.x for h in evaluate_candidate(golden_candidate, i_window=0)] == [5234]

    def test_near_misses_are_separate(self, golden_candidate):
        result = evaluate_window(golden_candidate, theta=Fraction(9, 2), log_theta=1)
        assert result.hits == []
        assert [h.x for h in result.near_misses] == [5234]

    def test_min_x_skips_small_points(self, golden_candidate):
        assert evaluate_candidate(golden_candidate, min_x=10_000) == []


class TestVerifyPoint:
    def test_accepts_real_point(self):
        verify_point(HallPoint(5234, 378661, -17))

    def test_rejects_wrong_k(self):
        with pytest.raises(EquationMismatchError):
            verify_point(HallPoint(5234, 378661, -16))

    def test_rejects_non_nearest_y(self):
        x, y = 5234, 378660
        with pytest.raises(EquationMismatchError):
            verify_point(HallPoint(x, y, x**3 - y * y))
