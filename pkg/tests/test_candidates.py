"""
Tests for candidate generation and the closed forms behind it
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallsearch.arith import balanced_residue, hall_k
from hallsearch.exceptions import InexactDivisionError, InvalidCellError, InvalidInputError
from hallsearch.known import load_known_table
from hallsearch.pipeline import (
    CandidateBuilder,
    SearchCell,
    admissible_cells,
    build_candidates,
    c2_cap,
    c2_residue,
    evaluate_candidate,
    i_residue_class,
    k_from_lemma,
    lift_k0,
    polynomial_p0,
    select_n,
    solve_a0,
)


def congruence_residues(b: int, c2_values: list[int]) -> dict[int, set[int]]:
    """Every a in [0, 2b^3) solving 2a^3 - 3*alpha*a + C2 = 0 (mod 2b^3), grouped by C2"""
    b2, two_b3 = b * b, 2 * b**3
    found: dict[int, set[int]] = {c2: set() for c2 in c2_values}
    for a in range(two_b3):
        residue = (3 * balanced_residue(a * a, b2) * a - 2 * a**3) % two_b3
        if residue in found:
            found[residue].add(a)
    return found


def pipeline_residues(cell: SearchCell) -> set[int]:
    b = cell.b
    b2, two_b3 = b * b, 2 * b**3
    residues = set()
    for a0 in solve_a0(cell):
        lifted = lift_k0(b, a0, balanced_residue(a0 * a0, b2), cell.c2)
        if lifted is None:
            continue
        d, k0 = lifted
        residues.update((a0 + k0 * b2 + j * two_b3 // d) % two_b3 for j in range(d))
    return residues


def assert_candidate_consistent(cand) -> None:
    b, c2 = cand.cell.b, cand.cell.c2
    assert cand.congruence_holds()
    assert cand.a > b
    k_lemma = k_from_lemma(cand.a, b, c2, 0)
    if cand.x0 >= 2 and k_lemma * k_lemma <= cand.x0:
        assert hall_k(cand.x0).k == k_lemma


class TestCells:
    def test_validation(self):
        with pytest.raises(InvalidCellError):
            SearchCell(1, 1)
        with pytest.raises(InvalidCellError):
            SearchCell(26, 2)
        with pytest.raises(InvalidCellError):
            SearchCell(15, 0)
        assert SearchCell(26, 1).c == Fraction(1, 2)

    def test_cap(self):
        assert c2_cap(26, Fraction(1, 3)) == 5
        assert c2_cap(27, Fraction(1, 3)) == 6
        assert c2_cap(100, Fraction(1, 2)) == 20

    def test_admissible(self):
        assert [c.c2 for c in admissible_cells(26)] == [1, 3, 5]
        assert [c.c2 for c in admissible_cells(15)] == [1, 2, 4]
        assert [c.c2 for c in admissible_cells(2)] == [1]
        assert [c.c2 for c in admissible_cells(26, c2_cap_override=1)] == [1]

    def test_admissible_rejects_small_b(self):
        with pytest.raises(InvalidCellError):
            admissible_cells(1)


class TestGoldenCell:
    def test_roots(self, golden_cell):
        assert solve_a0(golden_cell) == [1, 529, 653]

    def test_lifts(self):
        assert lift_k0(26, 529, -23, 1) == (1, 2)
        assert lift_k0(26, 653, -147, 1) == (1, 24)

    def test_select_n(self):
        assert select_n(26, 1, -23, 529, 2, 1) == 0
        assert select_n(26, 1, -147, 653, 24, 1) == 0

    def test_candidates(self, golden_cell):
        builder = CandidateBuilder(n_window=0)
        candidates = builder.build(golden_cell)
        assert [c.x0 for c in candidates] == [5234, 421351]
        assert [c.a for c in candidates] == [1881, 16877]
        assert builder.stats.to_dict() == {
            "cells": 1,
            "roots": 3,
            "lifts_failed": 0,
            "candidates": 2,
            "discarded": 1,
        }

    def test_candidate_fields(self, golden_candidate):
        assert golden_candidate.to_dict() == {
            "b": 26,
            "C2": 1,
            "a0": 529,
            "alpha": -23,
            "d": 1,
            "k0": 2,
            "n": 0,
            "a": 1881,
            "x0": 5234,
        }
        assert golden_candidate.congruence_holds()

    def test_unit_root_needs_next_period(self, golden_cell):
        candidates = build_candidates(golden_cell, n_window=1)
        from_unit = [c for c in candidates if c.a0 == 1]
        assert [(c.n, c.a, c.x0) for c in from_unit] == [(1, 35153, 1828008)]
        assert evaluate_candidate(from_unit[0]) == []

    def test_negative_window_rejected(self):
        with pytest.raises(InvalidCellError):
            CandidateBuilder(n_window=-1)


class TestCongruence:
    @pytest.mark.parametrize("b", range(2, 51))
    def test_pipeline_covers_every_residue(self, b):
        cells = admissible_cells(b)
        expected = congruence_residues(b, [cell.c2 for cell in cells])
        for cell in cells:
            assert pipeline_residues(cell) == expected[cell.c2], cell

    @pytest.mark.parametrize("b", [2, 3, 4, 5, 6, 7, 9, 10, 12, 13, 14])
    def test_pipeline_beyond_the_cap(self, b):
        cells = admissible_cells(b, c2_cap_override=7)
        expected = congruence_residues(b, [cell.c2 for cell in cells])
        for cell in cells:
            assert pipeline_residues(cell) == expected[cell.c2], cell

    @given(st.integers(min_value=2, max_value=400), st.integers(min_value=1, max_value=40))
    @settings(max_examples=1000, deadline=None)
    def test_every_candidate_satisfies_congruence(self, b, c2):
        try:
            cell = SearchCell(b, c2 if b % 2 else 2 * (c2 // 2) + 1)
        except InvalidCellError:
            return
        for cand in build_candidates(cell, n_window=2):
            assert_candidate_consistent(cand)

    @pytest.mark.slow
    def test_hundred_thousand_candidates(self):
        builder = CandidateBuilder(n_window=2)
        checked, b = 0, 2
        while checked < 100_000:
            for cell in admissible_cells(b):
                for cand in builder.build(cell):
                    assert_candidate_consistent(cand)
                    checked += 1
            b += 1
        assert builder.stats.candidates == checked


class TestClosedForms:
    def test_golden_value(self):
        assert k_from_lemma(1881, 26, 1, 0) == -17
        assert k_from_lemma(16877, 26, 1, 0) == hall_k(421351).k

    def test_worked_example(self):
        a, b = 222272, 15
        assert balanced_residue(a * a, b * b) == 109
        assert c2_residue(a, b) == (998, 1350)
        assert i_residue_class(a, b, 998) == (4, 5)
        assert (a * a - 109) // (b * b) == 219577075
        assert k_from_lemma(a, b, 998, 4) == hall_k(219577079).k

    def test_inexact_division(self):
        with pytest.raises(InexactDivisionError):
            k_from_lemma(222272, 15, 998, 0)

    def test_rejects_bad_arguments(self):
        with pytest.raises(InvalidInputError):
            k_from_lemma(0, 15, 1, 0)
        with pytest.raises(InvalidInputError):
            c2_residue(5, 1)

    def test_polynomial_matches_closed_form(self):
        poly = polynomial_p0(26, 1, 1881)
        assert poly.alpha == -23
        assert poly.t == Fraction(1881, 26)
        assert poly.evaluate_at_i(0) == -17
        assert abs(float(poly.vertex_estimate) + 17) < 0.01

    def test_polynomial_over_window(self):
        a, b, c2 = 222272, 15, 998
        poly = polynomial_p0(b, c2, a)
        for i in (-1, 4, 9):
            assert poly.evaluate_at_i(i) == k_from_lemma(a, b, c2, i)

    def test_no_i_class(self):
        # a^3 = 998 (mod 1350), so C2 = 3 admits no offset
        assert i_residue_class(222272, 15, 3) is None


def xs_from_cell(b: int, c2: int) -> set[int]:
    cell = SearchCell(b, c2)
    return {h.x for cand in build_candidates(cell, n_window=1) for h in evaluate_candidate(cand)}


class TestTableCells:
    def test_small_rows_at_printed_cells(self):
        for row in load_known_table():
            if row.index in (2, 3, 6):
                assert row.x in xs_from_cell(row.b, row.c2)

    def test_rows_up_to_b_2000(self):
        for row in load_known_table():
            if row.has_cell and row.b <= 2000:
                assert row.x in xs_from_cell(row.b, row.c2), row.index

    def test_rows_beyond_b_2000(self):
        # Rows tagged "*" were obtained by scaling and have no cell of their own
        checked = 0
        for row in load_known_table():
            if not row.has_cell or row.b <= 2000 or "*" in row.tags:
                continue
            assert row.x in xs_from_cell(row.b, row.c2), row.index
            checked += 1
        assert checked == 28
