"""
Tests for the parametric families
"""

import pytest

from hallsearch.arith import HallPoint, hall_k
from hallsearch.exceptions import EquationMismatchError, FamilyParameterError
from hallsearch.families import (
    fermat_pell_member,
    fermat_pell_scan,
    fermat_pell_x,
    hall_family,
    hall_family_range,
    scale_member,
    scale_solution,
)
from hallsearch.known import load_known_table
from hallsearch.models import FamilyKind, HitSource


class TestHallFamily:
    @pytest.mark.parametrize(
        "t, expected",
        [(-3, (5234, 378661, -17)), (3, (8158, 736844, -24))],
    )
    def test_small_members(self, t, expected):
        member = hall_family(t)
        assert (member.point.x, member.point.y, member.point.k) == expected
        assert member.family is FamilyKind.HALL

    def test_members_are_table_rows(self):
        rows = {row.x: row for row in load_known_table()}
        for t in (-9, -3, 3, 9):
            x = hall_family(t).point.x
            assert x in rows
            assert "hall" in rows[x].tags
        assert hall_family(9).point.x == 390620082
        assert hall_family(-9).point.x == 384242766

    @pytest.mark.parametrize("t", [-27, -15, 15, 21, 33])
    def test_members_are_nearest(self, t):
        point = hall_family(t).point
        assert point == hall_k(point.x)

    def test_bad_parameter(self):
        with pytest.raises(FamilyParameterError):
            hall_family(4)

    def test_range_skips_inadmissible(self):
        members = hall_family_range(range(-9, 10))
        assert [m.t for m in members] == [-9, -3, 3, 9]

    def test_to_hit(self):
        hit = hall_family(-3).to_hit()
        assert hit.source is HitSource.FAMILY_HALL
        assert hit.r_display == "4.26"
        assert hall_family(-3).to_dict() == {"family": "hall", "t": -3, "x": 5234, "y": 378661, "k": -17}


class TestFermatPell:
    def test_member(self):
        assert fermat_pell_x(5) == 93844
        member = fermat_pell_member(5)
        assert member.point.k == -297
        assert member.to_hit().r_display == "1.03"

    def test_large_member_is_table_row(self):
        assert fermat_pell_x(-10150883) == 322001299796379844
        rows = {row.x for row in load_known_table() if "fermat_pell" in row.tags}
        assert 322001299796379844 in rows

    def test_scan_window_around_large_member(self):
        members = fermat_pell_scan(-10150885, -10150881)
        assert [m.t for m in members] == [-10150883]

    def test_scan_small(self):
        members = fermat_pell_scan(0, 10)
        assert [m.t for m in members] == [5]
        assert members[0].point.x == 93844

    def test_scan_partitions_agree(self):
        inline = fermat_pell_scan(-50, 50, workers=1)
        pooled = fermat_pell_scan(-50, 50, workers=2)
        assert inline == pooled

    def test_empty_range(self):
        with pytest.raises(FamilyParameterError):
            fermat_pell_scan(3, 2)

    @pytest.mark.slow
    def test_scan_full_parameter_range(self):
        members = fermat_pell_scan(-10_200_000, 10_200_000, workers=None)
        xs = {m.point.x for m in members}
        assert {93844, 322001299796379844} <= xs


class TestScaling:
    def test_small_point(self):
        assert scale_solution(HallPoint(2, 3, -1), 3) == HallPoint(18, 81, -729)

    def test_table_row_scaled(self):
        rows = {row.index: row for row in load_known_table()}
        scaled = scale_solution(hall_k(rows[20].x), 2)
        assert scaled.x == rows[22].x == 23415546067124892
        assert scaled == hall_k(scaled.x)

    def test_member(self):
        member = scale_member(HallPoint(2, 3, -1), 1)
        assert member.family is FamilyKind.SCALED
        assert member.to_hit().source is HitSource.SCALED

    def test_rejects_bad_input(self):
        with pytest.raises(FamilyParameterError):
            scale_solution(HallPoint(2, 3, -1), 0)
        with pytest.raises(EquationMismatchError):
            scale_solution(HallPoint(2, 3, 1), 2)
