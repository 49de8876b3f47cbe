"""Ground-truth module: enumeration, counting recurrence, brute Hasse edges."""

import pytest

from boolhood.core import TruthTable, to_truth_table
from boolhood.errors import CapabilityError, IntegrityError
from boolhood.oracle import (M_KNOWN, CountRow, check_monotone_nondegenerate,
                             count_table, counts_to_csv, enumerate_all,
                             hasse_edges)

from _oracles import rep

# Every function on three variables, as drawn when the order is graphed.
P3_NODES = [
    [[1, 2, 3]],
    [[1, 2], [1, 3]], [[1, 2], [2, 3]], [[1, 3], [2, 3]],
    [[1, 2], [1, 3], [2, 3]],
    [[3], [1, 2]], [[2], [1, 3]], [[1], [2, 3]],
    [[1], [2], [3]],
]

P3_EDGES = [
    ([[1, 2, 3]], [[1, 2], [1, 3]]),
    ([[1, 2, 3]], [[1, 2], [2, 3]]),
    ([[1, 2, 3]], [[1, 3], [2, 3]]),
    ([[1, 2], [1, 3]], [[1, 2], [1, 3], [2, 3]]),
    ([[1, 2], [2, 3]], [[1, 2], [1, 3], [2, 3]]),
    ([[1, 3], [2, 3]], [[1, 2], [1, 3], [2, 3]]),
    ([[1, 2], [1, 3], [2, 3]], [[3], [1, 2]]),
    ([[1, 2], [1, 3], [2, 3]], [[2], [1, 3]]),
    ([[1, 2], [1, 3], [2, 3]], [[1], [2, 3]]),
    ([[3], [1, 2]], [[1], [2], [3]]),
    ([[2], [1, 3]], [[1], [2], [3]]),
    ([[1], [2, 3]], [[1], [2], [3]]),
]


class TestEnumeration:
    def test_p1_and_p2(self):
        assert list(enumerate_all(1)) == [rep(1, [1])]
        assert set(enumerate_all(2)) == {rep(2, [1, 2]), rep(2, [1], [2])}

    def test_p3_matches_the_known_nine(self):
        assert set(enumerate_all(3)) == {rep(3, *sets) for sets in P3_NODES}

    def test_no_duplicates_and_counts(self):
        for p, expected in [(1, 1), (2, 2), (3, 9), (4, 114), (5, 6894)]:
            seen = list(enumerate_all(p))
            assert len(seen) == len(set(seen)) == expected

    def test_cap(self):
        with pytest.raises(CapabilityError):
            next(enumerate_all(6))
        with pytest.raises(CapabilityError):
            next(enumerate_all(0))

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_agrees_with_raw_truth_table_filter(self, p):
        # independent route: try every one of the 2^(2^p) tables
        passing = sum(
            check_monotone_nondegenerate(TruthTable(p, bits)).passed
            for bits in range(1 << (1 << p))
        )
        assert passing == len(list(enumerate_all(p)))


class TestTableChecker:
    def test_accepts_a_known_member(self):
        table = to_truth_table(rep(3, [1], [2, 3]))
        report = check_monotone_nondegenerate(table)
        assert report.passed and report.failures() == ()
        assert [v.variable for v in report.variables] == [1, 2, 3]

    def test_constant_one_fails_on_essentiality(self):
        report = check_monotone_nondegenerate(TruthTable(2, 0b1111))
        assert not report.passed
        assert all(v.increasing and not v.essential for v in report.variables)
        assert len(report.failures()) == 2

    def test_xor_fails_on_monotonicity_with_witnesses(self):
        report = check_monotone_nondegenerate(TruthTable(2, 0b0110))
        assert not report.passed
        assert all(not v.increasing for v in report.variables)
        v1, v2 = report.variables
        assert v1.witness == (2, 3)
        assert v2.witness == (1, 3)


class TestCounting:
    def test_rows_through_p5(self):
        rows = count_table(5)
        assert [(r.p, r.m, r.n, r.enumerated) for r in rows] == [
            (1, 3, 1, 1),
            (2, 6, 2, 2),
            (3, 20, 9, 9),
            (4, 168, 114, 114),
            (5, 7581, 6894, 6894),
        ]

    def test_large_rows_come_from_the_recurrence_only(self):
        rows = count_table(8)
        assert rows[5].n == 7785062 and rows[5].enumerated is None
        assert rows[6].n == 2414627396434
        assert rows[7].n == 56130437209370320359966
        assert rows[7].enumerated is None

    def test_csv_golden(self):
        assert counts_to_csv(count_table(4)) == (
            "p,M,N,enumerated\n"
            "1,3,1,1\n"
            "2,6,2,2\n"
            "3,20,9,9\n"
            "4,168,114,114\n"
        )

    def test_csv_blank_when_not_enumerated(self):
        lines = counts_to_csv(count_table(6)).splitlines()
        assert lines[6] == "6,7828354,7785062,"

    def test_missing_totals_rejected(self):
        with pytest.raises(CapabilityError):
            count_table(10)
        with pytest.raises(CapabilityError):
            count_table(3, m_values={1: 3, 2: 6})
        with pytest.raises(CapabilityError):
            count_table(0)

    def test_wrong_total_trips_the_cross_check(self):
        with pytest.raises(IntegrityError):
            count_table(3, m_values={1: 3, 2: 6, 3: 21})

    def test_row_type(self):
        row = count_table(1)[0]
        assert row == CountRow(p=1, m=3, n=1, enumerated=1)

    def test_known_totals_table_is_self_consistent(self):
        # spot-check the embedded constants against the doubling structure:
        # antichains over p variables that avoid variable p are antichains
        # over p-1 variables, so M is strictly increasing and M(p) >= M(p-1)^2 / something
        assert sorted(M_KNOWN) == list(range(1, 10))
        for p in range(2, 10):
            assert M_KNOWN[p] > M_KNOWN[p - 1]


class TestHasseEdges:
    def test_p1_is_a_single_point(self):
        assert hasse_edges(1) == frozenset()

    def test_p2_single_edge(self):
        assert hasse_edges(2) == frozenset({(rep(2, [1, 2]), rep(2, [1], [2]))})

    def test_p3_twelve_known_edges(self):
        expect = frozenset(
            (rep(3, *lo), rep(3, *hi)) for lo, hi in P3_EDGES
        )
        assert hasse_edges(3) == expect

    def test_edge_counts_small_p(self):
        # value pinned by two independent routes agreeing: the truth-table
        # cover relation here and the rule engine summed over all 114 nodes
        assert len(hasse_edges(4)) == 292

    def test_cap(self):
        with pytest.raises(CapabilityError):
            hasse_edges(5)
        with pytest.raises(CapabilityError):
            hasse_edges(0)
