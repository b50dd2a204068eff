"""Brute-force enumeration and the joint statistic table."""

import math

import pytest

from oddcycles.cycles import Cycle, drop_stats, is_odd_drop_cycle
from oddcycles.enumerator import (
    StatTable,
    count_even_odd_only,
    count_odd_odd_only,
    iter_odd_drop_cycles,
    joint_table,
)
from oddcycles.polynomials import BiPoly
from oddcycles.recurrences import eo_poly, oo_poly


def member_count(n: int) -> int:
    return math.factorial((n - 1) // 2) * math.factorial(n // 2)


class TestIteration:
    def test_smallest_levels(self):
        assert [c.entries for c in iter_odd_drop_cycles(1)] == [(1,)]
        assert [c.entries for c in iter_odd_drop_cycles(2)] == [(1, 2)]
        assert [c.entries for c in iter_odd_drop_cycles(3)] == [(1, 2, 3)]

    def test_level_four(self):
        got = [c.entries for c in iter_odd_drop_cycles(4)]
        assert got == [(1, 2, 3, 4), (1, 2, 4, 3)]

    def test_lexicographic_order(self):
        tails = [c.entries[1:] for c in iter_odd_drop_cycles(7)]
        assert tails == sorted(tails)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_counts_match_closed_formula(self, n):
        assert sum(1 for _ in iter_odd_drop_cycles(n)) == member_count(n)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_pruned_walk_matches_full_scan(self, n):
        full = list(iter_odd_drop_cycles(n, prune=False))
        pruned = list(iter_odd_drop_cycles(n, prune=True))
        assert full == pruned

    def test_membership_of_output(self):
        for c in iter_odd_drop_cycles(6):
            assert is_odd_drop_cycle(c)

    def test_bounds(self):
        with pytest.raises(ValueError):
            list(iter_odd_drop_cycles(0))
        with pytest.raises(ValueError):
            list(iter_odd_drop_cycles(13, max_n=12))
        # the guard is configurable, not hard-wired
        assert sum(1 for _ in iter_odd_drop_cycles(3, max_n=3)) == 1


class TestStatTable:
    def test_total_and_polynomial(self):
        t = joint_table(4)
        assert t.total() == 2
        assert t.as_bipoly() == BiPoly({(0, 1): 1, (1, 1): 1})

    def test_known_table_five(self):
        t = joint_table(5)
        assert t.counts == {(1, 0): 1, (1, 1): 2, (2, 0): 1}

    def test_marginals(self):
        t = joint_table(6)
        assert t.oo_marginal() == oo_poly(6)
        assert t.eo_marginal() == eo_poly(6)

    def test_validation(self):
        with pytest.raises(ValueError):
            StatTable(3, {(0, 1): -1})
        with pytest.raises(ValueError):
            # oo + eo may never exceed the drop budget ceil(n/2)
            StatTable(3, {(2, 1): 1})
        with pytest.raises(ValueError):
            StatTable(0, {})


class TestJointTable:
    @pytest.mark.parametrize("n", range(1, 10))
    def test_matches_direct_tally(self, n):
        tally: dict[tuple[int, int], int] = {}
        for c in iter_odd_drop_cycles(n):
            key = tuple(drop_stats(c))
            tally[key] = tally.get(key, 0) + 1
        assert joint_table(n).counts == tally

    def test_thread_count_does_not_change_result(self):
        lone = joint_table(8, threads=1)
        pooled = joint_table(8, threads=3)
        auto = joint_table(8)
        assert lone == pooled == auto

    def test_pruned_table_agrees(self):
        assert joint_table(9, prune=True) == joint_table(9, prune=False)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_total_is_member_count(self, n):
        assert joint_table(n).total() == member_count(n)


class TestParityRestrictedCounts:
    def test_length_one_has_no_pure_cycles(self):
        # the formal drop carries no parity, so the one-element cycle
        # counts toward neither restricted family
        assert count_even_odd_only(1) == 0
        assert count_odd_odd_only(1) == 0

    @pytest.mark.parametrize(
        "n,expected",
        [(2, 1), (3, 0), (4, 1), (5, 0), (6, 3), (8, 17)],
    )
    def test_even_odd_only(self, n, expected):
        assert count_even_odd_only(n) == expected

    @pytest.mark.parametrize(
        "n,expected",
        [(2, 0), (3, 1), (4, 0), (5, 2), (7, 8), (9, 56)],
    )
    def test_odd_odd_only(self, n, expected):
        assert count_odd_odd_only(n) == expected

    @pytest.mark.parametrize("n", range(2, 10))
    def test_counts_are_constant_terms(self, n):
        assert count_even_odd_only(n) == oo_poly(n)(0)
        assert count_odd_odd_only(n) == eo_poly(n)(0)
