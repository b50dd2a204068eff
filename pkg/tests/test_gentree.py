"""Growth by maximum insertion and the bivariate transfer steps."""

import pytest

from oddcycles.cycles import Cycle, drop_stats, is_odd_drop_cycle
from oddcycles.enumerator import iter_odd_drop_cycles, joint_table
from oddcycles.gentree import (
    child_at,
    children,
    children_count,
    insertion_delta,
    insertion_positions,
    joint_poly,
    joint_step_even,
    joint_step_odd,
    verify_level,
)
from oddcycles.polynomials import BiPoly
from oddcycles.recurrences import eo_poly, eo_step_even, eo_step_odd, oo_poly, oo_step_even, oo_step_odd


def levels(top: int) -> list[list[Cycle]]:
    """Tree levels 1..top grown by repeated child expansion."""
    out = [[Cycle((1,))]]
    while len(out) < top:
        nxt = []
        for parent in out[-1]:
            nxt.extend(children(parent))
        out.append(nxt)
    return out


class TestChildren:
    def test_root_child(self):
        assert children(Cycle((1,))) == [Cycle((1, 2))]

    def test_two_cycle_child(self):
        # inserting 3 before the even entry 2 would create the drop (3, 2),
        # so the only insertion spot is before the leading 1, i.e. appending
        assert children(Cycle((1, 2))) == [Cycle((1, 2, 3))]

    def test_three_cycle_children(self):
        got = children(Cycle((1, 2, 3)))
        assert got == [Cycle((1, 2, 3, 4)), Cycle((1, 2, 4, 3))]

    def test_positions_are_odd_entries(self):
        assert insertion_positions(Cycle((1, 2, 4, 3))) == [0, 3]

    def test_child_at_append_and_split(self):
        c = Cycle((1, 2, 4, 3))
        assert child_at(c, 0).entries == (1, 2, 4, 3, 5)
        assert child_at(c, 3).entries == (1, 2, 4, 5, 3)

    def test_rejects_non_member(self):
        with pytest.raises(ValueError):
            children(Cycle((1, 3, 2)))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_children_stay_members_and_count(self, n):
        for parent in iter_odd_drop_cycles(n):
            kids = children(parent)
            assert len(kids) == children_count(n)
            for kid in kids:
                assert kid.n == n + 1
                assert is_odd_drop_cycle(kid)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 10, 11])
    def test_children_count_value(self, n):
        # every odd entry is an insertion spot and nothing else is
        assert children_count(n) == (n + 1) // 2


class TestPartition:
    @pytest.mark.parametrize("n", range(1, 10))
    def test_levels_partition_next_level(self, n):
        lvl = levels(n)[-1]
        seen: set[Cycle] = set()
        for parent in lvl:
            kids = children(parent)
            assert seen.isdisjoint(kids)
            seen.update(kids)
        assert seen == set(iter_odd_drop_cycles(n + 1))

    @pytest.mark.parametrize("n", range(1, 10))
    def test_delta_predicts_statistics(self, n):
        for parent in iter_odd_drop_cycles(n):
            base = drop_stats(parent)
            for pos in insertion_positions(parent):
                doo, deo = insertion_delta(parent, pos)
                kid = child_at(parent, pos)
                assert drop_stats(kid) == (base.oo + doo, base.eo + deo)

    def test_verify_level_clean_walk(self):
        level = [Cycle((1,))]
        for _ in range(7):
            level, problems = verify_level(level)
            assert problems == []

    def test_delta_cases_cover_all_six(self):
        seen = set()
        for n in range(1, 8):
            for parent in iter_odd_drop_cycles(n):
                for pos in insertion_positions(parent):
                    seen.add(((n + 1) & 1, insertion_delta(parent, pos)))
        assert seen == {
            (1, (1, 0)),
            (1, (0, 0)),
            (1, (1, -1)),
            (0, (0, 1)),
            (0, (-1, 1)),
            (0, (0, 0)),
        }


class TestTransferSteps:
    def test_even_step_examples(self):
        assert joint_step_even(BiPoly.one(), 1) == BiPoly.y()
        assert joint_step_even(BiPoly.x(), 2) == BiPoly({(0, 1): 1, (1, 1): 1})

    def test_odd_step_examples(self):
        assert joint_step_odd(BiPoly.y(), 1) == BiPoly.x()
        got = joint_step_odd(BiPoly({(0, 1): 1, (1, 1): 1}), 2)
        assert got == BiPoly({(1, 0): 1, (1, 1): 2, (2, 0): 1})

    def test_steps_are_linear_in_zero(self):
        assert joint_step_even(BiPoly.zero(), 3) == BiPoly.zero()
        assert joint_step_odd(BiPoly.zero(), 3) == BiPoly.zero()

    def test_degree_bound_enforced(self):
        with pytest.raises(ValueError):
            joint_step_even(BiPoly.monomial(2, 2), 3)
        with pytest.raises(ValueError):
            joint_step_odd(BiPoly.monomial(3, 1), 3)

    def test_negative_coefficient_rejected(self):
        with pytest.raises(ValueError):
            joint_step_even(BiPoly({(0, 1): -1}), 5)

    def test_step_parameter_positive(self):
        with pytest.raises(ValueError):
            joint_step_even(BiPoly.one(), 0)

    @pytest.mark.parametrize("k", range(1, 8))
    def test_even_step_commutes_with_specializations(self, k):
        p = joint_poly(2 * k - 1)
        q = joint_step_even(p, k)
        assert q.substitute("y", 1).as_univariate("x") == oo_step_even(
            p.substitute("y", 1).as_univariate("x"), k
        )
        assert q.substitute("x", 1).as_univariate("y") == eo_step_even(
            p.substitute("x", 1).as_univariate("y"), k
        )

    @pytest.mark.parametrize("k", range(1, 8))
    def test_odd_step_commutes_with_specializations(self, k):
        p = joint_poly(2 * k)
        q = joint_step_odd(p, k)
        assert q.substitute("y", 1).as_univariate("x") == oo_step_odd(
            p.substitute("y", 1).as_univariate("x"), k
        )
        assert q.substitute("x", 1).as_univariate("y") == eo_step_odd(
            p.substitute("x", 1).as_univariate("y"), k
        )


class TestJointPolynomial:
    def test_pinned_values(self):
        assert joint_poly(1) == BiPoly.one()
        assert joint_poly(4) == BiPoly({(0, 1): 1, (1, 1): 1})
        assert joint_poly(5) == BiPoly({(1, 0): 1, (1, 1): 2, (2, 0): 1})

    @pytest.mark.parametrize("n", range(1, 10))
    def test_matches_enumeration(self, n):
        assert joint_poly(n) == joint_table(n).as_bipoly()

    @pytest.mark.parametrize("n", range(1, 13))
    def test_marginals_match_recurrences(self, n):
        jp = joint_poly(n)
        assert jp.substitute("y", 1).as_univariate("x") == oo_poly(n)
        assert jp.substitute("x", 1).as_univariate("y") == eo_poly(n)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            joint_poly(0)
