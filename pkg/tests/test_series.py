"""Truncated series arithmetic and the closed-form generating functions."""

import math

import pytest

from oddcycles.polynomials import BigPoly, BiPoly
from oddcycles.recurrences import eo_poly, oo_poly
from oddcycles.series import (
    FAMILIES,
    ClosedFormSummand,
    TruncSeries,
    closed_form_series,
    eo_series,
    genocchi,
    genocchi_median,
    genocchi_median_sequence,
    genocchi_sequence,
    genocchi_series,
    identity_residual_1,
    identity_residual_2,
    median_series,
    oo_series,
    pde_residual,
    pde_residual_of,
    series_eo_even,
    series_eo_odd,
    series_oo_even,
    series_oo_odd,
    summand_recurrence_check,
)

GENOCCHI = [1, 1, 3, 17, 155, 2073, 38227, 929569]
MEDIANS = [1, 2, 8, 56, 608, 9440, 198272, 5410688]


class TestTruncSeriesBasics:
    def test_padding_and_order(self):
        s = TruncSeries([1, 2], order=4)
        assert s.order == 4
        assert s.coeff(1) == BiPoly.constant(2)
        assert s.coeff(4) == BiPoly.zero()

    def test_order_inferred_from_coefficients(self):
        assert TruncSeries([1, 0, 3]).order == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            TruncSeries([], order=-1)
        with pytest.raises(ValueError):
            TruncSeries([1, 2, 3], order=1)
        with pytest.raises(ValueError):
            TruncSeries([1], order=1, tags={"t"})
        with pytest.raises(ValueError):
            TruncSeries([BiPoly.x()], order=1, tags={"y"})

    def test_tags_inferred(self):
        assert TruncSeries([BiPoly.x()], order=1).tags == frozenset({"x"})
        assert TruncSeries([1], order=1).tags == frozenset()

    def test_coeff_beyond_order_raises(self):
        s = TruncSeries([1], order=2)
        with pytest.raises(IndexError):
            s.coeff(3)

    def test_coeff_int_requires_constant(self):
        s = TruncSeries([BiPoly.x()], order=0)
        with pytest.raises(ValueError):
            s.coeff_int(0)

    def test_valuation(self):
        assert TruncSeries([0, 0, 5], order=4).valuation() == 2
        assert TruncSeries.zero(3).valuation() == 4
        assert TruncSeries.zero(3).is_zero()

    def test_t_monomial_bounds(self):
        with pytest.raises(ValueError):
            TruncSeries.t_monomial(5, 4)

    def test_immutable(self):
        s = TruncSeries.one(2)
        with pytest.raises(AttributeError):
            s.order = 5


class TestTruncSeriesArithmetic:
    def test_add_takes_min_order(self):
        a = TruncSeries([1], order=5)
        b = TruncSeries([0, 1], order=3)
        assert (a + b).order == 3
        assert (a + b).coeff(1) == BiPoly.one()

    def test_scalar_ops_keep_order(self):
        a = TruncSeries([1, 1], order=5)
        assert (a + 2).order == 5
        assert (3 * a).order == 5
        assert (2 - a).coeff(0) == BiPoly.one()

    def test_mul_order_uses_valuation(self):
        # multiplying by t^3 pushes usable information three orders up
        a = TruncSeries([1, 1], order=4)
        t3 = TruncSeries.t_monomial(3, 7)
        assert (a * t3).order == 7
        assert (t3 * a).order == 7
        assert (a * t3).coeff(4) == BiPoly.one()

    def test_mul_value(self):
        # (1 + t)(1 - t) = 1 - t^2
        a = TruncSeries([1, 1], order=6)
        b = TruncSeries([1, -1], order=6)
        assert a * b == TruncSeries([1, 0, -1], order=6)

    def test_shift_up_down_roundtrip(self):
        a = TruncSeries([1, 2, 3], order=4)
        assert a.shift_up(2).order == 6
        assert a.shift_up(2).shift_down(2) == a

    def test_shift_down_requires_zero_low_coeffs(self):
        with pytest.raises(ValueError):
            TruncSeries([1, 2], order=3).shift_down()

    def test_differentiate_t(self):
        a = TruncSeries([5, 1, 3], order=2)
        d = a.differentiate_t()
        assert d.order == 1
        assert d == TruncSeries([1, 6], order=1)
        with pytest.raises(ValueError):
            TruncSeries.one(0).differentiate_t()

    def test_differentiate_variable(self):
        a = TruncSeries([BiPoly.x() * BiPoly.x()], order=2)
        assert a.differentiate("x").coeff(0) == 2 * BiPoly.x()

    def test_substitute_t_squared(self):
        a = TruncSeries([1, 2, 3], order=2)
        b = a.substitute_t_squared()
        assert b.order == 5
        assert [b.coeff_int(i) for i in range(6)] == [1, 0, 2, 0, 3, 0]

    def test_substitute_variable(self):
        a = TruncSeries([BiPoly.x() + 1], order=1)
        assert a.substitute("x", 0).coeff_int(0) == 1

    def test_truncate_cannot_extend(self):
        with pytest.raises(ValueError):
            TruncSeries.one(2).truncate(5)

    def test_reciprocal_inverts(self):
        s = TruncSeries([1, 4, 9, 16, 25], order=8)
        assert s * s.reciprocal() == TruncSeries.one(8)

    def test_reciprocal_with_polynomial_coefficients(self):
        s = TruncSeries([BiPoly.one(), 2 * (1 - BiPoly.x())], order=6)
        assert s * s.reciprocal() == TruncSeries.one(6, tags={"x"})

    def test_reciprocal_needs_unit_constant(self):
        with pytest.raises(ValueError):
            TruncSeries([2, 1], order=3).reciprocal()

    def test_divide_linear_matches_reciprocal(self):
        s = TruncSeries([1, 1, 1, 1], order=6)
        lin = TruncSeries([1, 5], order=6)
        assert s.divide_linear(5) == s * lin.reciprocal()
        assert s.divide_linear(5) * lin == s.truncate(6)


class TestClosedFormSummands:
    @pytest.mark.parametrize(
        "which,m,num",
        [
            ("oo_even", 3, math.factorial(3) * math.factorial(2)),
            ("oo_odd", 4, math.factorial(3) ** 2),
            ("eo_even", 2, math.factorial(2) * math.factorial(1)),
            ("eo_odd", 5, math.factorial(4) ** 2),
        ],
    )
    def test_numerators(self, which, m, num):
        assert ClosedFormSummand(which, m).numerator() == num

    def test_denominator_factors(self):
        assert ClosedFormSummand("oo_even", 3).denominator_factors() == [1, 4, 9]
        assert ClosedFormSummand("eo_even", 3).denominator_factors() == [2, 6, 12]
        assert ClosedFormSummand("eo_odd", 3).denominator_factors() == [0, 2, 6]

    def test_variables(self):
        assert ClosedFormSummand("oo_even", 1).variable() == "x"
        assert ClosedFormSummand("eo_odd", 1).variable() == "y"

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            ClosedFormSummand("oo", 1)
        with pytest.raises(ValueError):
            ClosedFormSummand("oo_even", 0)

    @pytest.mark.parametrize("which", sorted(FAMILIES))
    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    def test_summand_starts_at_degree_m(self, which, m):
        s = ClosedFormSummand(which, m).series(8)
        assert s.valuation() == m
        # below its own degree the summand contributes nothing at all
        assert ClosedFormSummand(which, m).series(m - 1).is_zero()

    @pytest.mark.parametrize("which", ["oo_even", "oo_odd"])
    @pytest.mark.parametrize("m", [1, 2, 4])
    def test_eta_series_is_x_zero_specialization(self, which, m):
        # with v = 0 the factor (1 - v) is 1, so s = t and both expansions agree
        summand = ClosedFormSummand(which, m)
        specialized = summand.series(9).substitute("x", 0)
        assert specialized == summand.eta_series(9)


class TestSeriesAgainstRecurrences:
    @pytest.mark.parametrize("n", range(1, 26))
    def test_oo_series_coefficients(self, n):
        assert oo_series(25).coeff_poly(n, "x") == oo_poly(n)

    @pytest.mark.parametrize("n", range(1, 26))
    def test_eo_series_coefficients(self, n):
        assert eo_series(25).coeff_poly(n, "y") == eo_poly(n)

    def test_even_length_slice(self):
        s = series_oo_even(6)
        assert s.coeff_poly(1, "x") == BigPoly((1,))
        assert s.coeff_poly(2, "x") == BigPoly((1, 1))
        assert s.coeff_poly(3, "x") == oo_poly(6)

    def test_odd_length_slice(self):
        s = series_oo_odd(6)
        assert s.coeff_poly(1, "x") == BigPoly((1,))
        assert s.coeff_poly(2, "x") == BigPoly((0, 1))
        assert s.coeff_poly(3, "x") == oo_poly(5)

    def test_eo_even_prefix_term(self):
        # the correction term (y - 1)t cancels the telescoped sum's lone t,
        # turning the constant 1 at t^1 into the true coefficient y
        s = series_eo_even(5)
        assert s.coeff(1) == BiPoly.y()
        assert s.coeff_poly(2, "y") == eo_poly(4)
        assert s.coeff_poly(3, "y") == eo_poly(6)

    def test_eo_odd_slice(self):
        s = series_eo_odd(5)
        assert s.coeff_poly(1, "y") == BigPoly((1,))
        assert s.coeff_poly(3, "y") == eo_poly(5)

    def test_order_validation(self):
        with pytest.raises(ValueError):
            oo_series(0)
        with pytest.raises(ValueError):
            eo_series(-2)


class TestSpecialValues:
    def test_genocchi_sequence(self):
        assert genocchi_sequence(8) == GENOCCHI

    def test_median_sequence(self):
        assert genocchi_median_sequence(8) == MEDIANS

    @pytest.mark.parametrize("n,value", list(enumerate(GENOCCHI, start=1)))
    def test_genocchi_single(self, n, value):
        assert genocchi(n) == value

    @pytest.mark.parametrize("n,value", list(enumerate(MEDIANS)))
    def test_median_single(self, n, value):
        assert genocchi_median(n) == value

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            genocchi(0)
        with pytest.raises(ValueError):
            genocchi_median(-1)

    def test_genocchi_series_is_x_zero_slice(self):
        assert genocchi_series(10) == series_oo_even(10).substitute("x", 0)

    def test_median_series_is_y_zero_slice(self):
        assert median_series(10) == series_eo_odd(10).substitute("y", 0)

    def test_eo_even_vanishes_at_y_zero(self):
        # every even length forces an even-odd drop, and the prefix (y-1)t
        # cancels the lone t that the telescoped sum contributes
        assert series_eo_even(12).substitute("y", 0).is_zero()

    def test_oo_odd_at_x_zero_is_t(self):
        s = series_oo_odd(12).substitute("x", 0)
        assert s == TruncSeries.t_monomial(1, 12)


class TestIdentities:
    @pytest.mark.parametrize("order", [1, 2, 5, 30])
    def test_squares_telescope(self, order):
        assert identity_residual_1(order).is_zero()

    @pytest.mark.parametrize("order", [1, 2, 5, 30])
    def test_products_telescope(self, order):
        assert identity_residual_2(order).is_zero()


class TestPdeResiduals:
    @pytest.mark.parametrize("which", sorted(FAMILIES))
    def test_residual_vanishes_with_tracked_order(self, which):
        res = pde_residual(which, 12)
        assert res.order == 11
        assert res.is_zero()

    def test_negative_control(self):
        tainted = series_oo_even(12) + TruncSeries.t_monomial(3, 12)
        res = pde_residual_of(tainted, "oo_even")
        assert not res.is_zero()

    def test_wrong_variable_rejected(self):
        with pytest.raises(ValueError):
            pde_residual_of(series_eo_odd(8), "oo_even")

    def test_order_floor(self):
        with pytest.raises(ValueError):
            pde_residual("oo_even", 2)


class TestSummandRecurrences:
    @pytest.mark.parametrize("which", sorted(FAMILIES))
    def test_families_satisfy_recurrence(self, which):
        assert summand_recurrence_check(which, 6, 14)

    def test_bound_validation(self):
        with pytest.raises(ValueError):
            summand_recurrence_check("oo_even", 1, 40)
        with pytest.raises(ValueError):
            summand_recurrence_check("oo_even", 10, 19)
        with pytest.raises(ValueError):
            summand_recurrence_check("nope", 5, 20)
