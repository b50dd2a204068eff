"""Truncated power series in t with exact bivariate polynomial coefficients.

Everything here is exact integer arithmetic; there is no floating point and
no tolerance anywhere.  A TruncSeries knows the order through which its
coefficients are trustworthy, and every operation recomputes that bound
honestly (differentiating in t loses one order, multiplying by t gains one,
dividing by t spends a known-zero low coefficient, and products combine the
factors' orders with their valuations).  Residual checks read their valid
order off the result instead of guessing it.

The module builds four closed-form generating functions whose t^m coefficients
are the drop-statistic polynomials of odd-drop cycles:

  oo_even (variable x, lengths 2m):    sum of m!(m-1)! t^m / prod(1+k^2(1-x)t)
  oo_odd  (variable x, lengths 2m-1):  sum of ((m-1)!)^2 t^m / prod(1+k^2(1-x)t)
  eo_even (variable y, lengths 2m):    (y-1)t + sum of m!(m-1)! t^m / prod(1+k(k+1)(1-y)t)
  eo_odd  (variable y, lengths 2m-1):  sum of ((m-1)!)^2 t^m / prod(1+k(k-1)(1-y)t)

with products over k = 1..m.  The m-th summand has valuation m, so partial
sums through m = N give the series exactly to order N; the m = N+1 summand
contributing nothing at order N is asserted by a test, not assumed.
Interleaving even and odd lengths as S_even(t^2) + t^(-1) S_odd(t^2) yields
the full-distribution series oo_series and eo_series.

Specializing the variable to 0 turns the oo_even family into the Genocchi
number generating function and the eo_odd family into the Genocchi median
one; the other two specializations collapse to t exactly, which is what the
two identity_residual operations check.

Each closed form satisfies a second-order PDE in its original variables;
pde_residual substitutes the truncated series and returns the residual,
whose tracked order states exactly how far the zero check is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .polynomials import BiPoly, BigPoly, _as_bipoly

DEFAULT_ORDER = 40

_VALID_TAGS = frozenset({"x", "y"})


class TruncSeries:
    """Power series in t, exact through self.order, BiPoly coefficients.

    coeffs has length order+1; tags declares which polynomial variables may
    appear in coefficients (asserted at construction).
    """

    __slots__ = ("coeffs", "order", "tags")

    def __init__(self, coeffs=(), order: int | None = None, tags=None):
        cs = [_as_bipoly(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients exceed order {order}")
        cs.extend([BiPoly.zero()] * (order + 1 - len(cs)))
        used = frozenset().union(*(c.variables() for c in cs)) if cs else frozenset()
        if tags is None:
            tags = used
        else:
            tags = frozenset(tags)
            if not tags <= _VALID_TAGS:
                raise ValueError(f"unknown variable tags {sorted(tags - _VALID_TAGS)}")
            if not used <= tags:
                raise ValueError(
                    f"coefficients use {sorted(used - tags)} outside declared tags"
                )
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "tags", tags)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, order: int, tags=None) -> "TruncSeries":
        return cls((), order, tags)

    @classmethod
    def one(cls, order: int, tags=None) -> "TruncSeries":
        return cls((BiPoly.one(),), order, tags)

    @classmethod
    def t_monomial(cls, k: int, order: int, coeff=1, tags=None) -> "TruncSeries":
        """The series coeff * t^k."""
        if not 0 <= k <= order:
            raise ValueError(f"exponent {k} outside order {order}")
        return cls([BiPoly.zero()] * k + [_as_bipoly(coeff)], order, tags)

    # -- inspection ------------------------------------------------------

    def coeff(self, n: int) -> BiPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond tracked order {self.order}")
        return self.coeffs[n]

    def coeff_int(self, n: int) -> int:
        """Coefficient of t^n as an integer; requires a constant coefficient."""
        c = self.coeff(n)
        out = c.coeff(0, 0)
        if c != BiPoly.constant(out):
            raise ValueError(f"coefficient of t^{n} is not constant: {c}")
        return out

    def coeff_poly(self, n: int, var: str) -> BigPoly:
        """Coefficient of t^n as a univariate polynomial in var.

        Raises if the other variable appears: each series here is supposed
        to involve one polynomial variable only.
        """
        return self.coeff(n).as_univariate(var)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def valuation(self) -> int:
        """Lowest t-degree with nonzero coefficient; order+1 if none stored."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return self.order + 1

    def first_nonzero(self) -> tuple[int, BiPoly] | None:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return (i, c)
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(repr(c) for c in self.coeffs[:4])
        tail = ", ..." if self.order >= 4 else ""
        return f"TruncSeries(order={self.order}, coeffs=[{head}{tail}])"

    # -- ring operations -------------------------------------------------

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1], order, self.tags)

    def __add__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            order = min(self.order, other.order)
            coeffs = [
                self.coeffs[i] + other.coeffs[i] for i in range(order + 1)
            ]
            return TruncSeries(coeffs, order, self.tags | other.tags)
        # scalars are exact at every order
        other = _as_bipoly(other)
        return TruncSeries(
            (self.coeffs[0] + other,) + self.coeffs[1:],
            self.order,
            self.tags | other.variables(),
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs], self.order, self.tags)

    def __sub__(self, other) -> "TruncSeries":
        return self + (-other if isinstance(other, TruncSeries) else -_as_bipoly(other))

    def __rsub__(self, other) -> "TruncSeries":
        return (-self) + _as_bipoly(other)

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = _as_bipoly(other)
            return TruncSeries(
                [c * other for c in self.coeffs],
                self.order,
                self.tags | other.variables(),
            )
        # unknown coefficients of one factor first pollute the product at
        # (order+1) + valuation of the other factor
        order = min(
            self.order + other.valuation(), other.order + self.valuation()
        )
        out = [BiPoly.zero()] * (order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero() or i > order:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > order:
                    break
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(out, order, self.tags | other.tags)

    __rmul__ = __mul__

    def shift_up(self, k: int = 1) -> "TruncSeries":
        """Multiply by t^k; the k new low coefficients are exactly zero."""
        if k < 0:
            raise ValueError("shift_up needs k >= 0")
        return TruncSeries(
            (BiPoly.zero(),) * k + self.coeffs, self.order + k, self.tags
        )

    def shift_down(self, k: int = 1) -> "TruncSeries":
        """Divide by t^k; requires the k lowest coefficients to vanish."""
        if k < 0:
            raise ValueError("shift_down needs k >= 0")
        if self.order - k < 0:
            raise ValueError(f"order {self.order} too small to drop t^{k}")
        for i in range(k):
            if not self.coeffs[i].is_zero():
                raise ValueError(
                    f"cannot divide by t^{k}: coefficient of t^{i} is {self.coeffs[i]}"
                )
        return TruncSeries(self.coeffs[k:], self.order - k, self.tags)

    def differentiate_t(self) -> "TruncSeries":
        """Formal d/dt; the top coefficient would need t^(order+1), so one
        order is lost."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series in t")
        return TruncSeries(
            [i * self.coeffs[i] for i in range(1, self.order + 1)],
            self.order - 1,
            self.tags,
        )

    def differentiate(self, var: str) -> "TruncSeries":
        """Formal coefficientwise d/dx or d/dy; t-orders untouched."""
        return TruncSeries(
            [c.derivative(var) for c in self.coeffs], self.order, self.tags
        )

    def substitute_t_squared(self) -> "TruncSeries":
        """t -> t^2.  Odd coefficients of the image are exactly zero, so the
        image is exact through 2*order+1."""
        out = [BiPoly.zero()] * (2 * self.order + 2)
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return TruncSeries(out, 2 * self.order + 1, self.tags)

    def substitute(self, var: str, value: int) -> "TruncSeries":
        return TruncSeries(
            [c.substitute(var, value) for c in self.coeffs],
            self.order,
            self.tags - {var},
        )

    def reciprocal(self) -> "TruncSeries":
        """Inverse of a unit series with constant coefficient exactly 1."""
        if self.coeffs[0] != BiPoly.one():
            raise ValueError(f"reciprocal needs constant term 1, got {self.coeffs[0]}")
        out = [BiPoly.one()] + [BiPoly.zero()] * self.order
        for n in range(1, self.order + 1):
            acc = BiPoly.zero()
            for i in range(1, n + 1):
                if not self.coeffs[i].is_zero():
                    acc = acc + self.coeffs[i] * out[n - i]
            out[n] = -acc
        return TruncSeries(out, self.order, self.tags)

    def divide_linear(self, c) -> "TruncSeries":
        """Exact division by the unit factor (1 + c*t) without building its
        reciprocal: out_j = self_j - c*out_(j-1)."""
        c = _as_bipoly(c)
        out = [self.coeffs[0]]
        for j in range(1, self.order + 1):
            out.append(self.coeffs[j] - c * out[j - 1])
        return TruncSeries(out, self.order, self.tags | c.variables())


# -- closed forms --------------------------------------------------------


@dataclass(frozen=True)
class _Family:
    var: str  # polynomial variable of the full series
    ratio_name: str
    denom_name: str
    zeroth: int  # stated coefficient of s in the constant-in-xi term
    prefix: bool  # full series carries the extra (var - 1)*t term

    def ratio(self, m: int) -> int:
        # successive numerator quotient: m!(m-1)! steps by m(m-1),
        # ((m-1)!)^2 steps by (m-1)^2
        return m * (m - 1) if self.ratio_name == "m(m-1)" else (m - 1) ** 2

    def denom(self, k: int) -> int:
        if self.denom_name == "k^2":
            return k * k
        if self.denom_name == "k(k+1)":
            return k * (k + 1)
        return k * (k - 1)

    def numerator(self, m: int) -> int:
        if self.ratio_name == "m(m-1)":
            return factorial(m) * factorial(m - 1)
        return factorial(m - 1) ** 2


FAMILIES = {
    "oo_even": _Family("x", "m(m-1)", "k^2", 0, False),
    "oo_odd": _Family("x", "(m-1)^2", "k^2", 0, False),
    "eo_even": _Family("y", "m(m-1)", "k(k+1)", -1, True),
    "eo_odd": _Family("y", "(m-1)^2", "k(k-1)", 0, False),
}


def _check_family(which: str) -> _Family:
    if which not in FAMILIES:
        raise ValueError(f"unknown family {which!r}; expected one of {sorted(FAMILIES)}")
    return FAMILIES[which]


@dataclass(frozen=True)
class ClosedFormSummand:
    """The m-th term of one closed-form family.

    In the original variables the term is
        numerator * t^m / prod_{k=1..m} (1 + a_k*(1-v)*t)
    and substituting s = (1-v)*t makes it a univariate series in s whose
    term-to-term quotient is the first-order recurrence that
    summand_recurrence_check verifies.
    """

    family: str
    m: int

    def __post_init__(self):
        _check_family(self.family)
        if self.m < 1:
            raise ValueError(f"summand index must be positive, got {self.m}")

    def numerator(self) -> int:
        return FAMILIES[self.family].numerator(self.m)

    def denominator_factors(self) -> list[int]:
        fam = FAMILIES[self.family]
        return [fam.denom(k) for k in range(1, self.m + 1)]

    def variable(self) -> str:
        return FAMILIES[self.family].var

    def series(self, order: int) -> TruncSeries:
        """Expansion in t with polynomial coefficients in the family variable."""
        fam = FAMILIES[self.family]
        u = 1 - (BiPoly.x() if fam.var == "x" else BiPoly.y())
        return _summand_series(fam, self.m, order, u)

    def eta_series(self, order: int) -> TruncSeries:
        """Expansion in the substituted variable s = (1-v)*t; integer coeffs."""
        return _summand_series(FAMILIES[self.family], self.m, order, BiPoly.one())


def _summand_series(fam: _Family, m: int, order: int, u: BiPoly) -> TruncSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    if m > order:
        return TruncSeries.zero(order, u.variables())
    s = TruncSeries.t_monomial(m, order, fam.numerator(m))
    for k in range(1, m + 1):
        a = fam.denom(k)
        if a:
            s = s.divide_linear(u * a)
    return s


def _closed_form_sum(fam: _Family, order: int, u: BiPoly) -> TruncSeries:
    """Sum of the family's summands through m = order.

    Built incrementally: the m-th summand is the (m-1)-st times
    ratio(m) * t / (1 + a_m*u*t), so each step costs one linear division.
    """
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    summand = TruncSeries.t_monomial(1, order, fam.numerator(1))
    a1 = fam.denom(1)
    if a1:
        summand = summand.divide_linear(u * a1)
    total = summand
    for m in range(2, order + 1):
        summand = (summand * fam.ratio(m)).shift_up(1).truncate(order)
        a = fam.denom(m)
        if a:
            summand = summand.divide_linear(u * a)
        total = total + summand
    return total


def series_oo_even(order: int) -> TruncSeries:
    """Odd-odd drop distribution series for even lengths: the coefficient of
    t^m is the polynomial in x for cycles on [2m]."""
    fam = FAMILIES["oo_even"]
    return _closed_form_sum(fam, order, 1 - BiPoly.x())


def series_oo_odd(order: int) -> TruncSeries:
    """Odd-odd distribution for odd lengths: t^m holds the cycles on [2m-1]."""
    fam = FAMILIES["oo_odd"]
    return _closed_form_sum(fam, order, 1 - BiPoly.x())


def series_eo_even(order: int) -> TruncSeries:
    """Even-odd distribution for even lengths: t^m holds the cycles on [2m].

    Carries the extra (y-1)*t term; without it the t^1 coefficient would be
    1 instead of the single cycle on [2] with its one even-odd drop.
    """
    fam = FAMILIES["eo_even"]
    total = _closed_form_sum(fam, order, 1 - BiPoly.y())
    return total + TruncSeries.t_monomial(1, order, BiPoly.y() - 1)


def series_eo_odd(order: int) -> TruncSeries:
    """Even-odd distribution for odd lengths: t^m holds the cycles on [2m-1]."""
    fam = FAMILIES["eo_odd"]
    return _closed_form_sum(fam, order, 1 - BiPoly.y())


def oo_series(order: int) -> TruncSeries:
    """Full odd-odd distribution series: coefficient of t^n is the polynomial
    over odd-drop cycles on [n], every n >= 1.

    Interleaves the even- and odd-length series as even(t^2) + odd(t^2)/t;
    the division by t is exact because the odd-length series has no constant
    term.
    """
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    half = order // 2 + 1
    even = series_oo_even(half).substitute_t_squared()
    odd = series_oo_odd(half).substitute_t_squared().shift_down()
    return (even + odd).truncate(order)


def eo_series(order: int) -> TruncSeries:
    """Full even-odd distribution series, interleaved like oo_series."""
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    half = order // 2 + 1
    even = series_eo_even(half).substitute_t_squared()
    odd = series_eo_odd(half).substitute_t_squared().shift_down()
    return (even + odd).truncate(order)


# -- integer specializations ---------------------------------------------


def genocchi_series(order: int) -> TruncSeries:
    """Generating function of the Genocchi numbers:
    sum of m!(m-1)! t^m / prod(1+k^2 t), integer coefficients."""
    return _closed_form_sum(FAMILIES["oo_even"], order, BiPoly.one())


def genocchi(n: int) -> int:
    """n-th Genocchi number (1, 1, 3, 17, 155, ...), n >= 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return genocchi_series(n).coeff_int(n)


def genocchi_sequence(count: int) -> list[int]:
    """The first count Genocchi numbers, starting at index 1."""
    series = genocchi_series(count)
    return [series.coeff_int(n) for n in range(1, count + 1)]


def median_series(order: int) -> TruncSeries:
    """Generating function whose t^(n+2) coefficient is the n-th Genocchi
    median: sum of ((m-1)!)^2 t^m / prod(1+k(k-1) t)."""
    return _closed_form_sum(FAMILIES["eo_odd"], order, BiPoly.one())


def genocchi_median(n: int) -> int:
    """n-th Genocchi median (1, 2, 8, 56, 608, ...), n >= 0."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return median_series(n + 2).coeff_int(n + 2)


def genocchi_median_sequence(count: int) -> list[int]:
    """The first count Genocchi medians, starting at index 0."""
    series = median_series(count + 1)
    return [series.coeff_int(n + 2) for n in range(count)]


def identity_residual_1(order: int) -> TruncSeries:
    """sum of ((m-1)!)^2 t^m / prod(1+k^2 t)  minus  t.

    The sum telescopes to t exactly; the residual is the zero series.
    """
    return _closed_form_sum(FAMILIES["oo_odd"], order, BiPoly.one()) - TruncSeries.t_monomial(1, order)


def identity_residual_2(order: int) -> TruncSeries:
    """sum of m!(m-1)! t^m / prod(1+k(k+1) t)  minus  t; again zero."""
    return _closed_form_sum(FAMILIES["eo_even"], order, BiPoly.one()) - TruncSeries.t_monomial(1, order)


# -- PDE residuals --------------------------------------------------------


def closed_form_series(which: str, order: int) -> TruncSeries:
    """The full series of one family, prefix term included."""
    _check_family(which)
    return {
        "oo_even": series_oo_even,
        "oo_odd": series_oo_odd,
        "eo_even": series_eo_even,
        "eo_odd": series_eo_odd,
    }[which](order)


def pde_residual_of(series: TruncSeries, which: str) -> TruncSeries:
    """Residual of the second-order PDE the family satisfies, evaluated on an
    arbitrary series (so a perturbed input serves as a negative control).

    The returned series' .order states how far the residual is meaningful:
    one order below the input's, lost to the t division on the source side.
    Writing S for the input, v for the family variable and u = 1 - v:

      oo_even: (S - t)/t   = v*u^2*S_vv + 2*v*u*t*S_vt + v*t^2*S_tt
                             + u^2*S_v + (1+v)*t*S_t
      oo_odd:  (S - t)/t   = v*u^2*S_vv + 2*v*u*t*S_vt + v*t^2*S_tt
                             - v*u*S_v + v*t*S_t
      eo_even: (S - v*t)/t = v*u^2*S_vv + 2*v*u*t*S_vt + v*t^2*S_tt
                             + 2*v*t*S_t        (no first-order S_v term)
      eo_odd:  (S - t)/t   = v*u^2*S_vv + 2*v*u*t*S_vt + v*t^2*S_tt
                             + u*(1-2*v)*S_v + t*S_t
    """
    fam = _check_family(which)
    if series.order < 3:
        raise ValueError(f"order {series.order} too small for a PDE residual")
    if not series.tags <= {fam.var}:
        raise ValueError(
            f"series in {sorted(series.tags)} fed to the {which} equation ({fam.var})"
        )
    v = BiPoly.x() if fam.var == "x" else BiPoly.y()
    u = 1 - v
    s_v = series.differentiate(fam.var)
    s_vv = s_v.differentiate(fam.var)
    s_t = series.differentiate_t()
    s_vt = s_v.differentiate_t()
    s_tt = s_t.differentiate_t()
    common = (
        s_vv * (v * u * u)
        + s_vt.shift_up() * (2 * v * u)
        + s_tt.shift_up(2) * v
    )
    if which == "oo_even":
        lhs = (series - TruncSeries.t_monomial(1, series.order)).shift_down()
        rhs = common + s_v * (u * u) + s_t.shift_up() * (1 + v)
    elif which == "oo_odd":
        lhs = (series - TruncSeries.t_monomial(1, series.order)).shift_down()
        rhs = common - s_v * (v * u) + s_t.shift_up() * v
    elif which == "eo_even":
        lhs = (series - TruncSeries.t_monomial(1, series.order, v)).shift_down()
        rhs = common + s_t.shift_up() * 2 * v
    else:  # eo_odd
        lhs = (series - TruncSeries.t_monomial(1, series.order)).shift_down()
        rhs = common + s_v * (u * (1 - 2 * v)) + s_t.shift_up()
    return lhs - rhs


def pde_residual(which: str, order: int) -> TruncSeries:
    """PDE residual of the family's own closed form; zero through order-1."""
    if order < 3:
        raise ValueError(f"order must be at least 3, got {order}")
    return pde_residual_of(closed_form_series(which, order), which)


# -- summand recurrences ---------------------------------------------------


def _geometric_base(a: int, num: int, order: int) -> TruncSeries:
    """num * s / (1 + a*s) expanded directly: coefficient of s^j is
    num * (-a)^(j-1).  Independent of the division routines on purpose."""
    coeffs = [BiPoly.zero()] * (order + 1)
    power = num
    for j in range(1, order + 1):
        coeffs[j] = BiPoly.constant(power)
        power *= -a
    return TruncSeries(coeffs, order)


def summand_recurrence_check(which: str, bound: int, order: int) -> bool:
    """Verify the first-order recurrence between consecutive summands.

    Works in the single variable s standing for (1-v)*t.  Checks, for
    m = 2..bound, the multiplied-out relation

        summand_m * (1 + a_m*s)  ==  ratio(m) * s * summand_(m-1)

    with both sides built from the closed forms, plus the stated m=1 base
    cases (s/(1+s) for the two oo families, s/(1+2s) and s for eo_even and
    eo_odd) against an independent geometric expansion, plus the stated
    constant-in-xi terms (0 except eo_even's -s, which in original variables
    is exactly the (y-1)t prefix).
    """
    fam = _check_family(which)
    if bound < 2:
        raise ValueError(f"bound must be at least 2, got {bound}")
    if order < 2 * bound:
        raise ValueError(f"order {order} too small for bound {bound}")
    stated_zeroth = {"oo_even": 0, "oo_odd": 0, "eo_even": -1, "eo_odd": 0}
    if fam.zeroth != stated_zeroth[which]:
        return False
    base = ClosedFormSummand(which, 1).eta_series(order)
    if base != _geometric_base(fam.denom(1), fam.numerator(1), order):
        return False
    prev = base
    for m in range(2, bound + 1):
        cur = ClosedFormSummand(which, m).eta_series(order)
        lhs = cur + (cur * fam.denom(m)).shift_up(1).truncate(order)
        rhs = (prev * fam.ratio(m)).shift_up(1).truncate(order)
        if lhs != rhs:
            return False
        prev = cur
    return True
