from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from blownash.algebra.closed_form import ClosedTerm, RationalBlock, ZetaClosedForm, closed_equal, expand, single_term
from blownash.algebra.laurent import ONE, U, U_MINUS_1, ZERO, LaurentPoly
from blownash.algebra.series import IntSeries, SeriesKind, ZetaSeries, deriv_u, div_u_minus_1, eval_u, mod2
from blownash.errors import NotDivisible

U2_MINUS_1 = LaurentPoly.from_map({2: 1, 0: -1})
ONE_PLUS_U = LaurentPoly.from_map({0: 1, 1: 1})

_u, _t = sympy.symbols("u T")


def test_expand_single_block() -> None:
    z = expand(single_term(U2_MINUS_1, (2, 2)), 4)
    assert z.coeffs == (ZERO, U2_MINUS_1.shift(-2), ZERO, U2_MINUS_1.shift(-4))


def test_expand_matches_sympy_taylor_expansion() -> None:
    coeff = U_MINUS_1 * U_MINUS_1
    closed = single_term(coeff, (1, 1), (2, 3))
    order = 8
    z = expand(closed, order)
    x, y = _u**-1 * _t, _u**-2 * _t**3
    expr = (_u - 1) ** 2 * x / (1 - x) * y / (1 - y)
    taylor = sympy.series(expr, _t, 0, order + 1).removeO()
    for n in range(1, order + 1):
        want = sympy.expand(taylor.coeff(_t, n))
        got = sum((c * _u**e for e, c in z.coeff(n).terms), sympy.Integer(0))
        assert sympy.simplify(got - want) == 0


def test_closed_equal_ignores_term_order_and_merges_duplicates() -> None:
    x, y = RationalBlock(2, 2), RationalBlock(1, 1)
    a = ZetaClosedForm((ClosedTerm.of(ONE, (x, y)), ClosedTerm.of(U, (x,))))
    b = ZetaClosedForm((ClosedTerm.of(U, (x,)), ClosedTerm.of(ONE, (y, x))))
    assert closed_equal(a, b)
    twice = ClosedTerm.of(ONE, (RationalBlock(2, 2),))
    d = ZetaClosedForm((twice, twice))
    assert closed_equal(d, single_term(LaurentPoly.constant(2), (2, 2)))
    assert closed_equal(single_term(ZERO, (3, 1)), ZetaClosedForm())


def test_closed_equal_separates_different_functions() -> None:
    # x/(1-x) against u^-2 + x/(1-x), x = u^-2 T^2
    a = single_term(ONE, (2, 2))
    b = ZetaClosedForm((ClosedTerm.of(ONE.shift(-2), ()), ClosedTerm.of(ONE, (RationalBlock(2, 2),))))
    assert not closed_equal(a, b)
    assert not closed_equal(a, single_term(ONE, (2, 4)))
    assert not closed_equal(a, single_term(ONE, (3, 2)))


def test_expand_rejects_bad_order() -> None:
    with pytest.raises(ValueError):
        expand(single_term(ONE, (1, 1)), 0)


def test_div_u_minus_1_and_specializations() -> None:
    z = expand(single_term(U2_MINUS_1, (2, 2)), 4)
    q = div_u_minus_1(z)
    assert q.coeff(2) == ONE_PLUS_U.shift(-2)
    # (u+1) u^-2 at u = 1 is 2
    assert eval_u(q, 1).coeffs == (0, 2, 0, 2)
    d = deriv_u(q)
    # d/du (u^-1 + u^-2) = -u^-2 - 2u^-3 -> -3 at u = 1
    assert eval_u(d, 1).coeff(2) == -3
    assert mod2(eval_u(d, 1)).coeffs == (0, 1, 0, 1)
    assert mod2(eval_u(d, 1)).modulus == 2


def test_div_u_minus_1_names_the_offending_power() -> None:
    z = ZetaSeries(3, (ZERO, U_MINUS_1, U))
    with pytest.raises(NotDivisible) as exc:
        div_u_minus_1(z)
    assert exc.value.n == 3


def test_eval_u_only_at_units() -> None:
    with pytest.raises(ValueError):
        eval_u(ZetaSeries.zero(2), 2)


def test_series_arithmetic_checks_orders() -> None:
    a = ZetaSeries(2, (ONE, U))
    b = ZetaSeries(3, (ONE, U, ZERO))
    with pytest.raises(ValueError):
        _ = a + b
    assert (a - a).is_zero()
    assert b.truncate(2) == ZetaSeries(2, (ONE, U))
    with pytest.raises(IndexError):
        a.coeff(3)


def test_int_series_first_difference() -> None:
    a = IntSeries(4, (0, 2, 0, 2))
    b = IntSeries(4, (0, 2, 0, 1))
    assert a.first_difference(b) == 4
    assert a.first_difference(a) is None
    assert (a + (-a)).is_zero()
    assert (a * -1).coeffs == (0, -2, 0, -2)


def test_series_kind_round_trips_through_value() -> None:
    assert SeriesKind("plus") is SeriesKind.PLUS


blocks = st.tuples(st.integers(1, 4), st.integers(1, 4))
small_laurents = st.dictionaries(st.integers(-3, 3), st.integers(-9, 9), max_size=3).map(LaurentPoly.from_map)


def _product(a: ZetaSeries, b: ZetaSeries) -> ZetaSeries:
    # both series start at T^1
    coeffs = [ZERO] * a.order
    for i, x in enumerate(a.coeffs, start=1):
        for j, y in enumerate(b.coeffs, start=1):
            if i + j <= a.order:
                coeffs[i + j - 1] = coeffs[i + j - 1] + x * y
    return a.with_coeffs(tuple(coeffs))


@given(small_laurents, small_laurents, blocks, blocks)
def test_expand_is_multiplicative_over_blocks(c1: LaurentPoly, c2: LaurentPoly, b1: tuple[int, int], b2: tuple[int, int]) -> None:
    order = 10
    joint = expand(single_term(c1 * c2, b1, b2), order)
    assert joint == _product(expand(single_term(c1, b1), order), expand(single_term(c2, b2), order))


@given(small_laurents, blocks)
def test_deriv_u_agrees_with_difference_quotient(c: LaurentPoly, b: tuple[int, int]) -> None:
    z = expand(single_term(c, b), 8)
    h = Fraction(1, 10**6)
    for exact, p in zip(eval_u(deriv_u(z), 1).coeffs, z.coeffs, strict=True):
        quotient = (p.evaluate(1 + h) - p.evaluate(1 - h)) / (2 * h)
        assert abs(quotient - exact) < Fraction(1, 10**3)
