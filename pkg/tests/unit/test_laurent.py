from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from blownash.algebra.laurent import ONE, U, U_MINUS_1, ZERO, LaurentPoly

laurents = st.dictionaries(st.integers(-6, 6), st.integers(-50, 50), max_size=5).map(LaurentPoly.from_map)

_u = sympy.Symbol("u")


def _sym(p: LaurentPoly) -> sympy.Expr:
    return sum((c * _u**e for e, c in p.terms), sympy.Integer(0))


@given(laurents, laurents, laurents)
def test_ring_axioms(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly) -> None:
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(laurents, laurents)
def test_product_matches_sympy(a: LaurentPoly, b: LaurentPoly) -> None:
    assert sympy.expand(_sym(a * b) - _sym(a) * _sym(b)) == 0


@given(laurents)
def test_derivative_matches_sympy(a: LaurentPoly) -> None:
    assert sympy.expand(_sym(a.derivative()) - sympy.diff(_sym(a), _u)) == 0


@given(laurents)
def test_division_by_u_minus_1_is_exact_on_multiples(a: LaurentPoly) -> None:
    assert (a * U_MINUS_1).exact_div_u_minus_1() == a


@given(laurents)
def test_division_by_u_minus_1_detects_remainder(a: LaurentPoly) -> None:
    q = a.exact_div_u_minus_1()
    if a.evaluate_unit(1) == 0:
        assert q is not None and q * U_MINUS_1 == a
    else:
        assert q is None


@given(laurents)
def test_unit_evaluations_agree_with_rational_evaluation(a: LaurentPoly) -> None:
    assert Fraction(a.evaluate_unit(1)) == a.evaluate(1)
    assert Fraction(a.evaluate_unit(-1)) == a.evaluate(-1)


def test_construction_is_canonical() -> None:
    p = LaurentPoly.from_pairs([(2, 3), (0, 1), (2, -3), (-1, 4)])
    assert p.terms == ((-1, 4), (0, 1))
    assert p.degree == 0 and p.valuation == -1
    assert ZERO.degree is None and ZERO.valuation is None
    with pytest.raises(ValueError):
        LaurentPoly(((1, 1), (0, 1)))
    with pytest.raises(ValueError):
        LaurentPoly(((0, 0),))


def test_big_coefficients_stay_exact() -> None:
    p = (U + 1) ** 80
    assert p.coeff(40) == sympy.binomial(80, 40)
    assert p.evaluate_unit(1) == 2**80


def test_negative_powers_of_units() -> None:
    assert U**-3 == LaurentPoly.monomial(-3)
    assert (U * -1) ** -2 == LaurentPoly.monomial(-2)
    with pytest.raises(ValueError):
        _ = (U + 1) ** -1


def test_shift_and_str() -> None:
    assert str(U_MINUS_1.shift(-2)) == "u^-1 - u^-2"
    assert str(LaurentPoly.from_map({2: 1, 0: -1})) == "u^2 - 1"
    assert str(ZERO) == "0"
    assert str(LaurentPoly.constant(-3)) == "-3"
