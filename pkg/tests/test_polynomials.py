"""Exact polynomial arithmetic against a symbolic oracle."""

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from triharmonic.polynomials import Polynomial

coeff_lists = st.lists(
    st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12),
    min_size=0,
    max_size=7,
)
sample_points = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=16
)


def _to_sympy(p: Polynomial, x):
    return sum((sp.Rational(c) * x**i for i, c in enumerate(p.coeffs)), sp.Integer(0))


def test_trailing_zeros_stripped():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1 and p.coeffs == (Fraction(1), Fraction(2))
    assert Polynomial([0, 0]).is_zero()


def test_from_monomials_accumulates():
    p = Polynomial.from_monomials([(2, 1), (2, 2), (0, 5)])
    assert p.coeffs == (Fraction(5), Fraction(0), Fraction(3))
    with pytest.raises(ValueError):
        Polynomial.from_monomials([(-1, 1)])


@given(coeff_lists, coeff_lists, sample_points)
@settings(max_examples=120, deadline=None)
def test_ring_operations_match_symbolic(ac, bc, t):
    x = sp.Symbol("x")
    a, b = Polynomial(ac), Polynomial(bc)
    for got, expr in (
        (a + b, _to_sympy(a, x) + _to_sympy(b, x)),
        (a - b, _to_sympy(a, x) - _to_sympy(b, x)),
        (a * b, _to_sympy(a, x) * _to_sympy(b, x)),
    ):
        assert sp.Rational(got(t)) == expr.subs(x, sp.Rational(t))


@given(coeff_lists, sample_points)
@settings(max_examples=80, deadline=None)
def test_derivative_matches_symbolic(ac, t):
    x = sp.Symbol("x")
    p = Polynomial(ac)
    expected = sp.diff(_to_sympy(p, x), x).subs(x, sp.Rational(t))
    assert sp.Rational(p.derivative()(t)) == expected


def test_compose_and_scale_argument():
    p = Polynomial([1, 0, 1])  # 1 + x^2
    inner = Polynomial([0, 2])  # 2x
    assert p.compose(inner)(3) == 1 + 36
    assert p.scale_argument(Fraction(1, 2))(4) == p(2)


@given(coeff_lists, coeff_lists)
@settings(max_examples=80, deadline=None)
def test_divmod_identity(ac, bc):
    a, b = Polynomial(ac), Polynomial(bc)
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.divmod(b)
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_gcd_divides_both():
    g = Polynomial([1, 1])  # x + 1
    a = g * Polynomial([2, 0, 1])
    b = g * Polynomial([-3, 1])
    d = a.gcd(b)
    _, ra = a.divmod(d)
    _, rb = b.divmod(d)
    assert ra.is_zero() and rb.is_zero()
    assert d.degree >= 1


def test_horner_evaluation_exact():
    p = Polynomial([Fraction(1, 3), Fraction(-2, 7), 1])
    t = Fraction(5, 11)
    assert p(t) == Fraction(1, 3) - Fraction(2, 7) * t + t * t
