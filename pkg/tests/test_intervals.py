"""Exact interval arithmetic, radical expression trees, and enclosures."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triharmonic.intervals import (
    DomainError,
    InconclusivePrecision,
    Interval,
    MAX_BITS_ENV,
    RadicalExpr,
    cbrt,
    enclose,
    precision_cap,
    sqrt,
)

rationals = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=64
)


def _iv(a: Fraction, b: Fraction) -> Interval:
    return Interval.of(min(a, b), max(a, b))


def test_point_and_width():
    iv = Interval.point(Fraction(3, 7))
    assert iv.width == 0 and iv.mid == Fraction(3, 7)
    assert Fraction(3, 7) in iv


def test_inverted_endpoints_rejected():
    with pytest.raises(ValueError):
        Interval.of(1, 0)


def test_sign_and_order():
    assert Interval.of(1, 2).sign() == 1
    assert Interval.of(-2, -1).sign() == -1
    assert Interval.point(0).sign() == 0
    assert Interval.of(-1, 1).sign() is None
    assert Interval.of(0, 1).certainly_lt(Interval.of(2, 3))
    assert not Interval.of(0, 2).certainly_lt(Interval.of(2, 3))


@given(rationals, rationals, rationals, rationals, rationals, rationals)
@settings(max_examples=150, deadline=None)
def test_arithmetic_containment(a, b, c, d, x_t, y_t):
    """x in X and y in Y imply x op y in X op Y."""
    X, Y = _iv(a, b), _iv(c, d)
    x = X.lo + (X.hi - X.lo) * (abs(x_t) % 1)
    y = Y.lo + (Y.hi - Y.lo) * (abs(y_t) % 1)
    assert x + y in X + Y
    assert x - y in X - Y
    assert x * y in X * Y
    if not (Y.lo <= 0 <= Y.hi):
        assert x / y in X / Y
    assert x**3 in X**3
    assert x**2 in X**2


def test_even_power_of_straddling_interval():
    iv = Interval.of(-3, 2) ** 2
    assert iv.lo == 0 and iv.hi == 9


def test_division_by_zero_straddling_interval():
    with pytest.raises(InconclusivePrecision):
        Interval.of(1, 2) / Interval.of(-1, 1)


def test_sqrt_enclosure_certified():
    iv = enclose(sqrt(2), Fraction(1, 10**12))
    assert iv.width <= Fraction(1, 10**12)
    assert iv.lo * iv.lo <= 2 <= iv.hi * iv.hi


def test_cbrt_enclosure_signed():
    iv = enclose(cbrt(-27), Fraction(1, 10**9))
    assert Fraction(-3) in iv


def test_nested_radical_enclosure():
    # sqrt(2 + sqrt(2)): classical nested value ~ 1.847759065
    expr = sqrt(2 + sqrt(2))
    iv = enclose(expr, Fraction(1, 10**10))
    assert abs(float(iv.mid) - 1.8477590650225735) < 1e-9


def test_sqrt_of_negative_rejected():
    with pytest.raises(DomainError):
        enclose(sqrt(-2), Fraction(1, 1000))


def test_division_refines_rather_than_fails():
    # 1 / sqrt(2) needs the denominator bounded away from zero; fine here
    iv = enclose(RadicalExpr.const(1) / sqrt(2), Fraction(1, 10**10))
    assert abs(float(iv.mid) - 0.7071067811865476) < 1e-9


def test_precision_cap_env(monkeypatch):
    monkeypatch.setenv(MAX_BITS_ENV, "32")
    assert precision_cap() == 32
    with pytest.raises(InconclusivePrecision):
        enclose(sqrt(2), Fraction(1, 10**40))


def test_width_validation():
    with pytest.raises(ValueError):
        enclose(sqrt(2), 0)
