"""Coefficient algebra: scaling degree, diagonal constants, singular data."""

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from triharmonic.coefficients import (
    A1A2B1,
    A1_poly_in_k,
    A2_poly_in_k,
    B1_poly_in_k,
    Params,
    STABLE,
    UNSTABLE,
    a_b,
    alpha_beta,
    c_coeffs,
    coefficient_set,
    deltas,
    hardy_rellich_constant,
    k_coeffs,
    k_of_p,
    p_of_k,
    singular_amplitude,
    singular_stability,
)

positive_ks = st.fractions(
    min_value=Fraction(1, 50), max_value=Fraction(40), max_denominator=100
)
dims = st.integers(min_value=7, max_value=60)


@given(positive_ks)
@settings(max_examples=100, deadline=None)
def test_degree_exponent_roundtrip(k):
    assert k_of_p(p_of_k(k)) == k


def test_degree_of_exponent_values():
    assert k_of_p(Fraction(7)) == 1
    assert k_of_p(Fraction(4)) == 2
    assert p_of_k(Fraction(1, 2)) == 13


def test_params_validation():
    with pytest.raises(ValueError):
        Params(6, Fraction(4))
    with pytest.raises(ValueError):
        Params(12, Fraction(1))  # p must exceed 1 for a scaling degree


def test_diagonal_constants_at_constant_mode():
    params = Params(21, p_of_k(Fraction(1)))
    # k = 1 instance, exact values from the closed forms
    A1, A2, B1 = A1A2B1(params)
    assert A1 == -10 + (10 * 21 - 60) - 21**2 + 24 * 21 - 83
    assert A2 == 3 * 2 * 4 * (1 - 16) * (1 - 18)
    assert B1 == -6 + (6 * 21 - 36) + 12 * 21 - 42


def test_quartic_diagonal_value_n21_k0():
    assert A2_poly_in_k(21)(Fraction(0)) == 2592


@given(dims, positive_ks)
@settings(max_examples=80, deadline=None)
def test_polynomial_builders_match_point_values(n, k):
    params = Params(n, p_of_k(k))
    A1, A2, B1 = A1A2B1(params)
    assert A1_poly_in_k(n)(k) == A1
    assert A2_poly_in_k(n)(k) == A2
    assert B1_poly_in_k(n)(k) == B1


def test_hardy_rellich_constant():
    n = 15
    assert hardy_rellich_constant(n) == Fraction((n - 6) ** 2 * (n - 2) ** 2 * (n + 2) ** 2, 64)


def test_deltas_are_rational_and_consistent():
    params = Params(15, Fraction(3))
    d1, d2, d3, d4 = deltas(params)
    k = params.k
    assert d1 == 2 * (15 - 1) - 4 * k
    assert d4 == k * (k + 2) * (k - 15 + 2) * (k - 15 + 4)
    al, be = alpha_beta(params)
    assert al == 15 - 3 - 2 * k
    assert be == k * (4 + k - 15)


def test_singular_profile_solves_the_equation_symbolically():
    """K r^(-k) with K^(p-1) = k0 satisfies (-Delta)^3 u = u^p exactly."""
    r = sp.Symbol("r", positive=True)
    for (n, p) in ((15, 7), (21, 3), (12, 4)):
        params = Params(n, Fraction(p))
        k = sp.Rational(params.k)
        K = sp.Rational(singular_amplitude(params)) ** sp.Rational(1, p - 1)
        u = K * r**-k

        def lap(f):
            return sp.diff(f, r, 2) + (n - 1) / r * sp.diff(f, r)

        residual = sp.simplify(-lap(lap(lap(u))) - u**p)
        assert residual == 0


def test_singular_amplitude_requires_admissible_sign():
    # at the Serrin exponent the amplitude constant vanishes: no profile
    with pytest.raises(ValueError):
        singular_amplitude(Params(15, Fraction(5, 3)))


def test_singular_stability_flip_local():
    from triharmonic.exponents import joseph_lundgren_triharmonic

    pc = joseph_lundgren_triharmonic(15, Fraction(1, 10**12)).value.mid
    assert singular_stability(Params(15, pc * Fraction(999, 1000))) == UNSTABLE
    assert singular_stability(Params(15, pc * Fraction(1001, 1000))) == STABLE


def test_coefficient_set_is_self_consistent():
    params = Params(21, p_of_k(Fraction(1, 40)))
    cs = coefficient_set(params)
    assert cs.k == Fraction(1, 40)
    assert (cs.A1, cs.A2, cs.B1) == A1A2B1(params)
    assert (cs.k0, cs.k1, cs.k2) == k_coeffs(params)
    assert (cs.c0, cs.c1, cs.c2) == c_coeffs(params)
    assert (cs.a, cs.b) == a_b(params)
