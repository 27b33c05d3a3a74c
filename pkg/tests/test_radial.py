"""Radial IVP solver and the Pohozaev balance referee."""

import math
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from scipy import integrate

from triharmonic.coefficients import Params
from triharmonic.radial import (
    _beta_table,
    pohozaev_residual,
    pohozaev_sides,
    radial_ivp_solve,
    singular_profile_solve,
    singular_state,
)

P157 = Params(15, Fraction(7))


@pytest.fixture(scope="module")
def ivp_profile():
    return radial_ivp_solve(P157, 1.0, r_max=3.0)


def test_zero_data_gives_zero_profile():
    prof = radial_ivp_solve(P157, 0.0, r_max=2.5)
    assert np.max(np.abs(prof.values)) == 0.0
    assert pohozaev_residual(prof, 2.0) == 0.0


def test_invalid_inputs_rejected():
    with pytest.raises(ValueError):
        radial_ivp_solve(P157, math.nan, r_max=1.0)
    with pytest.raises(ValueError):
        radial_ivp_solve(P157, 1.0, r_max=-1.0)


def test_taylor_launch_continuity(ivp_profile):
    # the dense solution continues the Taylor branch smoothly across r_start
    r0 = ivp_profile.r_start
    below = ivp_profile.state(r0 * 0.5)
    above = ivp_profile.state(r0 * 1.0001)
    assert below[0] == pytest.approx(above[0], rel=1e-8)


def test_refinement_self_consistency(ivp_profile):
    finer = radial_ivp_solve(P157, 1.0, r_max=3.0, tol=ivp_profile.tol / 10.0)
    drift = np.max(np.abs(ivp_profile.state(3.0) - finer.state(3.0)))
    assert drift <= 10.0 * ivp_profile.tol * max(1.0, abs(ivp_profile.state(3.0)[0]))


def test_collocation_residual_recorded(ivp_profile):
    assert 0.0 <= ivp_profile.residual < 1e-6
    assert not ivp_profile.blew_up


def test_blow_up_sets_flag_and_truncates():
    prof = radial_ivp_solve(P157, -3.0, r_max=10.0, tol=1e-10)
    assert prof.blew_up
    assert prof.r_end < 10.0


def test_pohozaev_residual_for_genuine_solution(ivp_profile):
    sides = pohozaev_sides(ivp_profile, 2.0)
    assert sides["residual_rel"] < 1e-6
    assert sides["inner_correction"] == 0.0


def test_pohozaev_out_of_range(ivp_profile):
    with pytest.raises(ValueError):
        pohozaev_residual(ivp_profile, 5.0)
    with pytest.raises(ValueError):
        pohozaev_sides(ivp_profile, 2.0, r_inner=0.5)


def test_singular_state_solves_equation_pointwise():
    # plug the closed form into the system's right-hand side identities
    n, p = 15, 7.0
    k = float(P157.k)
    r = 1.3
    u, up, v, vp, w, wp = singular_state(P157, r)
    # second derivatives of the pure powers are exact: f'' = d(d+1) f / r^2
    upp = k * (k + 1.0) * u / r**2
    assert upp + (n - 1) / r * up == pytest.approx(v, rel=1e-12)
    vpp = (k + 2.0) * (k + 3.0) * v / r**2
    assert vpp + (n - 1) / r * vp == pytest.approx(w, rel=1e-12)
    wpp = (k + 4.0) * (k + 5.0) * w / r**2
    assert wpp + (n - 1) / r * wp == pytest.approx(-abs(u) ** (p - 1) * u, rel=1e-12)


def test_singular_profile_preserved_on_annulus():
    prof = singular_profile_solve(P157, 0.5, 2.5, tol=1e-12)
    worst = 0.0
    for r in np.linspace(0.5, 2.5, 11):
        exact = np.array(singular_state(P157, float(r)))
        got = np.array(prof.state(float(r)))
        worst = max(worst, float(np.max(np.abs(got - exact) / np.abs(exact))))
    assert worst < 1e-9


def test_annulus_pohozaev_with_inner_correction():
    prof = singular_profile_solve(P157, 0.5, 2.5, tol=1e-12)
    sides = pohozaev_sides(prof, 2.0)
    assert sides["inner_correction"] != 0.0
    assert sides["residual_rel"] < 1e-8
    # querying below the annulus is meaningless and must fail
    with pytest.raises(ValueError):
        prof.state(0.1)


def test_annulus_rejects_bad_radii():
    with pytest.raises(ValueError):
        singular_profile_solve(P157, 2.0, 1.0)


def test_boundary_form_oracle_on_non_solution():
    """The boundary bilinear form is an identity for arbitrary radial
    functions: the scaling pairing of (-Delta)^3 u over a ball equals the
    boundary form, gaussian included.  Derived independently of the solver,
    so a symbolic gaussian cross-checks the frozen coefficient table."""
    n = 9
    R = 1.4
    c = (n - 6) / 2.0
    r = sp.Symbol("r", positive=True)
    uexpr = sp.exp(-(r**2) / 2)

    def lap(f):
        return sp.diff(f, r, 2) + (n - 1) / r * sp.diff(f, r)

    tri = -lap(lap(lap(uexpr)))
    pair = sp.lambdify(
        r, sp.simplify(tri * (r * sp.diff(uexpr, r) + c * uexpr) * r ** (n - 1)),
        "math",
    )
    bulk, _ = integrate.quad(pair, 0.0, R, epsabs=0.0, epsrel=1e-12, limit=200)
    uders = [float(sp.diff(uexpr, r, j).subs(r, R)) for j in range(6)]
    boundary = sum(
        coeff * R ** (n - 6 + i + j) * uders[i] * uders[j]
        for (i, j), coeff in _beta_table(n).items()
    )
    assert bulk == pytest.approx(boundary, rel=1e-10)
