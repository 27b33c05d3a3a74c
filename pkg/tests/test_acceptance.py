"""End-to-end acceptance checks for the full library.

Each test is a self-contained criterion with an explicit wall-clock budget:
threshold dimensions for the critical exponents, dual-route agreement for the
closed forms, exact algebraic identities, sign certificates, the ordering
chain, the finite-difference referee for the energy derivative, pointwise
nonnegativity of the completed-square derivative, the stability flip across
the critical exponent, and the radial solver with its conservation-law check.
"""

import time
from fractions import Fraction

import numpy as np

from triharmonic import energy
from triharmonic.certifier import (
    _min_A2_exact,
    gate_saturating_alpha,
    verify_A2_factorization,
    verify_d0_identity,
    verify_lemma_8_1,
    verify_lemma_8_3,
    verify_lemma_8_4_8_5,
    verify_lemma_8_6,
)
from triharmonic.certificates import VERIFIED
from triharmonic.coefficients import (
    A1_poly_in_k,
    A2_poly_in_k,
    Params,
    STABLE,
    UNSTABLE,
    p_of_k,
    singular_stability,
)
from triharmonic.exponents import (
    FINITE,
    INFINITE,
    d0_enclosure,
    d1_value,
    d2_value,
    d_enclosure,
    enclose,
    exponent_chain_report,
    joseph_lundgren_triharmonic,
    pc_root_oracle,
    pm,
    pm1,
    sqrt,
)
from triharmonic.polynomials import Polynomial
from triharmonic.profiles import (
    HarmonicTestFunction,
    bump,
    exp_decay,
    gaussian,
    power,
)
from triharmonic.radial import (
    pohozaev_sides,
    radial_ivp_solve,
    singular_profile_solve,
    singular_state,
)
from triharmonic.sturm import isolate_roots, refine_root


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.t0 = time.monotonic()

    def check(self):
        elapsed = time.monotonic() - self.t0
        assert elapsed < self.seconds, f"over budget: {elapsed:.2f}s >= {self.seconds}s"


# ------------------------------------------------- 1. threshold dimensions


def test_criterion_1_threshold_dimensions():
    budget = Budget(1.0)
    for n in range(7, 15):
        assert joseph_lundgren_triharmonic(n).kind == INFINITE
    for n in (15, 16, 25, 100):
        assert joseph_lundgren_triharmonic(n).kind == FINITE
    for n in range(7, 31):
        assert pm(n).kind == INFINITE
    for n in (31, 32, 60):
        assert pm(n).kind == FINITE
    for n in range(7, 21):
        assert pm1(n).kind == INFINITE
    assert pm1(21).kind == FINITE
    budget.check()


# ----------------------------------------- 2. dual-route critical exponent


def test_criterion_2_closed_form_matches_root_oracle():
    budget = Budget(30.0)
    width = Fraction(1, 10**12)
    for n in range(15, 201):
        closed = joseph_lundgren_triharmonic(n, width).value
        oracle = pc_root_oracle(n, width)
        assert closed.intersects(oracle)
        diff = abs(float(closed.mid - oracle.mid))
        assert diff < 1e-10, (n, diff)
    budget.check()


# ------------------------------------- 3. radical constants and the window


def test_criterion_3_radical_constants_and_negativity_window():
    budget = Budget(10.0)

    d0_15 = d0_enclosure(15, Fraction(1, 10**8))
    assert abs(float(d0_15.mid) - 186.0929) < 1e-3
    d0_big = d0_enclosure(10**6, Fraction(1, 10**8))
    assert 128.0 < float(d0_big.mid) < 128.01

    assert A2_poly_in_k(21)(Fraction(0)) == 2592

    # the split-parameter gate at n = 21, with the exact saturating value:
    # the middle-coefficient negativity window endpoints come out of the
    # quartic (A1 + 12)^2 - 12 alpha A2 in the homogeneity parameter
    alpha = gate_saturating_alpha(_min_A2_exact(21)[0])
    shifted = A1_poly_in_k(21) + Polynomial((Fraction(12),))
    q = shifted * shifted - A2_poly_in_k(21) * (12 * alpha)
    roots = []
    for lo, hi in isolate_roots(q):
        lo2, hi2 = refine_root(q, lo, hi, Fraction(1, 10**9))
        roots.append(float((lo2 + hi2) / 2))
    roots.sort()
    assert abs(roots[0] - (-0.5941782055)) < 1e-6
    assert abs(roots[1] - 4.483334837) < 1e-6

    # left edge of the region where A1 + 12 itself turns negative
    lo, hi = isolate_roots(shifted)[0]
    lo2, hi2 = refine_root(shifted, lo, hi, Fraction(1, 10**9))
    assert abs(float((lo2 + hi2) / 2) - 0.05352432355) < 1e-6
    budget.check()


# ----------------------------------------------- 4. exact algebraic layer


def test_criterion_4_exact_identities_and_misprint_detection():
    budget = Budget(10.0)

    cert = verify_A2_factorization(7, 60)
    assert cert.status == VERIFIED

    for n in range(7, 61):
        assert d1_value(n) ** 2 - 36**2 * d2_value(n) == 256**3 * (3 * n**2 + 4) ** 3

    cert = verify_d0_identity()
    assert cert.status == VERIFIED
    checks = {c["check"]: c for c in cert.witness["checks"]}
    displayed = checks["reading-as-displayed-with-squared-inner-poly"]
    assert displayed["status"] == "falsified"
    assert displayed["lhs_degree"] != displayed["rhs_degree"]

    cert = verify_lemma_8_1()
    assert cert.status == VERIFIED
    assert all(c["status"] == "verified" for c in cert.witness["checks"])
    budget.check()


# --------------------------------------------------- 5. sign certificates


def test_criterion_5_sign_certificates_and_radical_bound():
    budget = Budget(300.0)

    cert = verify_lemma_8_3(n_max=500)
    assert cert.status == VERIFIED
    kinds = [c["check"] for c in cert.witness["checks"]]
    assert "direct-separation-scan" in kinds

    # sampled extension of the radical bound d(n) < sqrt(n) out to 1e4
    width = Fraction(1, 10**8)
    sample = sorted({int(round(x)) for x in np.geomspace(500, 10**4, 25)})
    for n in sample:
        assert d_enclosure(n, width).certainly_lt(enclose(sqrt(n), width))

    assert verify_lemma_8_4_8_5((36, 100), (12, 100)).status == VERIFIED
    assert verify_lemma_8_6(50).status == VERIFIED
    budget.check()


# -------------------------------------------------- 6. the ordering chain


def test_criterion_6_exponent_ordering_chain():
    budget = Budget(30.0)
    for n in range(15, 201):
        rep = exponent_chain_report(n)
        for verdict in rep.ordering_verdicts:
            assert verdict.status == "verified", (n, verdict)
        claims = {v.claim for v in rep.ordering_verdicts}
        assert "sobolev < pc" in claims
        assert "pc < pm" in claims
        if n >= 21:
            assert "pm1 < pm" in claims
    budget.check()


# --------------------------------------- 7. finite-difference derivative


def test_criterion_7_fd_referee_over_profile_matrix():
    budget = Budget(120.0)
    cases = [
        Params(12, Fraction(4)),
        Params(15, Fraction(3)),
        Params(21, Fraction(2)),
    ]
    shapes = [gaussian(0.7), exp_decay(1.3), bump((1.0, 0.5), 1.4)]
    lambdas = (0.7, 0.9, 1.1, 1.4, 1.8)
    for params in cases:
        for shape in shapes:
            for l in (0, 2):
                u = HarmonicTestFunction(shape, l, params.n)
                for lam in lambdas:
                    rep = energy.fd_check(u, lam, params)
                    rel = abs(rep.dE_fd_richardson - rep.dE_formula) / abs(
                        rep.dE_formula
                    )
                    assert rel < 1e-6, (params.n, shape.kind, l, lam, rel)
                    assert 1.8 <= rep.convergence_order_estimate <= 2.2

    # homogeneous profiles sit at the scaling fixed point: flat energy
    for params in cases:
        u = HarmonicTestFunction(power(params.k), 0, params.n)
        e1 = energy.energy_E(u, 0.8, params)
        e2 = energy.energy_E(u, 1.7, params)
        scale = max(1.0, abs(e1))
        assert abs(e1 - e2) < 1e-10 * scale
        for lam in (0.8, 1.7):
            assert abs(energy.dE_formula(u, lam, params)) < 1e-12 * scale
    budget.check()


# ------------------------------------ 8. completed-square nonnegativity


def test_criterion_8_completed_square_nonnegative():
    budget = Budget(120.0)
    k_values = {
        15: [Fraction(1), Fraction(3, 2)],
        21: [Fraction(1, 40), Fraction(2)],  # 1/40 is inside the split window
        25: [Fraction(1, 10), Fraction(3)],
        30: [Fraction(1, 10), Fraction(4)],
    }
    for n in (15, 21, 25, 30):
        alpha = float(gate_saturating_alpha(_min_A2_exact(n)[0]))
        for k in k_values[n]:
            params = Params(n, p_of_k(k))
            for shape in (gaussian(0.8), exp_decay(1.0)):
                for l in (0, 2):
                    u = HarmonicTestFunction(shape, l, n)
                    for lam in (0.6, 1.0, 1.6, 2.2):
                        val = energy.dE_formula(
                            u, lam, params, energy.VARIANT_MONOTONE, alpha=alpha
                        )
                        assert val >= -1e-10, (n, float(k), shape.kind, l, lam, val)
    budget.check()


# ------------------------------------------------ 9. the stability flip


def test_criterion_9_stability_flips_at_critical_exponent():
    budget = Budget(5.0)
    for n in (15, 20, 50):
        pc = joseph_lundgren_triharmonic(n, Fraction(1, 10**15)).value.mid
        below = Params(n, pc * (1 - Fraction(1, 1000)))
        above = Params(n, pc * (1 + Fraction(1, 1000)))
        assert singular_stability(below) == UNSTABLE
        assert singular_stability(above) == STABLE
    budget.check()


# ------------------------------------------ 10. radial initial value run


def test_criterion_10_radial_solver_and_balance_law():
    budget = Budget(60.0)
    params = Params(15, Fraction(7))

    prof = radial_ivp_solve(params, 1.0, r_max=3.0, tol=1e-10)
    finer = radial_ivp_solve(params, 1.0, r_max=3.0, tol=1e-11)
    drift = float(np.max(np.abs(prof.state(3.0) - finer.state(3.0))))
    assert drift <= 10.0 * prof.tol * max(1.0, float(np.max(np.abs(prof.state(3.0)))))

    sides = pohozaev_sides(prof, 2.0)
    assert sides["residual_rel"] < 1e-6

    annulus = singular_profile_solve(params, 0.5, 2.5, tol=1e-12)
    worst = 0.0
    for r in np.linspace(0.5, 2.5, 9):
        exact = np.array(singular_state(params, float(r)))
        got = np.array(annulus.state(float(r)))
        worst = max(worst, float(np.max(np.abs(got - exact) / np.abs(exact))))
    assert worst < 1e-9
    budget.check()
