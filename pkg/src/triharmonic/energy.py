"""Scaled energy functional, exact derivative formulas, and their referees.

For a separated test function u = f(r) Y_l(theta) the rescaled energy

    Ebar(u, lam) = lam^(2k+6-n) ( int_{B_lam} |grad Delta u|^2 / 2
                                  - int_{B_lam} |u|^(p+1) / (p+1) ),
    k = 6/(p-1),

reduces to one-dimensional quadratures through the mode eigenvalue
nu = l(l+n-2) and the nonlinearity's angular constant int |Y|^(p+1).  The
full energy adds a boundary quadratic form in the trace variables
F_i = d^i/dlam^i [lam^k f(lam)], chosen so that the derivative identity

    dE/dlam = D(lam) + [sum-of-squares display in F_1, F_2, F_3]

holds exactly, where D pairs the Euler-Lagrange operator with the scaling
vector field (D vanishes on solutions).  The boundary form was obtained by
symbolic integration by parts against generic polynomial profiles and is
hard-coded below; its correctness is enforced by the finite-difference
referee, which compares dE_formula with central differences of energy_E.

The derivative display's final square admits two readings (a mixed
radial-angular trace derivative, or a pure surface-Laplacian term); only the
mixed reading is consistent, and the referee selects it empirically rather
than by fiat.  A monotone variant of the energy replaces the display by its
completed-square (Jordan) form, whose coefficient positivity is exactly what
the certification layer establishes; its value is therefore nonnegative for
certified parameters.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
import sympy as sp
from scipy import integrate, optimize, special

from .coefficients import Params, A1A2B1, alpha_beta, deltas
from .profiles import HarmonicTestFunction, rescaled_trace_derivatives

__all__ = [
    "EnergyConventions",
    "EnergyReport",
    "sphere_area",
    "angular_power_integral",
    "energy_E",
    "bulk_pairing",
    "dE_formula",
    "fd_check",
    "jordan_d1",
    "jordan_residual",
    "saturating_split_parameter",
    "monotonicity_bound_check",
    "printed_boundary_comparison",
]

READING_MIXED = "mixed"
READING_ANGULAR = "angular"


@dataclass(frozen=True)
class EnergyConventions:
    """Adjustable readings for the printed functional's stray symbols.

    The defaults are the corrected readings (stray factor dropped, scaling
    exponent six, radial coefficient twelve); the alternatives exist so the
    finite-difference referee can adjudicate instead of hard-coding them.
    """

    derivative_reading: str = READING_MIXED
    printed_coefficient_fourteen: bool = False
    printed_laplacian_reading: str = "plain"  # "plain" | "angular"
    printed_scaling_exponent_doubled: bool = False
    quad_epsrel: float = 1e-11
    quad_limit: int = 300


DEFAULT_CONVENTIONS = EnergyConventions()


@dataclass(frozen=True)
class EnergyReport:
    """Energy value with formula-vs-finite-difference referee data."""

    lam: float
    E: float
    dE_formula: float
    dE_fd: float
    fd_step: float
    convergence_order_estimate: float
    residuals: tuple = ()
    steps: tuple = ()
    reading: str = READING_MIXED
    dE_fd_richardson: float = float("nan")


def sphere_area(n: int) -> float:
    """Surface area of the unit sphere S^(n-1)."""
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


_angular_cache: dict = {}


def angular_power_integral(n: int, l: int, p: float) -> float:
    """int_{S^(n-1)} |Y_l|^(p+1) for the unit-normalized zonal harmonic."""
    key = (n, l, round(float(p), 12))
    if key in _angular_cache:
        return _angular_cache[key]
    omega = sphere_area(n)
    if l == 0:
        val = omega ** (1.0 - (p + 1.0) / 2.0)
    else:
        alpha = (n - 2) / 2.0
        poly = special.gegenbauer(l, alpha)
        band = sphere_area(n - 1)

        def weight(theta):
            return band * math.sin(theta) ** (n - 2)

        norm2, _ = integrate.quad(
            lambda th: weight(th) * poly(math.cos(th)) ** 2, 0.0, math.pi,
            epsabs=0.0, epsrel=1e-12, limit=200,
        )
        c_norm = norm2 ** -0.5
        val, _ = integrate.quad(
            lambda th: weight(th) * abs(c_norm * poly(math.cos(th))) ** (p + 1.0),
            0.0, math.pi, epsabs=0.0, epsrel=1e-12, limit=200,
        )
    _angular_cache[key] = val
    return val


def _float_params(params: Params):
    n = float(params.n)
    p = float(params.p)
    k = float(params.k)
    return n, p, k


def _check_integrable(u: HarmonicTestFunction, params: Params):
    if u.shape.kind == "power":
        e = u.shape.power_exponent()
        n, p, _ = _float_params(params)
        if not (n - 6.0 - 2.0 * e > 0.0 and n - e * (p + 1.0) > 0.0):
            raise ValueError("divergent bulk integral")


def _quad_points(u: HarmonicTestFunction, lam: float):
    sup = u.shape.support
    if sup is None:
        return None
    edge = sup / lam
    return [edge] if 0.0 < edge < 1.0 else None


def _quad(fn, conv: EnergyConventions, points=None):
    with warnings.catch_warnings():
        # integrable endpoint singularities of power profiles converge
        # slowly in panel count but well within the requested tolerance
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, _ = integrate.quad(
            fn, 0.0, 1.0, epsabs=0.0, epsrel=conv.quad_epsrel,
            limit=conv.quad_limit, points=points,
        )
    return val


def _ft(u: HarmonicTestFunction, lam: float, k: float, j: int, rr):
    """j-th r-derivative of the rescaled radial factor lam^k f(lam r)."""
    return lam ** (k + j) * u.radial_deriv(j, lam * rr)


def _bulk_linear(u, lam, params, conv) -> float:
    n, _, k = _float_params(params)
    nu = float(u.nu)

    def integrand(rr):
        f0 = _ft(u, lam, k, 0, rr)
        f1 = _ft(u, lam, k, 1, rr)
        f2 = _ft(u, lam, k, 2, rr)
        f3 = _ft(u, lam, k, 3, rr)
        A = f2 + (n - 1) / rr * f1 - nu * f0 / rr**2
        Ap = (
            f3
            + (n - 1) / rr * f2
            - (n - 1) / rr**2 * f1
            - nu / rr**2 * f1
            + 2.0 * nu / rr**3 * f0
        )
        return 0.5 * (Ap**2 + nu * (A / rr) ** 2) * rr ** (n - 1)

    return _quad(integrand, conv, points=_quad_points(u, lam))


def _bulk_nonlinear(u, lam, params, conv) -> float:
    n, p, k = _float_params(params)
    c_ang = angular_power_integral(params.n, u.mode_degree, p)

    def integrand(rr):
        f0 = _ft(u, lam, k, 0, rr)
        return abs(f0) ** (p + 1.0) * rr ** (n - 1)

    return -c_ang / (p + 1.0) * _quad(integrand, conv, points=_quad_points(u, lam))


# mode-reduced polar coefficients of the iterated Laplacian:
# (Delta_nu)^3 f = sum_j q_j(n, nu) f^(j) / r^(6-j)
def _tri_laplacian_coeffs(n: float, nu: float):
    return (
        -nu * (2 * n + nu - 8) * (4 * n + nu - 24),
        3 * (n - 5) * (n**2 + 3 * n * nu - 4 * n + nu**2 - 11 * nu + 3),
        -3 * (n**3 + n**2 * nu - 9 * n**2 - 10 * n * nu + 23 * n - nu**2 + 23 * nu - 15),
        (n - 3) * (n**2 - 9 * n - 6 * nu + 8),
        3 * (n**2 - 4 * n - nu + 3),
        3 * (n - 1),
        1.0,
    )


def bulk_pairing(
    u: HarmonicTestFunction, lam: float, params: Params,
    conv: EnergyConventions = DEFAULT_CONVENTIONS,
) -> float:
    """D(lam): Euler-Lagrange operator paired with the scaling derivative.

    D = int_{B_1} ((-Delta)^3 u^lam - |u^lam|^(p-1) u^lam) d(u^lam)/dlam;
    identically zero when u solves the equation or is scale-invariant.
    """
    _check_integrable(u, params)
    n, p, k = _float_params(params)
    nu = float(u.nu)
    q = _tri_laplacian_coeffs(n, nu)
    c_ang = angular_power_integral(params.n, u.mode_degree, p)

    def integrand(rr):
        f = [_ft(u, lam, k, j, rr) for j in range(7)]
        tri = sum(q[j] * f[j] / rr ** (6 - j) for j in range(7))
        dlam = (k / lam) * f[0] + lam**k * rr * u.radial_deriv(1, lam * rr)
        return (-tri - c_ang * abs(f[0]) ** (p - 1.0) * f[0]) * dlam * rr ** (n - 1)

    return _quad(integrand, conv, points=_quad_points(u, lam))


def _correction_form_coeffs(k: float, n: float, nu: float) -> dict:
    """Boundary form B with dEbar/dlam = D + diagonal + dB/dlam."""
    return {
        (0, 0): (
            -k * (k + 2) * (k - n + 2) * (k**2 - k * n + 6 * k - 4 * n + 16) / 2.0
            + (k**3 - k**2 * n + 8 * k**2 - 6 * k * n + 20 * k - 4 * n + 16) * nu
            - (k + 6) / 2.0 * nu**2
        ),
        (0, 1): (
            k * (k - 3) * (k + 2) * (k - n + 2)
            + (-k * n + 3 * k + 6) * nu
            - nu**2
        ),
        (0, 2): -k * (k + 2) * (k - n + 2) + (k + 2) * nu,
        (1, 1): (
            -(8 * k**3 - 10 * k**2 * n + 52 * k**2 + 3 * k * n**2 - 46 * k * n
              + 149 * k + 6 * n**2 - 58 * n + 124) / 2.0
            + (2 * k - n + 8) * nu
        ),
        (1, 2): 10 * k**2 - 9 * k * n + 41 * k + n**2 - 16 * n + 39 - 4 * nu,
        (1, 3): -2 * (2 * k - n + 4),
        (1, 4): 1.0,
        (2, 2): (3 * k - 2 * n + 20) / 2.0,
        (2, 3): -2.0,
    }


def _shuffle_form_coeffs(k: float, n: float, nu: float) -> dict:
    """Boundary form S with display(mixed reading) = diagonal + dS/dlam."""
    w = k**2 - k * n + n - nu - 1
    return {
        (1, 1): -(2 * k - n + 2) * w,
        (1, 2): 2 * w,
        (2, 2): n + 1 - 2 * k,
    }


def _form_value(coeffs: dict, F: Sequence[float], lam: float) -> float:
    return sum(c * lam ** (i + j) * F[i] * F[j] for (i, j), c in coeffs.items())


def boundary_terms(u: HarmonicTestFunction, lam: float, params: Params) -> float:
    """The energy's boundary quadratic form (-B + S) in the trace variables."""
    n, _, k = _float_params(params)
    nu = float(u.nu)
    F = rescaled_trace_derivatives(u, lam, k, 4)
    b = _correction_form_coeffs(k, n, nu)
    s = _shuffle_form_coeffs(k, n, nu)
    return -_form_value(b, F, lam) + _form_value(s, F, lam)


def energy_E(
    u: HarmonicTestFunction, lam: float, params: Params,
    conv: EnergyConventions = DEFAULT_CONVENTIONS,
) -> float:
    """Rescaled energy including the derivative-consistent boundary terms."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    _check_integrable(u, params)
    return (
        _bulk_linear(u, lam, params, conv)
        + _bulk_nonlinear(u, lam, params, conv)
        + boundary_terms(u, lam, params)
    )


def _display_value(u, lam, params, reading: str) -> float:
    """The boundary sum-of-squares display of the derivative formula."""
    n, _, k = _float_params(params)
    nu = float(u.nu)
    d1, d2, d3, d4 = (float(x) for x in deltas(params))
    al, be = (float(x) for x in alpha_beta(params))
    F = rescaled_trace_derivatives(u, lam, k, 3)
    val = (
        2.0 * lam**5 * F[3] ** 2
        + (10 * d1 - 2 * d2 - 56) * lam**3 * F[2] ** 2
        + (-18 * d1 + 6 * d2 - 4 * d3 + 2 * d4 + 72) * lam * F[1] ** 2
        + 4 * nu * lam**3 * F[2] ** 2
        + (8 * al - 4 * be + 4 * n - 28) * nu * lam * F[1] ** 2
        + 2 * nu**2 * lam * F[1] ** 2
    )
    if reading == READING_MIXED:
        # d/dlam of the Laplacian trace lam^k (lam^2 f'' + (n-1) lam f' - nu f)
        f0, f1, f2, f3 = (u.radial_deriv(j, lam) for j in range(4))
        inner = lam**2 * f2 + (n - 1) * lam * f1 - nu * f0
        d_inner = (
            lam**3 * f3 + (n + 1) * lam**2 * f2 + ((n - 1) - nu) * lam * f1
        ) / lam
        trace_deriv = k * lam ** (k - 1) * inner + lam**k * d_inner
        val += lam * trace_deriv**2
    elif reading == READING_ANGULAR:
        val += nu**2 * lam * F[1] ** 2
    else:
        raise ValueError(f"unknown derivative reading {reading!r}")
    return val


def saturating_split_parameter(n: int, margin: float = 1e-9) -> float:
    """Largest admissible split parameter for the completed-square gates.

    Minimizes the quartic coefficient A2 over the supercritical window and
    saturates the gate 12*alpha/(alpha-1)^2 < min A2, backing off by a small
    margin so the strict inequality survives rounding.
    """
    nn = float(n)

    def a2(kk):
        return 3 * (kk + 1) * (kk + 3) * (kk - nn + 5) * (kk - nn + 3)

    hi = (nn - 6) / 2.0
    res = optimize.minimize_scalar(a2, bounds=(0.0, hi), method="bounded",
                                   options={"xatol": 1e-12})
    m = min(a2(0.0), a2(hi), float(res.fun))
    disc = (2 * m + 12) ** 2 - 4 * m * m
    alpha = ((2 * m + 12) - math.sqrt(disc)) / (2 * m)
    return alpha - margin


def _completed_square_value(u, lam, params, alpha: Optional[float]) -> float:
    n, _, k = _float_params(params)
    nu = float(u.nu)
    A1, A2, B1 = (float(x) for x in A1A2B1(params))
    F = rescaled_trace_derivatives(u, lam, k, 3)
    Q = lam**2 * F[3] + 2.0 * lam * F[2]
    if A1 + 12.0 >= 0.0:
        val = 3.0 * lam * Q**2 + (A1 + 12.0) * lam**3 * F[2] ** 2 + A2 * lam * F[1] ** 2
    else:
        if alpha is None:
            alpha = saturating_split_parameter(params.n)
        w = 2.0 * math.sqrt(3.0 * alpha * A2)
        val = (
            lam * (math.sqrt(3.0) * Q + w / (2.0 * math.sqrt(3.0)) * F[1]) ** 2
            + (A1 + 12.0 + w) * lam**3 * F[2] ** 2
            + ((1.0 - alpha) * A2 - w) * lam * F[1] ** 2
        )
    # angular sector of the exact diagonal; positive throughout the range
    val += 6.0 * nu * lam**3 * F[2] ** 2 + ((B1 - 12.0) * nu + 3.0 * nu**2) * lam * F[1] ** 2
    return val


VARIANT_DERIVATIVE = "derivative"
VARIANT_MONOTONE = "completed-square"


def dE_formula(
    u: HarmonicTestFunction, lam: float, params: Params,
    variant: str = VARIANT_DERIVATIVE,
    conv: EnergyConventions = DEFAULT_CONVENTIONS,
    alpha: Optional[float] = None,
) -> float:
    """Closed-form derivative value.

    "derivative": the exact dE/dlam of energy_E -- the bulk pairing D plus
    the sum-of-squares display under the configured reading.  This is the
    quantity the finite-difference referee checks.

    "completed-square": the Jordan form of the display (squares only, bulk
    pairing excluded): the derivative of the monotone adjusted energy, which
    differs from energy_E by an explicit boundary quadratic form plus the
    antiderivative of D.  Nonnegative whenever the split-parameter gates are
    certified; `alpha` overrides the saturating default in that regime.
    """
    if variant == VARIANT_DERIVATIVE:
        return bulk_pairing(u, lam, params, conv) + _display_value(
            u, lam, params, conv.derivative_reading
        )
    if variant == VARIANT_MONOTONE:
        return _completed_square_value(u, lam, params, alpha)
    raise ValueError(f"unknown variant {variant!r}")


def fd_check(
    u: HarmonicTestFunction, lam: float, params: Params,
    steps: Optional[Sequence[float]] = None,
    conv: EnergyConventions = DEFAULT_CONVENTIONS,
) -> EnergyReport:
    """Finite-difference referee for the derivative formula.

    Central differences of energy_E at three decreasing steps, extrapolated
    through a Neville tableau, compared with dE_formula under both display
    readings; the consistent reading is the one closer to the extrapolated
    derivative (recorded, not hard-coded).  The convergence order is fitted
    from the two largest steps, where quadrature noise is negligible against
    the O(h^2) truncation error.
    """
    if steps is None:
        steps = [1e-2 * lam, 1e-3 * lam, 1e-4 * lam]
    steps = list(steps)
    E0 = energy_E(u, lam, params, conv)
    fds = []
    for h in steps:
        ep = energy_E(u, lam + h, params, conv)
        em = energy_E(u, lam - h, params, conv)
        fds.append((ep - em) / (2.0 * h))
    # Neville tableau over all three steps: the first column removes the
    # h^2 truncation term, the second removes h^4 as well, so profiles with
    # a large fourth-order coefficient still extrapolate cleanly
    if len(steps) >= 3:
        h0, h1, h2 = steps[0], steps[1], steps[2]
        t11 = (fds[1] * h0**2 - fds[0] * h1**2) / (h0**2 - h1**2)
        t21 = (fds[2] * h1**2 - fds[1] * h2**2) / (h1**2 - h2**2)
        rich = (t21 * h0**2 - t11 * h2**2) / (h0**2 - h2**2)
    else:
        h0, h1 = steps[0], steps[1]
        rich = (fds[1] * h0**2 - fds[0] * h1**2) / (h0**2 - h1**2)
    candidates = {}
    D = bulk_pairing(u, lam, params, conv)
    for reading in (READING_MIXED, READING_ANGULAR):
        candidates[reading] = D + _display_value(u, lam, params, reading)
    # adjudicate on the extrapolated value: the two readings can differ by
    # less than the raw truncation error of any single step
    reading = min(candidates, key=lambda rd: abs(rich - candidates[rd]))
    formula = candidates[reading]
    scale_ref = max(abs(formula), 1e-300)
    residuals = tuple(abs(fd - formula) / scale_ref for fd in fds)
    if residuals[0] > 0 and residuals[1] > 0:
        order = math.log(residuals[0] / residuals[1]) / math.log(steps[0] / steps[1])
    else:
        order = 2.0
    return EnergyReport(
        lam=lam,
        E=E0,
        dE_formula=formula,
        dE_fd=fds[1],
        fd_step=steps[1],
        convergence_order_estimate=order,
        residuals=residuals,
        steps=tuple(steps),
        reading=reading,
        dE_fd_richardson=rich,
    )


def jordan_d1(A1: float, c1: float) -> float:
    """Completed-square middle coefficient d1(c1) = A1 - 3 c1^2 + 12 c1."""
    return A1 - 3.0 * c1**2 + 12.0 * c1


def jordan_residual(
    f_expr, A1: float, A2: float,
    c1: float = 2.0, c2: float = 0.0,
    lam_range=(1.0, 2.0),
) -> float:
    """Integrated residual of the completed-square differential identity.

    For smooth scalar f(lam), the cubic-in-derivatives form
      3 lam^5 f'''^2 + A1 lam^3 f''^2 + A2 lam f'^2
    equals
      3 lam (lam^2 f''' + c1 lam f'')^2 + d1 lam (lam f'' + c2 f')^2
      + d2 lam f'^2 + d/dlam(-3 c1 lam^4 f''^2 - c2 d1 lam^2 f'^2)
    with d1 = A1 - 3 c1^2 + 12 c1 and d2 = A2 - (c2^2 - 2 c2) d1.  The
    identity is checked by quadrature over lam_range; returns the absolute
    residual.  f_expr is a sympy expression in a single symbol.
    """
    syms = sorted(f_expr.free_symbols, key=lambda s: s.name)
    if len(syms) != 1:
        raise ValueError("f must be an expression in a single symbol")
    x = syms[0]
    d1 = jordan_d1(A1, c1)
    d2 = A2 - (c2**2 - 2.0 * c2) * d1
    f1 = sp.lambdify(x, sp.diff(f_expr, x, 1), "math")
    f2 = sp.lambdify(x, sp.diff(f_expr, x, 2), "math")
    f3 = sp.lambdify(x, sp.diff(f_expr, x, 3), "math")

    def integrand(t):
        a, b, c = f1(t), f2(t), f3(t)
        lhs = 3.0 * t**5 * c**2 + A1 * t**3 * b**2 + A2 * t * a**2
        rhs = (
            3.0 * t * (t**2 * c + c1 * t * b) ** 2
            + d1 * t * (t * b + c2 * a) ** 2
            + d2 * t * a**2
        )
        return lhs - rhs

    def e_form(t):
        a, b = f1(t), f2(t)
        return -3.0 * c1 * t**4 * b**2 - c2 * d1 * t**2 * a**2

    lo, hi = lam_range
    bulk, _ = integrate.quad(integrand, lo, hi, epsabs=0.0, epsrel=1e-12, limit=200)
    return abs(bulk - (e_form(hi) - e_form(lo)))


def monotonicity_bound_check(
    u: HarmonicTestFunction, params: Params, lam_values: Sequence[float],
    alpha: Optional[float] = None,
    conv: EnergyConventions = DEFAULT_CONVENTIONS,
) -> dict:
    """Ratio floor of the monotone derivative against its lower-bound witness.

    The witness is lam * F_1^2, the mode-frame boundary integral of the
    scaling derivative; the reported floor is an empirical lower estimate of
    the monotonicity constant.  Homogeneous profiles (witness identically
    zero) are reported as skipped.
    """
    n, _, k = _float_params(params)
    rows = []
    ratios = []
    for lam in lam_values:
        val = dE_formula(u, lam, params, VARIANT_MONOTONE, conv, alpha=alpha)
        F = rescaled_trace_derivatives(u, lam, k, 1)
        witness = lam * F[1] ** 2
        row = {"lam": lam, "dE_monotone": val, "witness": witness}
        # deadband relative to the trace magnitude so that rounding noise on
        # an exactly scale-invariant profile does not masquerade as a ratio
        if witness > 1e-20 * (F[0] ** 2 + 1.0):
            row["ratio"] = val / witness
            ratios.append(row["ratio"])
        rows.append(row)
    return {
        "rows": rows,
        "ratio_floor": min(ratios) if ratios else None,
        "skipped": not ratios,
        "min_dE_monotone": min(r["dE_monotone"] for r in rows) if rows else None,
    }


def printed_boundary_comparison(
    u: HarmonicTestFunction, lam: float, params: Params,
    conv: EnergyConventions = DEFAULT_CONVENTIONS,
) -> dict:
    """Evaluate the printed boundary list against the derivative-consistent form.

    The printed functional's boundary terms, under the configured stray-symbol
    readings, are transcribed into the trace frame and compared with the
    boundary form used by energy_E.  The two differ by an explicit quadratic
    form (recorded via this comparison); both are legitimate boundary-gauge
    choices, but only the derivative-consistent one matches the printed
    derivative display, which is why energy_E uses it.
    """
    n, p, k = _float_params(params)
    nu = float(u.nu)
    # stripped trace variables phi_i = lam^(-k) F_i and radial data at lam
    F = rescaled_trace_derivatives(u, lam, k, 4)
    phi = [Fi * lam ** (-k) for Fi in F]
    f = [u.radial_deriv(j, lam) for j in range(3)]
    d1c, d2c, _, d4c = (float(x) for x in deltas(params))
    _, be = (float(x) for x in alpha_beta(params))

    bracket4 = lam**4 * phi[4]
    bracket3 = lam**3 * phi[3]
    bracket1 = lam * phi[1]
    if conv.printed_coefficient_fourteen:
        bracket2 = k * (k - 1) * f[0] + (14.0 * k / 6.0) * lam * f[1] + lam**2 * f[2]
    else:
        bracket2 = lam**2 * phi[2]

    # phi_0' and phi_1' via phi_{i+1} = k phi_i / lam + phi_i'
    phi0p = phi[1] - k * phi[0] / lam
    phi1p = phi[2] - k * phi[1] / lam

    total = 0.0
    total += -bracket4 * bracket1          # quartic cross term
    total += 2.0 * bracket4 * bracket1     # its duplicated companion
    total += -(d1c - 6.0) * bracket3 * bracket1
    if conv.printed_laplacian_reading == "plain":
        lap = lam**2 * f[2] + (n - 1) * lam * f[1] - nu * f[0]
        total += (k + 2.0) * (lap / lam**2) ** 2 * lam**4
    else:
        total += (k + 2.0) * nu**2 * f[0] ** 2 * lam**4
    total += -(24.0 - 6.0 * d1c + d2c) * bracket2 * bracket1
    total += -(9.0 * d1c - 3.0 * d2c - 36.0) * bracket1**2
    total += (d1c - 8.0) * (lam**2 * phi[2]) ** 2
    total += d4c * bracket1 * phi[0]
    t9 = 2.0 * d4c * phi[0] ** 2
    if conv.printed_scaling_exponent_doubled:
        t9 *= lam ** (2.0 * k + 6.0)
    total += t9
    total += 2.0 * nu**2 * phi[0] ** 2
    total += nu**2 * lam * phi[0] * phi0p                     # half d/dlam of nu^2 phi0^2
    total += -4.0 * (be - n + 3.0) * nu * phi[0] ** 2
    total += -(be - n + 3.0) * nu * lam * 2.0 * phi[0] * phi0p
    total += -6.0 * nu * lam * (2.0 * lam * phi[1] ** 2 + 2.0 * lam**2 * phi[1] * phi1p)
    total += lam**3 * nu * 2.0 * phi[1] * phi1p

    printed = total * lam ** (2.0 * k)
    derived = boundary_terms(u, lam, params)
    return {
        "printed": printed,
        "derived": derived,
        "difference": printed - derived,
        "conventions": conv,
    }
