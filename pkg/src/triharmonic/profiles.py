"""Analytic radial test profiles carrying a single spherical-harmonic mode.

A test function has the separated form u(x) = f(r) Y(theta) where Y is a
unit-normalized spherical harmonic of degree l on S^(n-1).  All angular
integrals then reduce to eigenvalue data: the Laplace-Beltrami eigenvalue is
nu = l(l+n-2), int |Y|^2 = 1 and int |grad_theta Y|^2 = nu.  The radial
factor is one of a small family of closed-form shapes whose derivatives (up
to order 6, as needed by the sixth-order operator) are generated
symbolically once and evaluated numerically afterwards.

Every shape is stored as amplitude * phi(r / scale) for a fixed unit shape
phi, so the parabolic rescaling u -> lam^k u(lam x) acts exactly on the
parameters: amplitude *= lam^k, scale /= lam.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Tuple

import numpy as np
import sympy as sp

MAX_DERIV = 6

#: supported radial shapes
KINDS = ("gaussian", "power", "bump", "exp_decay")

_shape_cache: dict = {}


def _unit_shape(kind: str, extra: tuple):
    """Return (phi_expr, symbol, support) for the unit shape."""
    x = sp.Symbol("x", positive=True)
    if kind == "gaussian":
        return sp.exp(-(x**2) / 2), x, None
    if kind == "power":
        (exponent,) = extra
        if isinstance(exponent, Fraction):
            e = sp.Rational(exponent.numerator, exponent.denominator)
        else:
            e = sp.sympify(exponent)
        return x ** (-e), x, None
    if kind == "bump":
        coeffs = extra[0]
        poly = sum(sp.sympify(c) * x ** (2 * i) for i, c in enumerate(coeffs))
        return poly * (1 - x**2) ** 7, x, 1.0
    if kind == "exp_decay":
        return sp.exp(-x), x, None
    raise ValueError(f"unknown shape kind {kind!r}")


def _shape_derivatives(kind: str, extra: tuple):
    key = (kind, extra)
    if key not in _shape_cache:
        expr, x, support = _unit_shape(kind, extra)
        funcs = []
        for j in range(MAX_DERIV + 1):
            fj = sp.lambdify(x, sp.diff(expr, x, j), "numpy")
            funcs.append(fj)
        _shape_cache[key] = (funcs, support)
    return _shape_cache[key]


def _freeze_extra(kind: str, extra) -> tuple:
    if kind == "bump":
        (coeffs,) = extra
        return (tuple(coeffs),)
    return tuple(extra)


@dataclass(frozen=True)
class RadialShape:
    """Closed-form radial factor amplitude * phi(r / scale)."""

    kind: str
    amplitude: float = 1.0
    scale: float = 1.0
    extra: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown shape kind {self.kind!r}")
        object.__setattr__(self, "extra", _freeze_extra(self.kind, self.extra))
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def support(self):
        """Outer support radius, or None for shapes of full support."""
        _, sup = _shape_derivatives(self.kind, self.extra)
        return None if sup is None else sup * self.scale

    def deriv(self, j: int, rr):
        """j-th radial derivative evaluated at rr (scalar or array)."""
        if not 0 <= j <= MAX_DERIV:
            raise ValueError(f"derivative order {j} out of range")
        funcs, sup = _shape_derivatives(self.kind, self.extra)
        rr = np.asarray(rr, dtype=float)
        xx = rr / self.scale
        if sup is None:
            vals = funcs[j](xx)
        else:
            inside = xx < sup
            vals = np.where(inside, funcs[j](np.where(inside, xx, 0.5 * sup)), 0.0)
        out = self.amplitude * self.scale ** (-j) * np.asarray(vals, dtype=float)
        return out if out.shape else float(out)

    def power_exponent(self) -> float:
        if self.kind != "power":
            raise ValueError("not a power shape")
        return float(self.extra[0])


def gaussian(sigma: float = 1.0, amplitude: float = 1.0) -> RadialShape:
    return RadialShape("gaussian", amplitude=amplitude, scale=sigma)


def power(exponent, amplitude: float = 1.0) -> RadialShape:
    """r^(-exponent) profile; exponent may be a Fraction for exactness."""
    return RadialShape("power", amplitude=amplitude, scale=1.0, extra=(exponent,))


def bump(coeffs=(1.0,), support: float = 1.0, amplitude: float = 1.0) -> RadialShape:
    """(sum_i c_i (r/R)^(2i)) * (1-(r/R)^2)^7 inside r < R, zero outside (C^6)."""
    return RadialShape("bump", amplitude=amplitude, scale=support, extra=(coeffs,))


def exp_decay(rate: float = 1.0, amplitude: float = 1.0) -> RadialShape:
    return RadialShape("exp_decay", amplitude=amplitude, scale=1.0 / rate)


@dataclass(frozen=True)
class HarmonicTestFunction:
    """Separated test function f(r) * Y_l(theta) in dimension n."""

    shape: RadialShape
    mode_degree: int
    dimension: int

    def __post_init__(self):
        if self.mode_degree < 0:
            raise ValueError("mode_degree must be nonnegative")
        if self.dimension < 7:
            raise ValueError("dimension must be at least 7")

    @property
    def nu(self) -> int:
        l, n = self.mode_degree, self.dimension
        return l * (l + n - 2)

    def radial_deriv(self, j: int, rr):
        return self.shape.deriv(j, rr)

    def scale(self, lam: float, k: float) -> "HarmonicTestFunction":
        """Parabolic rescaling u -> lam^k u(lam x), exactly on parameters."""
        if lam <= 0:
            raise ValueError("lam must be positive")
        new_shape = replace(
            self.shape,
            amplitude=self.shape.amplitude * lam ** float(k),
            scale=self.shape.scale / lam,
        )
        return replace(self, shape=new_shape)

    def is_homogeneous(self, k, tol: float = 0.0) -> bool:
        """True when the profile is exactly r^(-k), the scale-invariant degree."""
        if self.shape.kind != "power":
            return False
        return abs(self.shape.power_exponent() - float(k)) <= tol


def rescaled_trace_derivatives(
    u: HarmonicTestFunction, lam: float, k: float, order: int
) -> list:
    """F_i = d^i/dlam^i [lam^k f(lam)] for i = 0..order.

    lam^k f(lam) is the boundary trace of the rescaled function at r = 1;
    these lam-derivatives are the variables of all boundary identities.
    """
    kf = float(k)
    out = []
    for i in range(order + 1):
        total = 0.0
        for j in range(i + 1):
            fall = 1.0
            for m in range(j):
                fall *= kf - m
            total += (
                math.comb(i, j)
                * fall
                * lam ** (kf - j)
                * u.radial_deriv(i - j, lam)
            )
        out.append(total)
    return out


def mixed_derivative_identity_residuals(
    u: HarmonicTestFunction, lam: float, rr: float, k: float
) -> list:
    """Residuals of the chain relating lam- and r-derivatives of u^lam.

    The rescaled function w(r; lam) = lam^k f(lam r) satisfies the operator
    identity lam^i d^i/dlam^i w = prod_{m=0}^{i-1} (k + theta - m) w with
    theta = r d/dr, for i = 1..4.  Returns the four relative residuals at
    the sample point (lam, rr).
    """
    kf = float(k)

    def w_r_deriv(j):
        return lam ** (kf + j) * u.radial_deriv(j, lam * rr)

    def w_lam_deriv(i):
        total = 0.0
        for j in range(i + 1):
            fall = 1.0
            for m in range(j):
                fall *= kf - m
            total += (
                math.comb(i, j)
                * fall
                * lam ** (kf - j)
                * rr ** (i - j)
                * u.radial_deriv(i - j, lam * rr)
            )
        return total

    # theta^m = sum_j S(m, j) r^j d^j/dr^j  (Stirling numbers, 2nd kind)
    stirling = {
        0: {0: 1},
        1: {1: 1},
        2: {1: 1, 2: 1},
        3: {1: 1, 2: 3, 3: 1},
        4: {1: 1, 2: 7, 3: 6, 4: 1},
    }
    t = sp.Symbol("t")
    kk = sp.Float(kf, 17)
    residuals = []
    for i in range(1, 5):
        prod = sp.Integer(1)
        for m in range(i):
            prod *= kk + t - m
        poly = sp.Poly(sp.expand(prod), t)
        rhs = 0.0
        for (mdeg,), coeff in poly.terms():
            for j, s_cnt in stirling[mdeg].items():
                rhs += float(coeff) * s_cnt * rr**j * w_r_deriv(j)
        lhs = lam**i * w_lam_deriv(i)
        scale_ref = max(abs(lhs), abs(rhs), 1e-300)
        residuals.append(abs(lhs - rhs) / scale_ref)
    return residuals
