"""Exact univariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values stored lowest-degree first.
Everything here is exact: no rounding is performed anywhere, which is what
lets the Sturm machinery downstream hand out sign certificates instead of
floating-point guesses.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[Fraction, int]


def _as_fraction(x: Rat) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Polynomial:
    """Immutable univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of x**i.  Trailing zeros are stripped so
    the degree invariant (leading coefficient nonzero unless the zero
    polynomial) holds by construction.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Rat], var: str = "x"):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, *args):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var: str = "x") -> "Polynomial":
        return cls((), var)

    @classmethod
    def constant(cls, c: Rat, var: str = "x") -> "Polynomial":
        return cls((c,), var)

    @classmethod
    def x(cls, var: str = "x") -> "Polynomial":
        return cls((0, 1), var)

    @classmethod
    def from_monomials(cls, terms: Sequence[tuple[int, Rat]], var: str = "x") -> "Polynomial":
        """Build from (degree, coefficient) pairs; repeated degrees add."""
        if not terms:
            return cls.zero(var)
        top = max(d for d, _ in terms)
        cs = [Fraction(0)] * (top + 1)
        for d, c in terms:
            if d < 0:
                raise ValueError("negative degree")
            cs[d] += _as_fraction(c)
        return cls(cs, var)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __call__(self, x: Rat) -> Fraction:
        """Exact evaluation by Horner's rule."""
        acc = Fraction(0)
        xf = _as_fraction(x)
        for c in reversed(self.coeffs):
            acc = acc * xf + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                parts.append(f"{c}")
            elif d == 1:
                parts.append(f"{c}*{self.var}")
            else:
                parts.append(f"{c}*{self.var}^{d}")
        return "Polynomial(" + " + ".join(parts) + ")"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(other.coeffs):
            cs[i] += c
        return Polynomial(cs, self.var)

    def __radd__(self, other) -> "Polynomial":
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "Polynomial":
        return self.__add__(self._coerce(other).__neg__())

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.var)
        cs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                cs[i + j] += a * b
        return Polynomial(cs, self.var)

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.var)
        raise TypeError(f"cannot coerce {type(other)!r} to Polynomial")

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)), exact, by Horner on polynomial values."""
        acc = Polynomial.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.constant(c, inner.var)
        return acc

    def derivative(self) -> "Polynomial":
        if self.degree < 1:
            return Polynomial.zero(self.var)
        return Polynomial(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.var
        )

    def scale_argument(self, s: Rat) -> "Polynomial":
        """p(s*x) as an exact polynomial."""
        sf = _as_fraction(s)
        return Polynomial(
            [c * sf**i for i, c in enumerate(self.coeffs)], self.var
        )

    # -- division -----------------------------------------------------

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact euclidean division: self = q*other + r with deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 1)
        r = list(self.coeffs)
        d = other.degree
        lc = other.leading_coefficient()
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            s = r[-1] / lc
            e = len(r) - 1 - d
            q[e] = s
            for i, c in enumerate(other.coeffs):
                r[e + i] -= s * c
            r.pop()
        return Polynomial(q, self.var), Polynomial(r, self.var)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd via the euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        lc = a.leading_coefficient()
        return Polynomial([c / lc for c in a.coeffs], self.var)

    def squarefree_part(self) -> "Polynomial":
        """self / gcd(self, self'), normalized monic."""
        if self.degree < 1:
            return self
        g = self.gcd(self.derivative())
        q, r = self.divmod(g)
        if not r.is_zero():
            raise ArithmeticError("gcd division left a remainder")
        lc = q.leading_coefficient()
        return Polynomial([c / lc for c in q.coeffs], self.var)

    def cauchy_root_bound(self) -> Fraction:
        """M = 1 + max |a_i / a_d|: all real roots lie in [-M, M]."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.leading_coefficient())
        m = max(abs(c) for c in self.coeffs[:-1]) if self.degree >= 1 else Fraction(0)
        return 1 + m / lead


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Dispatch helper used by callers that take the operation as data."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "compose":
        return a.compose(b)
    raise ValueError(f"unknown op {op!r}")
