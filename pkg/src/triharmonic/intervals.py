"""Rational-endpoint interval arithmetic and validated radical enclosures.

An `Interval` always contains the exact real value it stands for: every
operation rounds outward.  Square and cube roots are bounded through scaled
integer roots (gmpy2), so a result at working precision m is correct to
within one unit in the last of m binary places, never merely "close".

`RadicalExpr` is a tiny expression tree over rational leaves with
+, -, *, /, sqrt, real cbrt and integer powers; `enclose` evaluates it to a
requested width by doubling the working precision until the width is met or
a configurable bit cap is exhausted.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2

Rat = Union[Fraction, int]

DEFAULT_MAX_BITS = 4096
MAX_BITS_ENV = "TRIHARMONIC_MAX_BITS"


def precision_cap() -> int:
    """Bit cap for enclosure refinement; override with TRIHARMONIC_MAX_BITS."""
    raw = os.environ.get(MAX_BITS_ENV)
    if raw is None:
        return DEFAULT_MAX_BITS
    cap = int(raw)
    if cap < 8:
        raise ValueError("precision cap must be at least 8 bits")
    return cap


class DomainError(ValueError):
    """Square root of a certified-negative operand, or similar."""


class InconclusivePrecision(ArithmeticError):
    """A sign or width could not be resolved within the precision cap."""


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: Rat) -> "Interval":
        xf = Fraction(x)
        return cls(xf, xf)

    @classmethod
    def of(cls, lo: Rat, hi: Rat) -> "Interval":
        return cls(Fraction(lo), Fraction(hi))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x: Rat) -> bool:
        xf = Fraction(x)
        return self.lo <= xf <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    # -- certified sign / order queries -------------------------------

    def sign(self) -> int | None:
        """+1, -1, or 0 for the exact point zero; None if unresolved."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 and self.hi == 0:
            return 0
        return None

    def certainly_lt(self, other: "Interval") -> bool:
        return self.hi < other.lo

    def certainly_gt(self, other: "Interval") -> bool:
        return self.lo > other.hi

    # -- arithmetic (outward by exactness: all endpoint arithmetic is
    #    exact rational arithmetic, so no rounding step is needed) -----

    def __add__(self, other: "Interval | Rat") -> "Interval":
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __radd__(self, other: Rat) -> "Interval":
        return self.__add__(other)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval | Rat") -> "Interval":
        return self.__add__(-_as_interval(other))

    def __rsub__(self, other: Rat) -> "Interval":
        return _as_interval(other).__sub__(self)

    def __mul__(self, other: "Interval | Rat") -> "Interval":
        other = _as_interval(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    def __rmul__(self, other: Rat) -> "Interval":
        return self.__mul__(other)

    def __truediv__(self, other: "Interval | Rat") -> "Interval":
        other = _as_interval(other)
        if other.lo <= 0 <= other.hi:
            raise InconclusivePrecision("division by an interval containing zero")
        inv = Interval(1 / other.hi, 1 / other.lo)
        return self.__mul__(inv)

    def __rtruediv__(self, other: Rat) -> "Interval":
        return _as_interval(other).__truediv__(self)

    def __pow__(self, e: int) -> "Interval":
        if e < 0:
            return (1 / self) ** (-e)
        if e == 0:
            return Interval.point(1)
        if e % 2 == 1 or self.lo >= 0:
            return Interval(self.lo**e, self.hi**e)
        if self.hi <= 0:
            return Interval(self.hi**e, self.lo**e)
        # even power of a straddling interval
        return Interval(Fraction(0), max(self.lo**e, self.hi**e))

    def __float__(self) -> float:
        return float(self.mid)

    def __repr__(self) -> str:
        return f"Interval({self.lo}, {self.hi})"


def _as_interval(x: "Interval | Rat") -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.point(x)


# -- scaled-integer root enclosures -----------------------------------


def _sqrt_fraction_lower(x: Fraction, bits: int) -> Fraction:
    """Largest dyadic p/2^bits-style rational with value**2 <= x."""
    if x < 0:
        raise DomainError("sqrt of negative rational")
    num, den = x.numerator, x.denominator
    s = int(gmpy2.isqrt(num * den << (2 * bits)))
    return Fraction(s, den << bits)


def _sqrt_fraction_upper(x: Fraction, bits: int) -> Fraction:
    if x < 0:
        raise DomainError("sqrt of negative rational")
    num, den = x.numerator, x.denominator
    s, exact = gmpy2.isqrt_rem(num * den << (2 * bits))
    s = int(s) + (0 if exact == 0 else 1)
    return Fraction(s, den << bits)


def sqrt_interval(x: Interval, bits: int) -> Interval:
    """Outward enclosure of sqrt over a nonnegative interval."""
    if x.hi < 0:
        raise DomainError("sqrt of certified-negative interval")
    if x.lo < 0:
        raise InconclusivePrecision("sqrt operand straddles zero")
    return Interval(_sqrt_fraction_lower(x.lo, bits), _sqrt_fraction_upper(x.hi, bits))


def _cbrt_fraction_lower(x: Fraction, bits: int) -> Fraction:
    if x < 0:
        return -_cbrt_fraction_upper(-x, bits)
    num, den = x.numerator, x.denominator
    t, _ = gmpy2.iroot(num * den * den << (3 * bits), 3)
    return Fraction(int(t), den << bits)


def _cbrt_fraction_upper(x: Fraction, bits: int) -> Fraction:
    if x < 0:
        return -_cbrt_fraction_lower(-x, bits)
    num, den = x.numerator, x.denominator
    t, exact = gmpy2.iroot(num * den * den << (3 * bits), 3)
    t = int(t) + (0 if exact else 1)
    return Fraction(t, den << bits)


def cbrt_interval(x: Interval, bits: int) -> Interval:
    """Outward enclosure of the real cube root (any sign)."""
    return Interval(_cbrt_fraction_lower(x.lo, bits), _cbrt_fraction_upper(x.hi, bits))


# -- radical expression trees -----------------------------------------


class RadicalExpr:
    """Expression tree over rational leaves, closed under +,-,*,/,sqrt,cbrt,**.

    Instances are immutable; evaluation happens only through `enclose`.
    """

    __slots__ = ("op", "args")

    def __init__(self, op: str, args: tuple):
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "args", args)

    def __setattr__(self, *a):
        raise AttributeError("RadicalExpr is immutable")

    @classmethod
    def const(cls, x: Rat) -> "RadicalExpr":
        return cls("const", (Fraction(x),))

    @staticmethod
    def _wrap(x: "RadicalExpr | Rat") -> "RadicalExpr":
        if isinstance(x, RadicalExpr):
            return x
        return RadicalExpr.const(x)

    def __add__(self, other):
        return RadicalExpr("add", (self, self._wrap(other)))

    def __radd__(self, other):
        return RadicalExpr("add", (self._wrap(other), self))

    def __sub__(self, other):
        return RadicalExpr("sub", (self, self._wrap(other)))

    def __rsub__(self, other):
        return RadicalExpr("sub", (self._wrap(other), self))

    def __mul__(self, other):
        return RadicalExpr("mul", (self, self._wrap(other)))

    def __rmul__(self, other):
        return RadicalExpr("mul", (self._wrap(other), self))

    def __truediv__(self, other):
        return RadicalExpr("div", (self, self._wrap(other)))

    def __rtruediv__(self, other):
        return RadicalExpr("div", (self._wrap(other), self))

    def __neg__(self):
        return RadicalExpr("sub", (RadicalExpr.const(0), self))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("only integer powers")
        return RadicalExpr("pow", (self, e))

    def sqrt(self) -> "RadicalExpr":
        return RadicalExpr("sqrt", (self,))

    def cbrt(self) -> "RadicalExpr":
        return RadicalExpr("cbrt", (self,))

    def _eval(self, bits: int) -> Interval:
        op = self.op
        if op == "const":
            return Interval.point(self.args[0])
        if op == "pow":
            return self.args[0]._eval(bits) ** self.args[1]
        if op == "sqrt":
            inner = self.args[0]._eval(bits)
            if inner.hi < 0:
                raise DomainError("sqrt of certified-negative subexpression")
            return sqrt_interval(inner, bits)
        if op == "cbrt":
            return cbrt_interval(self.args[0]._eval(bits), bits)
        a = self.args[0]._eval(bits)
        b = self.args[1]._eval(bits)
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        if op == "mul":
            return a * b
        if op == "div":
            return a / b
        raise ValueError(f"unknown op {op!r}")


def sqrt(x: "RadicalExpr | Rat") -> RadicalExpr:
    return RadicalExpr._wrap(x).sqrt()


def cbrt(x: "RadicalExpr | Rat") -> RadicalExpr:
    return RadicalExpr._wrap(x).cbrt()


def enclose(
    expr: "RadicalExpr | Rat",
    width: Rat,
    start_bits: int = 64,
    max_bits: int | None = None,
) -> Interval:
    """Enclosure of `expr` with certified width <= `width`.

    Doubles the working precision until the width target is met.  Raises
    InconclusivePrecision if the cap (default: precision_cap()) is reached,
    and DomainError for a sqrt of a certified-negative operand.
    """
    expr = RadicalExpr._wrap(expr)
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    cap = precision_cap() if max_bits is None else max_bits
    bits = min(start_bits, cap)
    while True:
        try:
            result = expr._eval(bits)
        except InconclusivePrecision:
            result = None
        if result is not None and result.width <= width:
            return result
        if bits >= cap:
            raise InconclusivePrecision(
                f"width target {width} not reached at {bits} bits"
            )
        bits = min(2 * bits, cap)
