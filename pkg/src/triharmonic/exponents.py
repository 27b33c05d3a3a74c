"""Critical exponents with certified enclosures.

The headline quantity is the stability threshold p_c(n): infinite for
7 <= n <= 14 and, for n >= 15, given in closed form through the nested
radical d(n) built from the cube root d0(n).  Evaluation uses the
rationalized form of d0 (a sum of two positive terms of the same size)
rather than the defining difference, which cancels catastrophically for
large n; the defining form is still evaluated and the two enclosures must
intersect.  An independent oracle recovers p_c from the real-root structure
of the sextic-reduction cubic and is required to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coefficients import c0_cubic
from .intervals import (
    InconclusivePrecision,
    Interval,
    RadicalExpr,
    cbrt,
    enclose,
    precision_cap,
    sqrt,
    sqrt_interval,
)
from .polynomials import Polynomial, Rat
from .sturm import isolate_roots, refine_root

DEFAULT_WIDTH = Fraction(1, 10**12)

FINITE = "finite"
INFINITE = "infinite"


class AmbiguousRootStructure(ArithmeticError):
    """More than one admissible root where the theory asserts uniqueness."""


@dataclass(frozen=True)
class ExponentValue:
    """A critical exponent: either an enclosure or an explicit infinity.

    Ordering convention: every finite value is below infinite.  `value` is
    None exactly when kind == "infinite".
    """

    kind: str
    value: Optional[Interval] = None
    provenance: str = "closed_form"

    def __post_init__(self):
        if self.kind not in (FINITE, INFINITE):
            raise ValueError("kind must be 'finite' or 'infinite'")
        if (self.value is None) != (self.kind == INFINITE):
            raise ValueError("finite values need an enclosure, infinite must not have one")

    @property
    def is_infinite(self) -> bool:
        return self.kind == INFINITE

    @classmethod
    def infinite(cls, provenance: str = "closed_form") -> "ExponentValue":
        return cls(INFINITE, None, provenance)

    @classmethod
    def exact(cls, x: Rat, provenance: str = "closed_form") -> "ExponentValue":
        return cls(FINITE, Interval.point(Fraction(x)), provenance)

    def certainly_lt(self, other: "ExponentValue") -> Optional[bool]:
        """True/False when the order is certified, None when unresolved."""
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        if self.value.certainly_lt(other.value):
            return True
        if other.value.certainly_lt(self.value) or self.value == other.value:
            return False
        return None


def _check_dimension(n: int, minimum: int = 7) -> None:
    if n < minimum:
        raise ValueError("dimension below triharmonic range")


def serrin_exponent(n: int) -> ExponentValue:
    _check_dimension(n)
    return ExponentValue.exact(Fraction(n, n - 6))


def sobolev_exponent(n: int) -> ExponentValue:
    _check_dimension(n)
    return ExponentValue.exact(Fraction(n + 6, n - 6))


# -- the nested radical d0 -> d -> p_c --------------------------------

_D1_POLY = Polynomial(
    [-94976, 20736, 103104, -10368, -3024, 1296, -108], var="n"
)
_D2_POLY = Polynomial(
    [
        6131712,
        -3039232,
        -16644096,
        4818944,
        6915840,
        -1936384,
        -690432,
        251136,
        -30864,
        -4320,
        1800,
        -216,
        9,
    ],
    var="n",
)


def d1_value(n: int) -> Fraction:
    return _D1_POLY(n)


def d2_value(n: int) -> Fraction:
    return _D2_POLY(n)


def _d0_expr_rationalized(n: int) -> RadicalExpr:
    """d0 via the identity d1^2 - 36^2 d2 = (256(3n^2+4))^3.

    36*sqrt(d2) - d1 adds two like-sized positive terms, so no precision is
    lost to cancellation; the defining form subtracts them.
    """
    d1 = d1_value(n)
    d2 = d2_value(n)
    return 256 * Fraction(3 * n**2 + 4) / cbrt(36 * sqrt(d2) - d1)


def _d0_expr_defining(n: int) -> RadicalExpr:
    return -cbrt(d1_value(n) + 36 * sqrt(d2_value(n)))


def d0_enclosure(n: int, width: Rat = DEFAULT_WIDTH) -> Interval:
    """Certified enclosure of the cube-root constant d0(n)."""
    _check_dimension(n, 12)
    if d2_value(n) <= 0:
        raise ValueError("inner radicand not positive at this dimension")
    main = enclose(_d0_expr_rationalized(n), width)
    defining = enclose(_d0_expr_defining(n), width)
    if not main.intersects(defining):
        raise ArithmeticError(
            "the two d0 evaluation routes produced disjoint enclosures"
        )
    return main


def _d_expr(n: int) -> RadicalExpr:
    d0 = _d0_expr_rationalized(n)
    radicand = (
        Fraction(9 * n**2 + 96)
        - Fraction(1536 + 1152 * n**2) / d0
        - Fraction(3, 2) * d0
    )
    return sqrt(radicand) / 6


def d_enclosure(n: int, width: Rat = DEFAULT_WIDTH) -> Interval:
    """Certified enclosure of the radical d(n) entering p_c."""
    _check_dimension(n, 15)
    if d2_value(n) <= 0:
        raise ValueError("inner radicand not positive at this dimension")
    return enclose(_d_expr(n), width)


def joseph_lundgren_triharmonic(
    n: int, width: Rat = DEFAULT_WIDTH
) -> ExponentValue:
    """The stability threshold: infinite through n = 14, then closed form."""
    _check_dimension(n)
    if n <= 14:
        return ExponentValue.infinite()
    d = _d_expr(n)
    p = (Fraction(n + 4) - 2 * d) / (Fraction(n - 8) - 2 * d)
    # interval division refuses a denominator straddling zero, so a returned
    # enclosure certifies the denominator sign as a side effect; confirm the
    # sign is the positive one
    iv = enclose(p, width)
    den = enclose(Fraction(n - 8) - 2 * d, Fraction(1, 2**20))
    if not den.lo > 0:
        raise InconclusivePrecision("denominator sign unresolved")
    return ExponentValue(FINITE, iv, provenance="closed_form")


def pc_root_oracle(n: int, width: Rat = DEFAULT_WIDTH) -> Interval:
    """Independent p_c: root-isolate the reduction cubic, no radicals.

    Finds the real root t* of the cubic with 0 < t* < ((n-8)/2)^2 such that
    k = (n-8)/2 - sqrt(t*) is positive, and returns an enclosure of
    (k+6)/k.  Exactly one admissible root must exist.
    """
    _check_dimension(n, 9)
    width = Fraction(width)
    cubic = c0_cubic(n)
    t_cap = Fraction(n - 8, 2) ** 2
    boxes = isolate_roots(cubic, 0, t_cap)
    if not boxes:
        raise AmbiguousRootStructure(
            "no admissible root: the threshold is infinite at this dimension"
        )
    # admissibility additionally needs k = (n-8)/2 - sqrt(t*) > 0, which the
    # range (0, t_cap) already grants, and k < (n-8)/2 i.e. t* > 0; multiple
    # roots in range would make the selection ambiguous
    if len(boxes) > 1:
        raise AmbiguousRootStructure(
            f"{len(boxes)} roots qualify where uniqueness is asserted"
        )
    t_lo, t_hi = boxes[0]
    if t_lo < 0:
        t_lo = Fraction(0)
    bits = 64
    cap = precision_cap()
    target_t = (t_hi - t_lo) / 4
    half_gap = Fraction(n - 8, 2)
    while True:
        t_lo, t_hi = refine_root(cubic, t_lo, t_hi, target_t)
        try:
            a = sqrt_interval(Interval(max(t_lo, Fraction(0)), t_hi), bits)
            k_iv = half_gap - a
            p_iv = (k_iv + 6) / k_iv
            if p_iv.width <= width:
                return p_iv
        except InconclusivePrecision:
            pass
        if bits >= cap and target_t < Fraction(1, 2 ** (2 * cap)):
            raise InconclusivePrecision(
                "oracle enclosure did not reach the width target"
            )
        bits = min(2 * bits, cap)
        target_t = target_t / 2**16


def pm(n: int) -> ExponentValue:
    """Threshold for the adjusted-energy route: infinite through n = 30."""
    _check_dimension(n)
    if n <= 30:
        return ExponentValue.infinite()
    s = sqrt(15 * n**2 - 60 * n + 190)
    expr = (Fraction(5 * n + 30) - s) / (Fraction(5 * n - 30) - s)
    return ExponentValue(FINITE, enclose(expr, DEFAULT_WIDTH))


def pm1(n: int) -> ExponentValue:
    """Simpler rational threshold: infinite through n = 20, then (n+28)/(n-20)."""
    _check_dimension(n)
    if n <= 20:
        return ExponentValue.infinite()
    return ExponentValue.exact(Fraction(n + 28, n - 20))


def pc_harmonic(n: int) -> ExponentValue:
    """Second-order analog of the stability threshold."""
    if n < 3:
        raise ValueError("dimension below second-order range")
    if n <= 10:
        return ExponentValue.infinite()
    expr = (Fraction((n - 2) ** 2 - 4 * n) + 8 * sqrt(n - 1)) / Fraction(
        (n - 2) * (n - 10)
    )
    return ExponentValue(FINITE, enclose(expr, DEFAULT_WIDTH))


def pc_biharmonic(n: int) -> ExponentValue:
    """Fourth-order analog of the stability threshold."""
    if n < 5:
        raise ValueError("dimension below fourth-order range")
    if n <= 12:
        return ExponentValue.infinite()
    inner = sqrt(n**2 + 4 - RadicalExpr.const(n) * sqrt(n**2 - 8 * n + 32))
    expr = (Fraction(n + 2) - inner) / (Fraction(n - 6) - inner)
    return ExponentValue(FINITE, enclose(expr, DEFAULT_WIDTH))


# -- ordering and reporting -------------------------------------------


@dataclass(frozen=True)
class OrderingVerdict:
    claim: str
    status: str  # "verified" | "falsified" | "inconclusive"


@dataclass(frozen=True)
class ExponentChainReport:
    n: int
    serrin: ExponentValue
    sobolev: ExponentValue
    pc: ExponentValue
    pm: ExponentValue
    pm1: ExponentValue
    pc_harmonic: ExponentValue
    pc_biharmonic: ExponentValue
    ordering_verdicts: tuple[OrderingVerdict, ...]


def _order_certify(
    claim: str, a: ExponentValue, b: ExponentValue
) -> OrderingVerdict:
    verdict = a.certainly_lt(b)
    if verdict is True:
        return OrderingVerdict(claim, "verified")
    if verdict is False:
        return OrderingVerdict(claim, "falsified")
    return OrderingVerdict(claim, "inconclusive")


def exponent_chain_report(
    n: int, width: Rat = DEFAULT_WIDTH
) -> ExponentChainReport:
    """All exponents at one dimension plus the certified ordering relations."""
    _check_dimension(n)
    pc = joseph_lundgren_triharmonic(n, width)
    pm_v = pm(n)
    pm1_v = pm1(n)
    sob = sobolev_exponent(n)
    verdicts = []
    if not pc.is_infinite:
        verdicts.append(_order_certify("sobolev < pc", sob, pc))
    if n >= 15:
        verdicts.append(_order_certify("pc < pm", pc, pm_v))
    if n >= 21:
        verdicts.append(_order_certify("pm1 < pm", pm1_v, pm_v))
    return ExponentChainReport(
        n=n,
        serrin=serrin_exponent(n),
        sobolev=sob,
        pc=pc,
        pm=pm_v,
        pm1=pm1_v,
        pc_harmonic=pc_harmonic(n) if n >= 3 else ExponentValue.infinite(),
        pc_biharmonic=pc_biharmonic(n) if n >= 5 else ExponentValue.infinite(),
        ordering_verdicts=tuple(verdicts),
    )


def exponent_value_to_dict(ev: ExponentValue) -> dict:
    if ev.is_infinite:
        return {"kind": INFINITE}
    return {
        "kind": FINITE,
        "lo": f"{ev.value.lo.numerator}/{ev.value.lo.denominator}",
        "hi": f"{ev.value.hi.numerator}/{ev.value.hi.denominator}",
    }


def chain_report_to_dict(rep: ExponentChainReport) -> dict:
    return {
        "n": rep.n,
        "exponents": {
            name: exponent_value_to_dict(getattr(rep, name))
            for name in (
                "serrin",
                "sobolev",
                "pc",
                "pm",
                "pm1",
                "pc_harmonic",
                "pc_biharmonic",
            )
        },
        "certificates": [
            {"claim": v.claim, "status": v.status} for v in rep.ordering_verdicts
        ],
    }
