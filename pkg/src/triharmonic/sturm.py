"""Sturm-chain root counting and certified sign evaluation.

All root counts use the half-open convention: `sturm_count_roots(p, a, b)`
counts distinct real roots in (a, b].  Rays are reduced to bounded intervals
through the Cauchy root bound, so "no roots in [a, infinity)" is certified by
"no roots in (a - something exact, M]" plus the sign of the leading
coefficient.  Inputs are made squarefree before the chain is built, which is
what makes the counts counts of *distinct* roots and keeps the chain short.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .polynomials import Polynomial, Rat


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    """Standard chain p, p', then negated euclidean remainders."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        r = chain[-2].divmod(chain[-1])[1]
        chain.append(-r)
    chain.pop()
    return chain


def _sign_changes(chain: list[Polynomial], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _sign_changes_at_infinity(chain: list[Polynomial], positive: bool) -> int:
    signs = []
    for q in chain:
        lc = q.leading_coefficient()
        if lc == 0:
            continue
        s = 1 if lc > 0 else -1
        if not positive and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_count_roots(
    p: Polynomial,
    a: Optional[Rat] = None,
    b: Optional[Rat] = None,
) -> int:
    """Number of distinct real roots of p in (a, b].

    `a=None` means the count starts at -infinity; `b=None` means it runs to
    +infinity (the half-open convention makes the right endpoint moot there).
    The zero polynomial is rejected; constants have no roots.
    """
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    if p.degree == 0:
        return 0
    sf = p.squarefree_part()
    chain = sturm_chain(sf)
    va = (
        _sign_changes_at_infinity(chain, positive=False)
        if a is None
        else _sign_changes(chain, Fraction(a))
    )
    vb = (
        _sign_changes_at_infinity(chain, positive=True)
        if b is None
        else _sign_changes(chain, Fraction(b))
    )
    return va - vb


def count_roots_ge(p: Polynomial, a: Rat) -> int:
    """Distinct real roots in [a, infinity): ray count plus the endpoint."""
    n = sturm_count_roots(p, a, None)
    if p(a) == 0:
        n += 1
    return n


def isolate_roots(
    p: Polynomial,
    a: Optional[Rat] = None,
    b: Optional[Rat] = None,
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals (lo, hi], one distinct real root in each.

    Covers (a, b], with the ray conventions of `sturm_count_roots`; unbounded
    sides are replaced by the Cauchy bound, so the returned endpoints are
    always finite.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = p.squarefree_part()
    if sf.degree < 1:
        return []
    m = sf.cauchy_root_bound()
    lo = Fraction(a) if a is not None else -m - 1
    hi = Fraction(b) if b is not None else m
    if lo >= hi:
        return []
    chain = sturm_chain(sf)

    def count(x: Fraction, y: Fraction) -> int:
        return _sign_changes(chain, x) - _sign_changes(chain, y)

    out: list[tuple[Fraction, Fraction]] = []

    def split(x: Fraction, y: Fraction, k: int) -> None:
        if k == 0:
            return
        if k == 1:
            out.append((x, y))
            return
        mid = (x + y) / 2
        # nudge off a root so interval endpoints stay sign-definite later
        while sf(mid) == 0:
            mid = (x + mid) / 2
        kl = count(x, mid)
        split(x, mid, kl)
        split(mid, y, k - kl)

    split(lo, hi, count(lo, hi))
    return out


def refine_root(
    p: Polynomial, lo: Fraction, hi: Fraction, width: Rat
) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval (lo, hi] down to the requested width.

    Assumes exactly one distinct root of p lies in (lo, hi] and that
    p(lo) != 0; these hold for intervals produced by `isolate_roots`.
    """
    sf = p.squarefree_part()
    flo = sf(lo)
    if flo == 0:
        raise ValueError("left endpoint is a root; interval is not isolating")
    width = Fraction(width)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = sf(mid)
        if fmid == 0:
            # exact rational root: shrink symmetrically around it
            half = max((hi - lo) / 4, width / 2)
            return (mid - half, mid + half) if mid - half >= lo else (lo, mid + half)
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return lo, hi


# -- sign certification ------------------------------------------------


@dataclass(frozen=True)
class SignWitness:
    """Evidence backing a claimed sign of p on a region.

    root_count is the certified number of distinct roots strictly inside the
    region; sample_point / sample_value record one exact evaluation; for rays
    the leading coefficient argument is captured in `ray_bound` (all roots lie
    within [-ray_bound, ray_bound]).
    """

    root_count: int
    sample_point: Fraction
    sample_value: Fraction
    ray_bound: Optional[Fraction] = None


@dataclass(frozen=True)
class SignResult:
    status: str  # "verified" | "falsified"
    witness: Union[SignWitness, Fraction]


def certify_sign(
    p: Polynomial,
    a: Optional[Rat],
    b: Optional[Rat],
    sign: str,
) -> SignResult:
    """Certify that p has the stated strict sign everywhere on [a, b].

    `sign` is "positive" or "negative".  `a=None` / `b=None` extend the
    region to a ray (or the whole line).  On failure the witness is an exact
    rational point where the claim fails.
    """
    if sign not in ("positive", "negative"):
        raise ValueError("sign must be 'positive' or 'negative'")
    if p.is_zero():
        return SignResult("falsified", Fraction(a if a is not None else 0))
    want_pos = sign == "positive"

    m = p.cauchy_root_bound()
    lo = Fraction(a) if a is not None else -m - 1
    hi = Fraction(b) if b is not None else m + 1
    if lo > hi:
        raise ValueError("empty region")

    # endpoint zeros falsify a strict-sign claim immediately; for rays the
    # synthetic endpoint lies beyond every root, so its sign is the sign at
    # infinity and a failure there is a genuine failure inside the region
    for pt in dict.fromkeys((lo, hi)):
        v = p(pt)
        if v == 0 or (v > 0) != want_pos:
            return SignResult("falsified", pt)

    # (lo, hi] count plus the left endpoint covers the closed region
    interior = sturm_count_roots(p, lo, hi)
    if p(lo) == 0:
        interior += 1
    if interior == 0:
        sample = (lo + hi) / 2
        sv = p(sample)
        if (sv > 0) == want_pos and sv != 0:
            return SignResult(
                "verified",
                SignWitness(
                    root_count=0,
                    sample_point=sample,
                    sample_value=sv,
                    ray_bound=m if (a is None or b is None) else None,
                ),
            )
        return SignResult("falsified", sample)

    # there is a sign change or a zero: locate a concrete failure point
    for ilo, ihi in isolate_roots(p, lo, hi):
        for cand in (ihi, (ilo + ihi) / 2, ilo):
            v = p(cand)
            if v == 0 or (v > 0) != want_pos:
                return SignResult("falsified", cand)
        cur_lo, cur_hi = ilo, ihi
        for _ in range(80):
            cur_lo, cur_hi = refine_root(p, cur_lo, cur_hi, (cur_hi - cur_lo) / 4)
            v = p(cur_hi)
            if v == 0 or (v > 0) != want_pos:
                return SignResult("falsified", cur_hi)
    raise ArithmeticError(
        "root count positive but no failure point found; ill-conditioned input"
    )
