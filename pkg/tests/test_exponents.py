"""Critical exponent formulas, enclosures, and the root-oracle cross-check."""

from fractions import Fraction

import pytest

from triharmonic.exponents import (
    chain_report_to_dict,
    d0_enclosure,
    d_enclosure,
    exponent_chain_report,
    joseph_lundgren_triharmonic,
    pc_biharmonic,
    pc_harmonic,
    pc_root_oracle,
    pm,
    pm1,
    serrin_exponent,
    sobolev_exponent,
)

WIDTH = Fraction(1, 10**12)


def test_serrin_and_sobolev_exact():
    assert serrin_exponent(15).value.mid == Fraction(15, 9)
    assert sobolev_exponent(15).value.mid == Fraction(21, 9)
    with pytest.raises(ValueError):
        serrin_exponent(6)


def test_threshold_dichotomies():
    for n in range(7, 15):
        assert joseph_lundgren_triharmonic(n, WIDTH).is_infinite
    for n in (15, 16, 40):
        assert not joseph_lundgren_triharmonic(n, WIDTH).is_infinite
    for n in range(7, 31):
        assert pm(n).is_infinite
    assert not pm(31).is_infinite
    for n in range(7, 21):
        assert pm1(n).is_infinite
    assert not pm1(21).is_infinite


def test_frozen_value_oracles():
    """Spot values frozen from an independent high-precision evaluation."""
    assert abs(float(joseph_lundgren_triharmonic(15, WIDTH).value.mid)
               - 6158.31559270981) < 1e-8
    assert abs(float(pm(31).value.mid) - 5.956119903399442) < 1e-12
    assert pm1(21).value.mid == 49
    assert abs(float(pc_harmonic(11).value.mid) - 6.922024586816337) < 1e-9
    assert abs(float(pc_biharmonic(13).value.mid) - 28.172379819867103) < 1e-9


def test_cube_root_constant_enclosures():
    iv15 = d0_enclosure(15, Fraction(1, 10**9))
    assert abs(float(iv15.mid) - 186.09297865) < 1e-7
    iv_large = d0_enclosure(10**6, Fraction(1, 10**9))
    assert Fraction(128) < iv_large.lo and iv_large.hi < Fraction(12801, 100)


def test_radical_enclosure_tightens():
    wide = d_enclosure(15, Fraction(1, 100))
    tight = d_enclosure(15, Fraction(1, 10**10))
    assert tight.width <= wide.width
    assert wide.lo <= tight.mid <= wide.hi


def test_closed_form_agrees_with_root_oracle():
    for n in (15, 16, 21, 50, 200):
        closed = joseph_lundgren_triharmonic(n, Fraction(1, 10**11)).value
        oracle = pc_root_oracle(n, Fraction(1, 10**11))
        assert abs(closed.mid - oracle.mid) < Fraction(1, 10**10)


def test_chain_report_and_serialization():
    rep = exponent_chain_report(15, WIDTH)
    claims = {v.claim: v.status for v in rep.ordering_verdicts}
    assert claims["sobolev < pc"] == "verified"
    assert claims["pc < pm"] == "verified"
    doc = chain_report_to_dict(rep)
    assert doc["n"] == 15
    assert doc["exponents"]["pm"]["kind"] == "infinite"
    assert doc["exponents"]["pc"]["kind"] == "finite"


def test_pm1_below_pm_in_overlap():
    for n in (31, 40, 200):
        assert pm1(n).certainly_lt(pm(n)) is True
