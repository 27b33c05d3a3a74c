"""Certificate suite: verified corpus, gate saturation, negative controls."""

import json
from fractions import Fraction

import pytest

from triharmonic.certificates import FALSIFIED, VERIFIED, bundle_to_json
from triharmonic.certifier import (
    CertifierConfig,
    _min_A2_exact,
    alpha_split,
    gate_saturating_alpha,
    run_all,
    verify_A2_factorization,
    verify_d0_identity,
    verify_lemma_8_1,
)


@pytest.fixture(scope="module")
def default_bundle():
    return run_all(CertifierConfig())


def test_full_suite_verifies(default_bundle):
    assert default_bundle, "empty certificate list"
    bad = [c.claim_id for c in default_bundle if c.status != VERIFIED]
    assert not bad, f"non-verified certificates: {bad}"


def test_bundle_is_deterministic(default_bundle):
    once = bundle_to_json(default_bundle)
    again = bundle_to_json(run_all(CertifierConfig()))
    assert once == again
    doc = json.loads(once)
    assert doc["schema_version"]
    assert doc["summary"]["falsified"] == 0


def test_misprint_reading_recorded_as_falsified():
    cert = verify_d0_identity()
    checks = cert.witness["checks"]
    displayed = [c for c in checks if c["check"].startswith("reading-as-displayed")]
    assert displayed and displayed[0]["status"] == FALSIFIED
    assert displayed[0]["expected_outcome"] == "falsified"
    assert cert.status == VERIFIED  # the resolved reading carries the verdict


def test_quartic_diagonal_factorization_range():
    cert = verify_A2_factorization(7, 60)
    assert cert.status == VERIFIED


def test_derivative_factorization_expands_exactly():
    cert = verify_lemma_8_1()
    assert cert.status == VERIFIED
    names = {c["check"] for c in cert.witness["checks"]}
    assert "derivative-combination-factorization" in names


def test_gate_saturation_is_tight():
    m, _ = _min_A2_exact(21)
    assert m == 2592
    alpha = gate_saturating_alpha(m)
    assert 12 * alpha / (alpha - 1) ** 2 < m
    # nudging alpha up by a hair breaks the gate: saturation is genuine
    bumped = alpha + Fraction(1, 10**12)
    assert 12 * bumped / (bumped - 1) ** 2 >= m


def test_alpha_split_rejects_inadmissible_alpha():
    with pytest.raises(ValueError):
        alpha_split(21, Fraction(1))


def test_alpha_split_falsifies_overgreedy_alpha():
    cert = alpha_split(21, Fraction(999, 1000))
    assert cert.status == FALSIFIED


def test_lemma_filter_subset():
    certs = run_all(CertifierConfig(lemmas=("cube-root-rationalization-identity",)))
    assert [c.claim_id for c in certs] == ["cube-root-rationalization-identity"]
