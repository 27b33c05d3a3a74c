"""Machine-checkable certificate records and deterministic JSON bundles.

A Certificate states a single claim, a verdict, and the evidence behind the
verdict.  Rationals are serialized as "num/den" strings so round-tripping is
exact, and bundles are emitted with sorted keys and fixed separators so the
same inputs always produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

SCHEMA_VERSION = "1"

VERIFIED = "verified"
FALSIFIED = "falsified"
INCONCLUSIVE = "inconclusive"

_STATUSES = (VERIFIED, FALSIFIED, INCONCLUSIVE)


@dataclass(frozen=True)
class Certificate:
    """One claim with a verdict and its supporting evidence.

    claim_id: stable machine identifier, kebab-case.
    statement: human-readable sentence of what is being asserted.
    status: "verified", "falsified", or "inconclusive".
    witness: evidence; for falsified claims, a concrete counterexample.
    precision_bits: working precision at the verdict, when relevant.
    anchor: short tag locating the claim inside the theory being checked.
    """

    claim_id: str
    statement: str
    status: str
    witness: Any = None
    precision_bits: Optional[int] = None
    anchor: Optional[str] = None

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"status must be one of {_STATUSES}")

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED


def encode_value(v: Any) -> Any:
    """Convert evidence into JSON-safe structures; Fractions become 'num/den'."""
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, dict):
        return {str(k): encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    if hasattr(v, "lo") and hasattr(v, "hi"):
        return {"lo": encode_value(Fraction(v.lo)), "hi": encode_value(Fraction(v.hi))}
    if hasattr(v, "__dataclass_fields__"):
        return {
            name: encode_value(getattr(v, name)) for name in v.__dataclass_fields__
        }
    return str(v)


def decode_rational(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def certificate_to_dict(cert: Certificate) -> dict:
    d = {
        "claim_id": cert.claim_id,
        "statement": cert.statement,
        "status": cert.status,
        "witness": encode_value(cert.witness),
    }
    if cert.precision_bits is not None:
        d["precision_bits"] = cert.precision_bits
    if cert.anchor is not None:
        d["anchor"] = cert.anchor
    return d


def bundle_to_json(certs: list[Certificate], extra: Optional[dict] = None) -> str:
    """Deterministic JSON for a list of certificates.

    Ordering of the list is preserved (callers are expected to generate it
    deterministically); keys are sorted and separators fixed so identical
    inputs give byte-identical output.
    """
    doc = {
        "schema_version": SCHEMA_VERSION,
        "certificates": [certificate_to_dict(c) for c in certs],
        "summary": {
            "total": len(certs),
            "verified": sum(1 for c in certs if c.status == VERIFIED),
            "falsified": sum(1 for c in certs if c.status == FALSIFIED),
            "inconclusive": sum(1 for c in certs if c.status == INCONCLUSIVE),
        },
    }
    if extra:
        doc.update(encode_value(extra))
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
