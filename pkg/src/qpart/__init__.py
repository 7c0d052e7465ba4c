"""Exact q-series arithmetic and colored-partition congruence verification.

The package splits into four layers:

* :mod:`qpart.series` — truncated integer power series (the ring).
* :mod:`qpart.etaq` — Pochhammer/eta-quotient builders, closed-form
  theta series, and the text grammar for eta expressions.
* :mod:`qpart.partitions` — combinatorial ground truth for the colored
  families (dynamic programming and exhaustive listing).
* :mod:`qpart.congruence` — the claim verifiers, the explicit
  7-dissection identity, the Frobenius congruence, proof replays, and
  the residue scanner.

The hot convolution loops live in a compiled extension with a pure
Python fallback; :func:`backend` reports which one is active.
"""

from ._backend import BACKEND as _BACKEND
from .congruence import (
    MOD7_FAMILY_ROWS,
    RAMANUJAN_ROWS,
    ClaimReport,
    ClaimSource,
    CongruenceClaim,
    Counterexample,
    DissectionReport,
    ProofStep,
    ProofTrace,
    UnsupportedFamilyError,
    dissected_component,
    dissection_rhs,
    dissection_rhs_text,
    family_expression,
    lift_factorization_holds,
    ramanujan_claims,
    replay_proof,
    scan,
    verify_claim,
    verify_dissection_identity,
    verify_frobenius,
    verify_mod7_family,
    verify_mod7_lifts,
)
from .etaq import (
    THETA_PRODUCT_FORM,
    EtaExpression,
    EtaSyntaxError,
    EtaTerm,
    ThetaFamily,
    ZeroScaleError,
    eval_eta,
    format_eta,
    parse_eta,
    pochhammer_f,
    theta_series,
    theta_support_mod,
)
from .partitions import (
    CapExceededError,
    ColoredFamilySpec,
    ColoredPartition,
    Family,
    count,
    enumerate_partitions,
    oracle_series,
)
from .series import Modulus, NonUnitConstantTermError, TruncatedSeries

__version__ = "0.1.0"


def backend() -> str:
    """Name of the active coefficient-kernel backend: "c" or "python"."""
    return _BACKEND


__all__ = [
    "backend",
    "__version__",
    # series
    "TruncatedSeries", "Modulus", "NonUnitConstantTermError",
    # etaq
    "pochhammer_f", "eval_eta", "parse_eta", "format_eta",
    "EtaExpression", "EtaTerm", "EtaSyntaxError", "ZeroScaleError",
    "ThetaFamily", "theta_series", "theta_support_mod", "THETA_PRODUCT_FORM",
    # partitions
    "Family", "ColoredFamilySpec", "ColoredPartition",
    "count", "enumerate_partitions", "oracle_series", "CapExceededError",
    # congruence
    "CongruenceClaim", "ClaimReport", "ClaimSource", "Counterexample",
    "DissectionReport", "ProofStep", "ProofTrace", "UnsupportedFamilyError",
    "MOD7_FAMILY_ROWS", "RAMANUJAN_ROWS", "ramanujan_claims",
    "family_expression", "verify_claim", "verify_mod7_family",
    "verify_mod7_lifts", "lift_factorization_holds",
    "verify_dissection_identity", "dissected_component",
    "dissection_rhs", "dissection_rhs_text",
    "verify_frobenius", "replay_proof", "scan",
]
