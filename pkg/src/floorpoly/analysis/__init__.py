"""Classifiers, witness finders and the certificate verifier."""

from .certificates import (
    Budget,
    Certificate,
    IncompletenessWitness,
    NonUdWitness,
    RunWitness,
    Verdict,
    VerdictKind,
    certificate_from_json,
)
from .classify import (
    classify_complete,
    classify_linear_complete,
    classify_linear_ud,
    classify_ud,
    closed_form_linear_complete,
    closed_form_ud,
)
from .finders import (
    find_incomplete_prime_even,
    find_incomplete_prime_monomial,
    find_incomplete_prime_scan,
    find_nonud_modulus,
    find_nonresidue_pattern,
    find_residue_run,
    find_value_gap,
)
from .verify import verify_certificate
