"""Verdicts on uniform distribution in Z and completeness in Z."""

from __future__ import annotations

from ..distribution import exact_histogram, is_complete_mod_m
from ..errors import PreconditionError, SearchExhausted
from ..exactcore import ExactReal, as_exact, er_floor
from ..numkernel import trial_factor
from ..polyring import Poly
from .certificates import Budget, IncompletenessWitness, Verdict, VerdictKind
from .finders import (
    DEFAULT_BUDGET,
    _checked,
    find_incomplete_prime_even,
    find_incomplete_prime_monomial,
    find_incomplete_prime_scan,
    find_nonud_modulus,
    heavy_class_witness,
)

UD, NOT_UD = VerdictKind.UD_IN_Z, VerdictKind.NOT_UD
COMPLETE, INCOMPLETE = VerdictKind.COMPLETE_IN_Z, VerdictKind.INCOMPLETE


def _unknown(reason: str, exc: SearchExhausted) -> Verdict:
    return Verdict(VerdictKind.UNKNOWN, reason, budget=dict(exc.budget), notes={"detail": str(exc)})


def _smallest_prime_factor(n: int) -> int:
    factors, rest = trial_factor(n, n)
    return factors[0][0] if factors else rest


def classify_linear_ud(alpha, beta, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """u.d. in Z of floor(alpha*k + beta).

    Yes exactly when alpha is irrational or alpha = 1/l; otherwise, with
    alpha = a/b in lowest terms, the sequence is not u.d. mod |a|.
    """
    alpha, beta = as_exact(alpha), as_exact(beta)
    P = Poly([beta, alpha])
    if not alpha.is_rational:
        return Verdict(UD, "irrational_slope")
    if alpha.is_zero:
        # constant sequence: everything sits in one class mod 2
        cert = heavy_class_witness(P, 2, 2, budget)
        return Verdict(NOT_UD, "constant_sequence", _checked(cert, P, budget), degenerate=True)
    a = alpha.q.numerator
    if abs(a) == 1:
        return Verdict(UD, "unit_numerator_slope")
    cert = heavy_class_witness(P, abs(a), _smallest_prime_factor(abs(a)), budget)
    return Verdict(NOT_UD, "slope_numerator_modulus", _checked(cert, P, budget))


def classify_linear_complete(alpha, beta, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """Completeness in Z of floor(alpha*x + beta).

    Complete exactly when alpha is irrational or 0 < |alpha| <= 1.  For
    rational |alpha| = |a|/b > 1 the smallest modulus j <= |a| with an
    unattained class is certified.
    """
    alpha, beta = as_exact(alpha), as_exact(beta)
    P = Poly([beta, alpha])
    if not alpha.is_rational:
        return Verdict(COMPLETE, "irrational_slope")
    if alpha.is_zero:
        cert = IncompletenessWitness(2, (er_floor(beta) + 1) % 2, 2, str(P))
        return Verdict(INCOMPLETE, "constant_sequence", _checked(cert, P, budget), degenerate=True)
    if abs(alpha.q) <= 1:
        return Verdict(COMPLETE, "slope_at_most_one")
    a, b = abs(alpha.q.numerator), alpha.q.denominator
    for j in range(2, a + 1):
        ok, missing = is_complete_mod_m(P, j, budget.max_period)
        if not ok:
            cert = IncompletenessWitness(j, missing[0], b * j, str(P))
            return Verdict(INCOMPLETE, "large_rational_slope", _checked(cert, P, budget))
    raise RuntimeError(f"{P} unexpectedly complete modulo 2..{a}")


def _require_nonconstant(P: Poly):
    if P.degree < 1:
        raise PreconditionError(f"classifiers need degree >= 1, got constant {P}")


def classify_ud(P: Poly, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    _require_nonconstant(P)
    if not P.has_rational_nonconstant():
        return Verdict(UD, "irrational_coefficient")
    if P.degree == 1:
        return classify_linear_ud(P.coeff(1), P.coeff(0), budget)
    try:
        cert = find_nonud_modulus(P, budget)
    except SearchExhausted as exc:
        return _unknown("nonlinear_rational", exc)
    return Verdict(NOT_UD, "nonlinear_rational", cert)


def _is_monomial(P: Poly) -> bool:
    return all(c.is_zero for c in P.coeffs[1:-1])


def classify_complete(P: Poly, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """Completeness in Z.

    Irrational non-constant coefficient: complete.  Linear: closed form.
    Even degree: shifted-product construction.  Odd monomial: residue-run
    construction.  Anything else falls back to a bounded scan of primes.
    """
    _require_nonconstant(P)
    if not P.has_rational_nonconstant():
        return Verdict(COMPLETE, "irrational_coefficient")
    if P.degree == 1:
        return classify_linear_complete(P.coeff(1), P.coeff(0), budget)
    if P.degree % 2 == 0:
        route, finder = "even_degree_shift", lambda: find_incomplete_prime_even(P, budget)
    elif _is_monomial(P):
        route = "monomial_residue_run"
        finder = lambda: find_incomplete_prime_monomial(P.leading.q, P.degree, P.constant, budget)
    else:
        route, finder = "bounded_prime_scan", lambda: find_incomplete_prime_scan(P, budget)
    try:
        cert = finder()
    except SearchExhausted as exc:
        return _unknown(route, exc)
    return Verdict(INCOMPLETE, route, cert)


def closed_form_ud(P: Poly) -> bool:
    """u.d. in Z predicate: irrational non-constant coefficient, or P = x/l + P(0)."""
    if not P.has_rational_nonconstant():
        return True
    return P.degree == 1 and abs(P.coeff(1).q.numerator) == 1


def closed_form_linear_complete(alpha: ExactReal) -> bool:
    alpha = as_exact(alpha)
    return not alpha.is_rational or 0 < abs(alpha.q) <= 1
