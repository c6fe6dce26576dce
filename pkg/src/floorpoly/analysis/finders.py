"""Bounded searches that construct witness certificates.

Every search is deterministic (smallest prime, then smallest anchor / start /
class) and every certificate is re-verified by
:func:`floorpoly.analysis.verify.verify_certificate` before it is returned.
Running out of budget raises :class:`SearchExhausted`; nothing is guessed.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from ..distribution import exact_histogram
from ..errors import BudgetExceeded, NotRationalError, PreconditionError, SearchExhausted
from ..exactcore import ExactReal, as_exact
from ..numkernel import inv_mod, primes_between, trial_factor
from ..polyring import (
    Poly,
    clear_denominators,
    choose_shift_no_real_roots,
    derivative,
    has_root_mod_p,
    ieval,
)
from .certificates import Budget, IncompletenessWitness, NonUdWitness, RunWitness
from .verify import verify_certificate

DEFAULT_BUDGET = Budget()


def _checked(cert, P: Poly | None, budget: Budget):
    if not verify_certificate(cert, P, max_period=budget.max_period):
        raise RuntimeError(f"generated certificate failed independent verification: {cert}")
    return cert


def _require_rational_nonlinear(P: Poly, min_degree: int = 2):
    if P.degree < min_degree:
        raise PreconditionError(f"need degree >= {min_degree}, got {P.degree}")
    if not P.has_rational_nonconstant():
        raise NotRationalError(f"{P} has an irrational non-constant coefficient")


def heavy_class_witness(P: Poly, modulus: int, p: int, budget: Budget, a: int | None = None):
    """Non-u.d. witness mod ``modulus`` from one exact period, or None."""
    hist = exact_histogram(P, modulus, budget.max_period)
    best = max(hist.counts)
    if best * modulus <= hist.scanned:
        return None
    cls = hist.counts.index(best)
    return NonUdWitness(p, modulus, cls, best, hist.scanned, str(P), a)


def find_nonud_modulus(P: Poly, budget: Budget = DEFAULT_BUDGET) -> NonUdWitness:
    """Witness that floor(P(k)) is not u.d. modulo some ``p**2``.

    Walk anchors a = 1, 2, ... until Q'(a) has a proven prime factor
    p > 6N, where Q = N*(P - P(0)).  Along the progression a + k*p the
    values of Q agree mod p**2, which forces a residue class mod p**2 to
    be over-represented.
    """
    _require_rational_nonlinear(P)
    cf = clear_denominators(P)
    N = cf.N
    dq = derivative(cf.Q).int_coeffs()
    skipped = []
    for a in range(1, budget.max_anchor + 1):
        v = ieval(dq, a)
        if v == 0:
            continue
        factors, _ = trial_factor(v, budget.factor_bound)
        for p in sorted(q for q, _ in factors if q > 6 * N):
            try:
                cert = heavy_class_witness(P, p * p, p, budget, a)
            except BudgetExceeded:
                skipped.append(p)
                continue
            if cert is not None:
                return _checked(cert, P, budget)
    raise SearchExhausted(
        f"no anchor a <= {budget.max_anchor} gave a usable prime p > {6 * N}",
        max_anchor=budget.max_anchor,
        max_period=budget.max_period,
        factor_bound=budget.factor_bound,
        over_budget_primes=skipped[:10],
    )


def find_incomplete_prime_even(P: Poly, budget: Budget = DEFAULT_BUDGET) -> IncompletenessWitness:
    """Prime p and a class mod p never attained by floor(P(x)), for even degree.

    With ``N*floor(P(x)) = Q(x) + A_j`` and M chosen so that every
    ``Q + M + A_j`` is positive (or negative) definite, any prime p > N at
    which ``R = prod_j (Q + M + A_j)`` has no root mod p leaves the class
    K = -M/N (mod p) unattained.
    """
    _require_rational_nonlinear(P)
    if P.degree % 2:
        raise PreconditionError(f"need even degree, got {P.degree}")
    cf = clear_denominators(P)
    N = cf.N
    shifts = sorted(set(cf.A))
    M = choose_shift_no_real_roots(cf.Q, shifts)
    R = Poly([1])
    for a in shifts:
        R = R * (cf.Q + (M + a))
    for p in primes_between(N + 1, budget.max_prime):
        if N * p > budget.max_period:
            break
        if all(c % p == 0 for c in R.int_coeffs()):
            continue
        if has_root_mod_p(R, p):
            continue
        K = (-M * inv_mod(N, p)) % p
        cert = IncompletenessWitness(p, K, N * p, str(P))
        return _checked(cert, P, budget)
    raise SearchExhausted(
        f"no prime in ({N}, {budget.max_prime}] leaves R rootless",
        max_prime=budget.max_prime,
        max_period=budget.max_period,
        shift=M,
    )


def _nonresidue_mask(n: int, p: int) -> np.ndarray:
    """Boolean array over 0..p-1: True where x is a unit and not an nth power."""
    y = np.arange(1, p, dtype=np.int64)
    acc = np.ones_like(y)
    for _ in range(n):
        acc = acc * y % p
    mask = np.ones(p, dtype=bool)
    mask[0] = False
    mask[acc] = False
    return mask


def find_nonresidue_pattern(
    n: int, offsets, p_min: int = 2, budget: Budget = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Smallest prime p >= p_min, then smallest t >= 2, such that every
    ``t + o`` (o in offsets) is an nth power non-residue in [2, p-1]."""
    offs = sorted(set(int(o) for o in offsets))
    if n < 2 or not offs or offs[0] < 0:
        raise PreconditionError("need n >= 2 and non-negative offsets")
    span = offs[-1]
    for p in primes_between(max(p_min, 2), budget.max_prime):
        if math.gcd(n, p - 1) == 1 or p - 1 - span < 2:
            continue
        mask = _nonresidue_mask(n, p)
        hi = p - span  # t ranges over [2, hi)
        ok = np.ones(hi - 2, dtype=bool)
        for o in offs:
            ok &= mask[2 + o : hi + o]
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if hits.size:
            return p, int(hits[0]) + 2
    raise SearchExhausted(
        f"no prime in [{p_min}, {budget.max_prime}] has {n}th power non-residues "
        f"at offsets {offs[:8]}{'...' if len(offs) > 8 else ''}",
        max_prime=budget.max_prime,
    )


def find_residue_run(
    n: int, l: int, p_min: int = 2, budget: Budget = DEFAULT_BUDGET
) -> RunWitness:
    """Smallest prime p >= p_min with l consecutive nth power non-residues.

    The start t ranges over [2, p - l] so that no t + j is divisible by p;
    the smallest t for that prime is returned.
    """
    if n < 2 or l < 1:
        raise PreconditionError(f"need n >= 2 and l >= 1, got n={n}, l={l}")
    p, t = find_nonresidue_pattern(n, range(l), p_min, budget)
    return _checked_run(RunWitness(p, n, t, l))


def _checked_run(run: RunWitness) -> RunWitness:
    if not verify_certificate(run):
        raise RuntimeError(f"generated run failed independent verification: {run}")
    return run


def find_incomplete_prime_monomial(
    a, n: int, c=0, budget: Budget = DEFAULT_BUDGET
) -> IncompletenessWitness:
    """Incompleteness witness for ``a*x**n + c`` with rational a, n >= 2.

    Write a = M/N with M > 0 and w_j = M^(n-1) * A_j from the cleared form.
    If p > M*N is prime and K is such that every K - w_j is an nth power
    non-residue mod p, then M^(n-1) * N * floor(P(x)) == K is impossible
    (it would make K - w_j == (M*x)^n), so the class L/N with
    M^(n-1) L == K is missed.  Taking K = t + max(w) turns this into
    non-residues at t + (max(w) - w_j); a run of
    1 + max(w) - min(w) consecutive non-residues is the special case hitting
    every offset in between.

    Negative a: odd n substitutes x -> -x (same value set); even n goes
    through :func:`find_incomplete_prime_even`.
    """
    a = Fraction(a)
    c = as_exact(c)
    if n < 2:
        raise PreconditionError(f"need n >= 2, got {n}")
    if a == 0:
        raise PreconditionError("leading coefficient must be nonzero")
    P = Poly.monomial(ExactReal.rational(a), n) + c
    if a < 0 and n % 2 == 0:
        return find_incomplete_prime_even(P, budget)
    work = P if a > 0 else Poly.monomial(ExactReal.rational(-a), n) + c
    M, N = abs(a.numerator), a.denominator
    cf = clear_denominators(work)
    scale = M ** (n - 1)
    w = [scale * Aj for Aj in cf.A]
    top = max(w)
    p, t = find_nonresidue_pattern(n, [top - wj for wj in w], M * N + 1, budget)
    if N * p > budget.max_period:
        raise SearchExhausted(
            f"prime {p} needs a period {N * p} beyond the scan budget",
            max_prime=budget.max_prime,
            max_period=budget.max_period,
        )
    K = t + top
    L = K * inv_mod(scale, p) % p
    cls = L * inv_mod(N, p) % p
    cert = IncompletenessWitness(p, cls, N * p, str(P))
    return _checked(cert, P, budget)


def find_incomplete_prime_scan(P: Poly, budget: Budget = DEFAULT_BUDGET) -> IncompletenessWitness:
    """Smallest prime modulus with an unattained class, by direct full-period scans.

    Used for odd-degree polynomials that are not monomials, where no
    construction is available; success is reported, never assumed.
    """
    _require_rational_nonlinear(P, min_degree=1)
    N = clear_denominators(P).N
    for p in primes_between(2, budget.max_prime):
        if N * p > budget.max_period:
            break
        missing = exact_histogram(P, p, budget.max_period).missing
        if missing:
            cert = IncompletenessWitness(p, missing[0], N * p, str(P))
            return _checked(cert, P, budget)
    raise SearchExhausted(
        f"floor({P}) is complete modulo every prime scanned",
        max_prime=budget.max_prime,
        max_period=budget.max_period,
    )


def find_value_gap(P: Poly, l: int, budget: Budget = DEFAULT_BUDGET) -> tuple[int, int]:
    """Prime p and k >= 1 with P(x) != k + i (mod p) for all x and 0 <= i < l.

    Search tool for integer-coefficient P; returns the smallest such p and,
    for it, the smallest k.  No claim is made when the search fails.
    """
    cs = P.int_coeffs()
    if P.degree < 2 or l < 1:
        raise PreconditionError("need a nonlinear integer polynomial and l >= 1")
    for p in primes_between(2, budget.max_prime):
        if l >= p:
            continue
        hit = bytearray(p)
        for x in range(p):
            hit[ieval(cs, x) % p] = 1
        # cyclic window over k = 1..p (k and k + p are the same class)
        for k in range(1, p + 1):
            if all(not hit[(k + i) % p] for i in range(l)):
                return p, k
    raise SearchExhausted(
        f"no prime <= {budget.max_prime} leaves {l} consecutive values missed",
        max_prime=budget.max_prime,
    )
