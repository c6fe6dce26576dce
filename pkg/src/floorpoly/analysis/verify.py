"""Independent re-verification of witness certificates.

Nothing here touches the finders or the cleared-form scan: periods are
re-derived from the coefficient denominators, and residues are recounted
with direct exact floors (:func:`floorpoly.distribution.empirical_histogram`).
"""

from __future__ import annotations

import math
from functools import reduce

from ..cli.expr import parse_poly
from ..distribution import MAX_PERIOD, empirical_histogram
from ..errors import CertificateError, ParseError
from ..numkernel import is_nth_power_residue, is_prime
from ..polyring import Poly
from .certificates import (
    Certificate,
    IncompletenessWitness,
    NonUdWitness,
    RunWitness,
    certificate_from_json,
)


def _context_poly(cert, poly) -> Poly:
    try:
        own = parse_poly(cert.poly) if cert.poly else None
    except ParseError as exc:
        raise CertificateError(f"certificate polynomial does not parse: {exc}") from exc
    if isinstance(poly, str):
        poly = parse_poly(poly)
    if own is None and poly is None:
        raise CertificateError("no polynomial given for a polynomial certificate")
    if own is not None and poly is not None and own != poly:
        raise CertificateError(f"certificate is for {own}, not {poly}")
    P = own if own is not None else poly
    if P.degree < 0:
        raise CertificateError("zero polynomial")
    if not all(c.is_rational for c in P.coeffs[1:]):
        raise CertificateError(f"{P} has an irrational non-constant coefficient; no finite period")
    return P


def _denominator_lcm(P: Poly) -> int:
    return reduce(math.lcm, (c.q.denominator for c in P.coeffs[1:]), 1)


def _covers_periods(P: Poly, modulus: int, period: int) -> bool:
    return period > 0 and period % (_denominator_lcm(P) * modulus) == 0


def _verify_nonud(cert: NonUdWitness, P: Poly, max_period: int) -> bool:
    p, m = cert.p, cert.modulus
    if p < 2 or not is_prime(p) or m < 2 or m % p:
        return False
    if P.degree >= 2 and m != p * p:
        return False
    if not 0 <= cert.heavy_class < m or not _covers_periods(P, m, cert.period):
        return False
    if cert.count * m <= cert.period:
        return False
    hist = empirical_histogram(P, m, cert.period, max_samples=max_period)
    return hist.counts[cert.heavy_class] == cert.count


def _verify_incomplete(cert: IncompletenessWitness, P: Poly, max_period: int) -> bool:
    p = cert.p
    if p < 2 or not 0 <= cert.missing_class < p:
        return False
    if not _covers_periods(P, p, cert.period):
        return False
    hist = empirical_histogram(P, p, cert.period, max_samples=max_period)
    return hist.counts[cert.missing_class] == 0


def _verify_run(cert: RunWitness) -> bool:
    p, n, t, l = cert.p, cert.n, cert.t, cert.l
    if n < 2 or l < 1 or t < 1 or p < 2 or not is_prime(p):
        return False
    if t + l - 1 >= p:
        return False
    return all(not is_nth_power_residue(t + j, n, p) for j in range(l))


def verify_certificate(
    cert,
    poly: Poly | str | None = None,
    *,
    n: int | None = None,
    l: int | None = None,
    max_period: int = MAX_PERIOD,
) -> bool:
    """Re-establish a certificate's claim from scratch.

    Returns False when the claim is wrong.  Raises CertificateError when the
    certificate is malformed or was issued for a different polynomial or
    (n, l) than the one supplied.
    """
    cert: Certificate = certificate_from_json(cert)
    if isinstance(cert, RunWitness):
        if (n is not None and n != cert.n) or (l is not None and l != cert.l):
            raise CertificateError(f"run certificate is for n={cert.n}, l={cert.l}")
        return _verify_run(cert)
    P = _context_poly(cert, poly)
    if cert.period > max_period:
        raise CertificateError(f"period {cert.period} exceeds the rescan budget {max_period}")
    if isinstance(cert, NonUdWitness):
        return _verify_nonud(cert, P, max_period)
    return _verify_incomplete(cert, P, max_period)
