"""Residue statistics of the sequence floor(P(k)) mod m.

Two independent scan engines live here:

* :func:`exact_histogram` walks one full period ``N*m`` through the cleared
  form ``N*floor(P(x)) = A[x mod N] + Q(x)``, so only ``Q(x) mod N*m`` is
  ever needed.
* :func:`empirical_histogram` floors every ``P(k)`` directly from its
  integer form ``(U(k) + V(k)*sqrt(d)) / D``.  It works for irrational
  coefficients as well and is what certificate verification rescans with.
"""

from __future__ import annotations

import cmath
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, NotRationalError, PreconditionError
from .polyring import Poly, clear_denominators, ieval, integer_form

MAX_PERIOD = 10**7
MAX_SAMPLES = 10**7
_CHUNK = 1 << 18
_NUMPY_MIN = 2048


@dataclass(frozen=True)
class ResidueHistogram:
    m: int
    counts: tuple[int, ...]
    scanned: int
    exact: bool

    def __post_init__(self):
        if len(self.counts) != self.m:
            raise ValueError("need one count per residue class")
        if sum(self.counts) != self.scanned:
            raise ValueError("counts must sum to the number of scanned terms")

    def __add__(self, other: ResidueHistogram) -> ResidueHistogram:
        """Merge histograms of disjoint scan ranges."""
        if other.m != self.m:
            raise ValueError("cannot merge histograms with different moduli")
        counts = tuple(a + b for a, b in zip(self.counts, other.counts))
        return ResidueHistogram(self.m, counts, self.scanned + other.scanned, False)

    @property
    def missing(self) -> list[int]:
        return [i for i, c in enumerate(self.counts) if c == 0]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "counts": list(self.counts),
            "scanned": self.scanned,
            "exact": self.exact,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("class,count\n")
        for i, c in enumerate(self.counts):
            buf.write(f"{i},{c}\n")
        return buf.getvalue()


def _check_modulus(m: int):
    if m < 2:
        raise PreconditionError(f"modulus must be >= 2, got {m}")


def period_length(P: Poly, m: int) -> int:
    """``N*m``, a period of floor(P(k)) mod m (N = lcm of the non-constant denominators)."""
    return clear_denominators(P).N * m


def exact_histogram(P: Poly, m: int, max_period: int = MAX_PERIOD) -> ResidueHistogram:
    _check_modulus(m)
    if not P.has_rational_nonconstant():
        raise NotRationalError(
            f"{P} has an irrational non-constant coefficient; use empirical_histogram"
        )
    cf = clear_denominators(P)
    N = cf.N
    T = N * m
    if T > max_period:
        raise BudgetExceeded(
            f"period {T} exceeds the scan budget {max_period}", period=T, max_period=max_period
        )
    qc = [c % T for c in cf.Q.int_coeffs()]
    A = [a % T for a in cf.A]
    if T < _NUMPY_MIN or T >= 1 << 31:
        counts = [0] * m
        for k in range(1, T + 1):
            acc = 0
            for c in reversed(qc):
                acc = (acc * k + c) % T
            counts[((acc + A[k % N]) % T) // N] += 1
        return ResidueHistogram(m, tuple(counts), T, True)

    counts = np.zeros(m, dtype=np.int64)
    A_arr = np.asarray(A, dtype=np.int64)
    for start in range(1, T + 1, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, T + 1), dtype=np.int64)
        acc = np.zeros_like(k)
        for c in reversed(qc):
            acc = (acc * k + c) % T
        v = (acc + A_arr[k % N]) % T
        counts += np.bincount(v // N, minlength=m)
    return ResidueHistogram(m, tuple(int(c) for c in counts), T, True)


def floor_values(P: Poly, start: int, stop: int):
    """Yield ``floor(P(k))`` for ``start <= k < stop`` exactly."""
    form = integer_form(P)
    U, V, D, d = list(form.U), list(form.V), form.D, form.d
    isqrt = math.isqrt
    if d == 0 or not any(V):
        for k in range(start, stop):
            yield ieval(U, k) // D
        return
    for k in range(start, stop):
        v = ieval(V, k)
        if v >= 0:
            f = isqrt(v * v * d)
        else:
            # d squarefree >= 2, so v*v*d is never a perfect square
            f = -isqrt(v * v * d) - 1
        yield (ieval(U, k) + f) // D


def empirical_histogram(
    P: Poly, m: int, n_samples: int, max_samples: int = MAX_SAMPLES
) -> ResidueHistogram:
    """Counts of floor(P(k)) mod m over k = 1..n_samples."""
    _check_modulus(m)
    if n_samples < m:
        raise PreconditionError(f"need at least m={m} samples, got {n_samples}")
    if n_samples > max_samples:
        raise BudgetExceeded(
            f"{n_samples} samples exceed the budget {max_samples}",
            samples=n_samples,
            max_samples=max_samples,
        )
    counts = [0] * m
    for v in floor_values(P, 1, n_samples + 1):
        counts[v % m] += 1
    return ResidueHistogram(m, tuple(counts), n_samples, False)


def is_ud_mod_m(P: Poly, m: int, max_period: int = MAX_PERIOD) -> bool:
    hist = exact_histogram(P, m, max_period)
    share = hist.scanned // m
    return all(c == share for c in hist.counts)


def is_complete_mod_m(P: Poly, m: int, max_period: int = MAX_PERIOD) -> tuple[bool, list[int]]:
    missing = exact_histogram(P, m, max_period).missing
    return not missing, missing


@dataclass(frozen=True)
class WeylStat:
    m: int
    h: int
    n_samples: int
    magnitude: float


def weyl_from_histogram(hist: ResidueHistogram, h: int) -> WeylStat:
    """``|1/N sum_k e(h*a_k/m)|`` from class counts, summed with fsum."""
    m = hist.m
    if not 1 <= h < m:
        raise PreconditionError(f"frequency must satisfy 1 <= h < m, got h={h}, m={m}")
    terms = [c * cmath.exp(2j * math.pi * h * i / m) for i, c in enumerate(hist.counts)]
    re = math.fsum(t.real for t in terms)
    im = math.fsum(t.imag for t in terms)
    mag = math.hypot(re, im) / hist.scanned
    return WeylStat(m, h, hist.scanned, min(mag, 1.0))


def weyl_sum(P: Poly, m: int, h: int, n_samples: int) -> WeylStat:
    return weyl_from_histogram(empirical_histogram(P, m, n_samples), h)


def weyl_profile(P: Poly, m: int, n_samples: int) -> list[WeylStat]:
    """Weyl sums for every frequency ``1 <= h < m`` from a single scan."""
    hist = empirical_histogram(P, m, n_samples)
    return [weyl_from_histogram(hist, h) for h in range(1, m)]
