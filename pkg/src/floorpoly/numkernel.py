"""Primality, modular powers, trial factoring and nth-power residue tests."""

from __future__ import annotations

import math
from bisect import bisect_left

from .errors import PreconditionError

_SMALL_LIMIT = 1 << 16
# Deterministic Miller-Rabin bases for every n < 2**64.
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_U64 = 1 << 64


def sieve(limit: int) -> list[int]:
    """All primes ``p <= limit`` (Eratosthenes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = sieve(_SMALL_LIMIT)
_SMALL_SET = frozenset(_SMALL_PRIMES)


def is_prime(n: int) -> bool:
    if n < 0 or n >= _U64:
        raise PreconditionError(f"is_prime supports 0 <= n < 2**64, got {n}")
    if n <= _SMALL_LIMIT:
        return n in _SMALL_SET
    for p in _SMALL_PRIMES[:12]:
        if n % p == 0:
            return False
    s = ((n - 1) & -(n - 1)).bit_length() - 1
    d = (n - 1) >> s
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime ``>= n``."""
    if n <= 2:
        return 2
    if n <= _SMALL_PRIMES[-1]:
        return _SMALL_PRIMES[bisect_left(_SMALL_PRIMES, n)]
    n |= 1
    while not is_prime(n):
        n += 2
    return n


class PrimeIterator:
    """Iterate the primes in increasing order starting at ``start``.

    Single consumer; make one per task.
    """

    method = "sieve<2^16, Miller-Rabin bases (2, 325, 9375, 28178, 450775, 9780504, 1795265022)"

    def __init__(self, start: int = 2, stop: int | None = None):
        self.current = next_prime(start)
        self.stop = stop

    def __iter__(self):
        return self

    def __next__(self) -> int:
        p = self.current
        if self.stop is not None and p > self.stop:
            raise StopIteration
        self.current = next_prime(p + 1)
        return p


def primes_between(lo: int, hi: int):
    """Primes ``p`` with ``lo <= p <= hi``."""
    return PrimeIterator(lo, hi)


def pow_mod(b: int, e: int, m: int) -> int:
    if m == 0:
        raise ValueError("modulus must be nonzero")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return pow(b, e, abs(m))


def inv_mod(a: int, m: int) -> int:
    return pow(a, -1, m)


def _residue_unchecked(x: int, n: int, p: int) -> bool:
    g = math.gcd(n, p - 1)
    return pow(x, (p - 1) // g, p) == 1


def is_nth_power_residue(x: int, n: int, p: int) -> bool:
    """True iff ``x == y**n (mod p)`` for some ``y``.

    Uses ``x**((p-1)/g) == 1`` with ``g = gcd(n, p-1)``.  Multiples of ``p``
    are rejected: residue classes are taken in the unit group mod ``p``.
    """
    if n < 1:
        raise PreconditionError(f"power must be >= 1, got {n}")
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if x % p == 0:
        raise PreconditionError(f"{p} divides {x}")
    return _residue_unchecked(x % p, n, p)


def trial_factor(n: int, bound: int) -> tuple[list[tuple[int, int]], int]:
    """Factor ``|n|`` by trial division up to ``bound``.

    Returns ``(factors, cofactor)``.  A cofactor left over is moved into
    ``factors`` only when it is proven prime (``< 2**64``); otherwise it is
    returned unfactored.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    factors: list[tuple[int, int]] = []
    p = 2
    while p <= bound and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1 and (n <= bound or p * p > n or (n < _U64 and is_prime(n))):
        # n <= bound or p*p > n means trial division already proved n prime
        factors.append((n, 1))
        n = 1
    return factors, n
