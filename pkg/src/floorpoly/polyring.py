"""Univariate polynomials over Z, Q and a single real quadratic field.

:class:`Poly` stores ExactReal coefficients in ascending order.  The integer
algorithms (resultants, roots mod p, Hensel checks) accept a ``Poly`` whose
coefficients are all integers and work on plain ``int`` lists internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np

from .errors import NotRationalError, PreconditionError, FieldMismatchError
from .exactcore import ExactReal, as_exact, er_floor, format_rational


class Poly:
    """Immutable polynomial ``sum(coeffs[i] * x**i)``.

    The zero polynomial has ``degree == -1``.  All irrational coefficients
    share the radicand ``d`` (``d == 0`` when every coefficient is rational).
    """

    __slots__ = ("coeffs", "d")

    def __init__(self, coeffs=()):
        cs = [as_exact(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        radicands = {c.d for c in cs if c.d}
        if len(radicands) > 1:
            raise FieldMismatchError(
                "coefficients mix radicands " + ", ".join(map(str, sorted(radicands)))
            )
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "d", radicands.pop() if radicands else 0)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def from_ints(cls, coeffs) -> Poly:
        return cls([int(c) for c in coeffs])

    @classmethod
    def monomial(cls, c, n: int) -> Poly:
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    # -- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> ExactReal:
        if not self.coeffs:
            return ExactReal.rational(0)
        return self.coeffs[-1]

    def coeff(self, i: int) -> ExactReal:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ExactReal.rational(0)

    @property
    def constant(self) -> ExactReal:
        return self.coeff(0)

    def has_rational_nonconstant(self) -> bool:
        return all(c.is_rational for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.is_integer for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise NotRationalError(f"{self} does not have integer coefficients")
        return [c.q.numerator for c in self.coeffs]

    def rational_coeffs(self) -> list[Fraction]:
        if not self.is_rational():
            raise NotRationalError(f"{self} has irrational coefficients")
        return [c.q for c in self.coeffs]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ExactReal.rational(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out, base = Poly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        return eval_at(self, x)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def format_poly(P: Poly) -> str:
    """Render ``P`` in the grammar accepted by the expression parser.

    Terms are printed by descending degree; a coefficient ``q + r*sqrt(d)``
    becomes two terms so that every printed term is parseable on its own.
    """
    pieces: list[tuple[int, str]] = []  # (sign, body)
    for i in range(P.degree, -1, -1):
        c = P.coeffs[i]
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if c.q:
            pieces.append(_term(c.q, "", mono))
        if c.r:
            pieces.append(_term(c.r, f"sqrt({c.d})", mono))
    if not pieces:
        return "0"
    out = []
    for k, (sign, body) in enumerate(pieces):
        if k == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


def _term(coef: Fraction, radical: str, mono: str) -> tuple[int, str]:
    sign = -1 if coef < 0 else 1
    mag = abs(coef)
    factors = []
    if mag != 1 or (not radical and not mono):
        factors.append(format_rational(mag))
    if radical:
        factors.append(radical)
    if mono:
        factors.append(mono)
    return sign, "*".join(factors)


# -- evaluation ------------------------------------------------------------


def eval_at(P: Poly, x) -> ExactReal:
    """Horner evaluation at an exact point."""
    x = as_exact(x)
    acc = ExactReal.rational(0)
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


def eval_at_int(P: Poly, k: int) -> ExactReal:
    """Value at an integer, through the common-denominator integer form."""
    f = integer_form(P)
    r = Fraction(ieval(f.V, k), f.D) if f.d else Fraction(0)
    return ExactReal(Fraction(ieval(f.U, k), f.D), r, f.d if r else 0)


def ieval(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def ieval_mod(coeffs: list[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc


def derivative(P: Poly) -> Poly:
    return Poly(c * i for i, c in enumerate(P.coeffs) if i > 0)


@dataclass(frozen=True)
class IntegerForm:
    """``P(k) == (U(k) + V(k)*sqrt(d)) / D`` with integer polynomials U, V."""

    U: tuple[int, ...]
    V: tuple[int, ...]
    D: int
    d: int


@lru_cache(maxsize=512)
def integer_form(P: Poly) -> IntegerForm:
    dens = [c.q.denominator for c in P.coeffs] + [c.r.denominator for c in P.coeffs]
    D = reduce(math.lcm, dens, 1)
    U = tuple((c.q * D).numerator for c in P.coeffs)
    V = tuple((c.r * D).numerator for c in P.coeffs)
    return IntegerForm(U, V, D, P.d)


# -- denominator clearing --------------------------------------------------


@dataclass(frozen=True)
class ClearedForm:
    """``N*floor(P(N*k + j)) == A[j] + Q(N*k + j)`` for every integer k."""

    N: int
    Q: Poly
    A: tuple[int, ...]
    P0floor: int

    def floor_at(self, x: int) -> int:
        """``floor(P(x))`` by integer arithmetic only."""
        v = self.A[x % self.N] + ieval(self.Q.int_coeffs(), x)
        return v // self.N


def clear_denominators(P: Poly) -> ClearedForm:
    if not P.has_rational_nonconstant():
        raise NotRationalError(f"{P} has an irrational non-constant coefficient")
    N = reduce(math.lcm, (c.q.denominator for c in P.coeffs[1:]), 1)
    qc = [0] + [(c.q * N).numerator for c in P.coeffs[1:]]
    Q = Poly.from_ints(qc)
    A = tuple(N * er_floor(eval_at(P, j)) - ieval(qc, j) for j in range(N))
    return ClearedForm(N, Q, A, er_floor(P.constant))


# -- resultants ------------------------------------------------------------


def _require_int_nonzero(f: Poly, name: str) -> list[int]:
    if f.degree < 0:
        raise PreconditionError(f"{name} is the zero polynomial")
    return f.int_coeffs()


def sylvester_matrix(f: list[int], g: list[int]) -> list[list[int]]:
    """Sylvester matrix of ascending integer coefficient lists, f rows first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fd, gd = f[::-1], g[::-1]
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(M: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k]:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def resultant(f: Poly, g: Poly) -> int:
    fc = _require_int_nonzero(f, "f")
    gc = _require_int_nonzero(g, "g")
    return bareiss_det(sylvester_matrix(fc, gc))


# -- roots modulo p --------------------------------------------------------


def _reduce_mod(f: Poly, p: int) -> list[int]:
    cs = [c % p for c in f.int_coeffs()]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise PreconditionError(f"{f} vanishes identically modulo {p}")
    return cs


def _values_mod(cs: list[int], p: int) -> np.ndarray:
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(cs):
        acc = (acc * x + c) % p
    return acc


def roots_mod_p(f: Poly, p: int) -> list[int]:
    """Sorted residues ``x`` in ``[0, p)`` with ``f(x) == 0 (mod p)``."""
    cs = _reduce_mod(f, p)
    if p < 1 << 31:
        return np.flatnonzero(_values_mod(cs, p) == 0).tolist()
    return [x for x in range(p) if ieval_mod(cs, x, p) == 0]


def has_root_mod_p(f: Poly, p: int) -> bool:
    cs = _reduce_mod(f, p)
    if len(cs) == 1:
        return False
    if p > 4096 and p < 1 << 31:
        return bool((_values_mod(cs, p) == 0).any())
    return any(ieval_mod(cs, x, p) == 0 for x in range(p))


# -- real roots ------------------------------------------------------------


def _strip(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = a[-1] / lb
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        a.pop()
        _strip(a)
    return a


def sturm_sequence(f: list[Fraction]) -> list[list[Fraction]]:
    seq = [f, _strip([c * i for i, c in enumerate(f)][1:])]
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        seq.append([-c for c in r])
    seq.pop()
    return seq


def _sign_changes(signs) -> int:
    s = [v for v in signs if v]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def count_real_roots(f: Poly) -> int:
    """Number of distinct real roots, by Sturm's theorem."""
    if f.degree < 0:
        raise PreconditionError("zero polynomial has infinitely many roots")
    cs = f.rational_coeffs()
    if len(cs) == 1:
        return 0
    seq = sturm_sequence(cs)
    at_pos = [1 if s[-1] > 0 else -1 for s in seq]
    at_neg = [v if (len(s) - 1) % 2 == 0 else -v for v, s in zip(at_pos, seq)]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def choose_shift_no_real_roots(Q: Poly, A) -> int:
    """Integer M such that every ``Q + M + A_i`` has no real root.

    The admissible M form a half-line (toward +inf for a positive leading
    coefficient, -inf otherwise), so doubling finds one and bisection
    trims it to the smallest in magnitude.
    """
    if Q.degree < 2 or Q.degree % 2:
        raise PreconditionError(f"need even degree >= 2, got degree {Q.degree}")
    direction = 1 if Q.leading > 0 else -1
    shifts = sorted(set(int(a) for a in A))

    def ok(M: int) -> bool:
        return all(count_real_roots(Q + (M + a)) == 0 for a in shifts)

    if ok(0):
        return 0
    hi = 1
    while not ok(direction * hi):
        hi *= 2
    lo = hi // 2  # lo fails (or is 0, which failed)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(direction * mid):
            hi = mid
        else:
            lo = mid
    return direction * hi


# -- Hensel orbit ----------------------------------------------------------


def hensel_orbit_check(f: Poly, a: int, p: int) -> bool:
    """Check that ``f(a + k*p) == 0 (mod p**2)`` for ``k = 0..p-1``.

    Requires ``f(a) == 0 (mod p**2)`` and ``f'(a) == 0 (mod p)``; a violated
    precondition raises PreconditionError rather than returning False.
    """
    cs = f.int_coeffs()
    p2 = p * p
    if ieval_mod(cs, a, p2) != 0:
        raise PreconditionError(f"f({a}) is not divisible by {p}^2")
    if ieval_mod(derivative(f).int_coeffs(), a, p) != 0:
        raise PreconditionError(f"f'({a}) is not divisible by {p}")
    return all(ieval_mod(cs, a + k * p, p2) == 0 for k in range(p))
