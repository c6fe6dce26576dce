"""Exact arithmetic in Q and in real quadratic fields Q(sqrt(d)).

Rationals are :class:`fractions.Fraction`.  An :class:`ExactReal` is a value
``q + r*sqrt(d)`` with rational ``q``, ``r`` and squarefree ``d >= 2`` (or
``r == 0`` and ``d == 0`` for a plain rational).  Comparisons and floors are
decided with integer arithmetic only; floats are used solely to guess a
starting bracket for :func:`er_floor`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import FieldMismatchError

Rational = Fraction

__all__ = [
    "Rational",
    "ExactReal",
    "er_make",
    "er_cmp",
    "er_sign",
    "er_floor",
    "er_add",
    "er_sub",
    "er_neg",
    "er_mul",
    "er_inv",
    "er_scale_int",
    "as_exact",
    "squarefree_split",
    "format_rational",
]


def squarefree_split(d: int) -> tuple[int, int]:
    """Return ``(s, f)`` with ``d == f*f*s`` and ``s`` squarefree."""
    if d < 0:
        raise ValueError(f"radicand must be non-negative, got {d}")
    if d == 0:
        return 0, 0
    s, f = 1, 1
    rest = d
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        f *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1 if p == 2 else 2
    s *= rest
    return s, f


@dataclass(frozen=True, slots=True)
class ExactReal:
    q: Fraction
    r: Fraction
    d: int

    # -- constructors -----------------------------------------------------

    @classmethod
    def rational(cls, value) -> ExactReal:
        return cls(Fraction(value), Fraction(0), 0)

    @classmethod
    def sqrt(cls, d: int) -> ExactReal:
        return er_make(0, 1, d)

    # -- predicates -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.r == 0

    @property
    def is_integer(self) -> bool:
        return self.r == 0 and self.q.denominator == 1

    @property
    def is_zero(self) -> bool:
        return self.r == 0 and self.q == 0

    def conjugate(self) -> ExactReal:
        return ExactReal(self.q, -self.r, self.d)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_mul(self, er_inv(other))

    def __rtruediv__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_mul(other, er_inv(self))

    def __neg__(self):
        return er_neg(self)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = ExactReal.rational(1)
        base = self
        while e:
            if e & 1:
                result = er_mul(result, base)
            base = er_mul(base, base)
            e >>= 1
        return result

    # -- ordering ---------------------------------------------------------

    def __lt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_cmp(self, other) < 0

    def __le__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_cmp(self, other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_cmp(self, other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else er_cmp(self, other) >= 0

    # -- conversions ------------------------------------------------------

    def __float__(self) -> float:
        return float(self.q) + float(self.r) * math.sqrt(self.d)

    def __floor__(self) -> int:
        return er_floor(self)

    def __str__(self) -> str:
        if self.r == 0:
            return format_rational(self.q)
        rad = _format_radical(self.r, self.d)
        if self.q == 0:
            return rad
        if rad.startswith("-"):
            return f"{format_rational(self.q)} - {rad[1:]}"
        return f"{format_rational(self.q)} + {rad}"


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _format_radical(r: Fraction, d: int) -> str:
    if r == 1:
        return f"sqrt({d})"
    if r == -1:
        return f"-sqrt({d})"
    return f"{format_rational(r)}*sqrt({d})"


def _coerce(x) -> ExactReal | None:
    if isinstance(x, ExactReal):
        return x
    if isinstance(x, (int, _RationalABC)):
        return ExactReal(Fraction(x), Fraction(0), 0)
    return None


def as_exact(x) -> ExactReal:
    """Coerce an int, Fraction or ExactReal to ExactReal."""
    out = _coerce(x)
    if out is None:
        raise TypeError(f"cannot interpret {x!r} as an exact real")
    return out


def er_make(q, r, d: int) -> ExactReal:
    """Build the canonical representation of ``q + r*sqrt(d)``."""
    q, r = Fraction(q), Fraction(r)
    if d < 0:
        raise ValueError(f"radicand must be non-negative, got {d}")
    s, f = squarefree_split(d)
    if s == 0:
        r = Fraction(0)
    elif s == 1:
        q, r = q + r * f, Fraction(0)
    else:
        r *= f
    if r == 0:
        return ExactReal(q, Fraction(0), 0)
    return ExactReal(q, r, s)


def _common_field(x: ExactReal, y: ExactReal) -> int:
    if x.d == y.d or y.d == 0:
        return x.d
    if x.d == 0:
        return y.d
    raise FieldMismatchError(f"cannot combine sqrt({x.d}) with sqrt({y.d})")


def er_add(x: ExactReal, y: ExactReal) -> ExactReal:
    d = _common_field(x, y)
    r = x.r + y.r
    return ExactReal(x.q + y.q, r, d if r else 0)


def er_neg(x: ExactReal) -> ExactReal:
    return ExactReal(-x.q, -x.r, x.d)


def er_sub(x: ExactReal, y: ExactReal) -> ExactReal:
    return er_add(x, er_neg(y))


def er_mul(x: ExactReal, y: ExactReal) -> ExactReal:
    d = _common_field(x, y)
    q = x.q * y.q + x.r * y.r * d
    r = x.q * y.r + x.r * y.q
    return ExactReal(q, r, d if r else 0)


def er_inv(x: ExactReal) -> ExactReal:
    if x.is_zero:
        raise ZeroDivisionError("inverse of zero")
    norm = x.q * x.q - x.r * x.r * x.d
    return ExactReal(x.q / norm, -x.r / norm, x.d)


def er_scale_int(x: ExactReal, n: int) -> ExactReal:
    if n == 0:
        return ExactReal(Fraction(0), Fraction(0), 0)
    return ExactReal(x.q * n, x.r * n, x.d)


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def _sign_parts(q: Fraction, r: Fraction, d: int) -> int:
    sq, sr = _sgn(q), _sgn(r)
    if sr == 0:
        return sq
    if sq == 0 or sq == sr:
        return sr
    # opposite signs: compare q^2 with r^2*d on integers
    a, b, c, e = q.numerator, q.denominator, r.numerator, r.denominator
    return sq if a * a * e * e > c * c * d * b * b else sr


def er_sign(x: ExactReal) -> int:
    """Sign of ``q + r*sqrt(d)`` using one squaring step."""
    return _sign_parts(x.q, x.r, x.d)


def er_cmp(x: ExactReal, y: ExactReal) -> int:
    """Return -1, 0 or 1 as ``x < y``, ``x == y`` or ``x > y``."""
    return er_sign(er_sub(x, y))


def _estimate_floor(x: ExactReal) -> int:
    try:
        est = float(x.q) + float(x.r) * math.sqrt(x.d)
        if math.isfinite(est):
            return math.floor(est)
    except OverflowError:
        pass
    # huge magnitudes: integer square root gets within a couple of units
    rad = math.isqrt(math.floor(x.r * x.r * x.d))
    return math.floor(x.q) + (rad if x.r >= 0 else -rad)


def er_floor(x: ExactReal) -> int:
    """Unique integer ``t`` with ``t <= x < t + 1``.

    A numeric estimate is certified exactly; when it is off, the bracket
    ``[est - 2, est + 3)`` is widened and bisected.
    """
    if x.r == 0:
        return math.floor(x.q)
    q, r, d = x.q, x.r, x.d

    def at_least(t: int) -> bool:
        return _sign_parts(q - t, r, d) >= 0

    est = _estimate_floor(x)
    if at_least(est) and not at_least(est + 1):
        return est
    lo, hi = est - 2, est + 3
    step = 4
    while not at_least(lo):
        lo -= step
        step *= 2
    step = 4
    while at_least(hi):
        hi += step
        step *= 2
    # invariant: lo <= x < hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if at_least(mid):
            lo = mid
        else:
            hi = mid
    return lo
