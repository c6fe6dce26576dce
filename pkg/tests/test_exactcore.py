import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from floorpoly.errors import FieldMismatchError
from floorpoly.exactcore import (
    ExactReal,
    er_add,
    er_cmp,
    er_floor,
    er_make,
    er_mul,
    er_scale_int,
    squarefree_split,
)
from oracles import decimal_floor

SQRT2 = ExactReal.sqrt(2)


@pytest.mark.parametrize(
    "args, expected",
    [
        ((0, 1, 8), (F(0), F(2), 2)),
        ((F(1, 2), 0, 0), (F(1, 2), F(0), 0)),
        ((0, 1, 9), (F(3), F(0), 0)),
        ((1, 3, 12), (F(1), F(6), 3)),
        ((0, 5, 0), (F(0), F(0), 0)),
        ((0, 2, 1), (F(2), F(0), 0)),
    ],
)
def test_make_canonical(args, expected):
    x = er_make(*args)
    assert (x.q, x.r, x.d) == expected


def test_make_rejects_negative_radicand():
    with pytest.raises(ValueError):
        er_make(0, 1, -2)


def test_squarefree_split():
    for d in range(1, 500):
        s, f = squarefree_split(d)
        assert f * f * s == d
        assert all(s % (p * p) for p in range(2, s + 1) if p * p <= s)


def test_cmp_examples():
    assert er_cmp(SQRT2, ExactReal.rational(1)) == 1
    assert er_cmp(1 + SQRT2, ExactReal.rational(F(5, 2))) == -1
    x = er_make(F(3, 7), F(-2, 5), 11)
    assert er_cmp(x, x) == 0


def test_cmp_rejects_mixed_fields():
    with pytest.raises(FieldMismatchError):
        er_cmp(SQRT2, ExactReal.sqrt(3))


def test_floor_examples():
    assert er_floor(SQRT2) == 1
    assert er_floor(-SQRT2) == -2
    assert er_floor(er_make(F(7, 2), 0, 0)) == 3
    assert er_floor(er_make(F(-7, 2), 0, 0)) == -4


def test_field_arithmetic_examples():
    assert er_mul(1 + SQRT2, 1 - SQRT2) == ExactReal.rational(-1)
    assert er_mul(SQRT2, SQRT2) == ExactReal.rational(2)
    assert er_scale_int(F(1, 3) + SQRT2, 3) == er_make(1, 3, 2)
    with pytest.raises(FieldMismatchError):
        er_add(SQRT2, ExactReal.sqrt(5))


def test_inverse_and_division():
    x = er_make(F(2, 3), F(-5, 7), 6)
    assert x * (1 / x) == ExactReal.rational(1)
    assert (x / 3) * 3 == x


def _random_real(rng):
    num = lambda: rng.randint(-(10**6), 10**6)
    den = lambda: rng.randint(1, 10**6)
    return er_make(F(num(), den()), F(num(), den()), rng.randint(0, 50))


def test_floor_matches_decimal_oracle():
    rng = random.Random(20261014)
    for _ in range(10_000):
        x = _random_real(rng)
        assert er_floor(x) == decimal_floor(x.q, x.r, x.d), x


def test_floor_huge_magnitude():
    x = er_make(F(10**400 + 1, 3), F(10**300), 7)
    assert er_floor(x) == decimal_floor(x.q, x.r, x.d, digits=1000)


reals = st.builds(
    er_make,
    st.fractions(max_denominator=10**6).filter(lambda f: abs(f) < 10**6),
    st.fractions(max_denominator=10**6).filter(lambda f: abs(f) < 10**6),
    st.sampled_from([0, 2, 3, 5, 6, 7]),
)
same_field = st.sampled_from([2, 3, 5]).flatmap(
    lambda d: st.tuples(
        *[
            st.builds(er_make, st.fractions(max_denominator=1000), st.fractions(max_denominator=1000), st.just(d))
            for _ in range(3)
        ]
    )
)


@given(reals, st.integers(-1000, 1000))
def test_floor_shift_by_integer(x, n):
    assert er_floor(x + n) == er_floor(x) + n


@given(reals)
def test_make_idempotent(x):
    assert er_make(x.q, x.r, x.d) == x


@given(same_field)
def test_cmp_total_order(triple):
    x, y, z = triple
    assert er_cmp(x, y) == -er_cmp(y, x)
    if er_cmp(x, y) <= 0 and er_cmp(y, z) <= 0:
        assert er_cmp(x, z) <= 0
    assert (er_cmp(x, y) == 0) == (x == y)


@given(same_field)
def test_ring_laws(triple):
    x, y, z = triple
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x


def test_text_form():
    assert str(er_make(F(1, 2), F(3, 4), 2)) == "1/2 + 3/4*sqrt(2)"
    assert str(er_make(1, -1, 2)) == "1 - sqrt(2)"
    assert str(er_make(0, -2, 3)) == "-2*sqrt(3)"
    assert str(ExactReal.rational(F(-5, 3))) == "-5/3"
