import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from floorpoly.distribution import (
    ResidueHistogram,
    empirical_histogram,
    exact_histogram,
    floor_values,
    is_complete_mod_m,
    is_ud_mod_m,
    period_length,
    weyl_profile,
    weyl_sum,
)
from floorpoly.errors import BudgetExceeded, NotRationalError, PreconditionError
from floorpoly.exactcore import ExactReal, er_floor
from floorpoly.polyring import Poly, eval_at_int
from oracles import brute_histogram, poly_floor

x = Poly.x()
SQRT2 = ExactReal.sqrt(2)

CORPUS = [
    x * F(1, 2),
    x * F(2, 3),
    x * F(2, 3) + F(1, 2),
    x * x,
    x * x * F(1, 2),
    x * x * x + x,
    x**4 * F(1, 3) + x * F(1, 2),
    x**5 * F(2, 7),
    x**3 * F(1, 2) + F(1, 3),
    x * x * F(-3, 4) + SQRT2,
]


def test_exact_histogram_examples():
    h = exact_histogram(x * F(1, 2), 2)
    assert (h.counts, h.scanned, h.exact) == ((2, 2), 4, True)
    h = exact_histogram(x * F(2, 3), 2)
    assert (h.counts, h.scanned) == ((4, 2), 6)
    h = exact_histogram(x * x, 4)
    assert h.counts[2] == h.counts[3] == 0


def test_exact_histogram_errors():
    with pytest.raises(NotRationalError):
        exact_histogram(SQRT2 * x, 2)
    with pytest.raises(BudgetExceeded) as info:
        exact_histogram(x * F(1, 1000), 1000, max_period=10**5)
    assert info.value.budget["period"] == 10**6
    with pytest.raises(PreconditionError):
        exact_histogram(x, 1)


def test_ud_examples():
    assert all(is_ud_mod_m(x * F(1, 2), m) for m in range(2, 13))
    assert not is_ud_mod_m(x * F(2, 3), 2)
    assert not is_ud_mod_m(x * x, 49)
    assert exact_histogram(x * x, 49).counts[0] == 7


def test_complete_examples():
    assert is_complete_mod_m(x * x, 3) == (False, [2])
    assert is_complete_mod_m(x * x, 2) == (True, [])
    assert is_complete_mod_m(x * F(2, 3) + F(1, 2), 5) == (True, [])
    assert period_length(x * F(2, 3) + F(1, 2), 5) == 15


def test_empirical_examples():
    h = empirical_histogram(SQRT2 * x, 2, 10**4)
    assert max(abs(c - 5000) for c in h.counts) < 0.05 * 10**4
    assert empirical_histogram(x, 5, 100).counts == (20,) * 5
    h = empirical_histogram(x * x, 4, 400)
    assert h.counts[2] == h.counts[3] == 0
    assert not h.exact
    with pytest.raises(PreconditionError):
        empirical_histogram(x, 5, 4)


def test_floor_values_match_er_floor():
    rng = random.Random(2)
    for P in CORPUS + [SQRT2 * x * x - x * F(5, 3), -SQRT2 * x**3 * F(1, 7) + 2]:
        ks = [rng.randint(-10**6, 10**6) for _ in range(50)]
        assert [next(floor_values(P, k, k + 1)) for k in ks] == [er_floor(eval_at_int(P, k)) for k in ks]


@pytest.mark.parametrize("P", CORPUS, ids=str)
def test_periodicity(P):
    for m in (2, 3, 4, 7):
        T = period_length(P, m)
        for k in range(1, 201):
            assert (poly_floor(P.coeffs, k + T) - poly_floor(P.coeffs, k)) % m == 0


@pytest.mark.parametrize("P", CORPUS, ids=str)
def test_exact_equals_one_period_scan(P):
    for m in (2, 5, 6, 9):
        exact = exact_histogram(P, m)
        emp = empirical_histogram(P, m, exact.scanned)
        assert exact.counts == emp.counts
        if exact.scanned <= 3000:
            assert list(exact.counts) == brute_histogram(P, m, exact.scanned)


def test_vectorized_and_scalar_scans_agree():
    # period 2520 * 3 crosses into the array path
    P = x**3 * F(1, 8) + x * x * F(2, 9) - x * F(3, 5) + F(1, 7) * x**4
    h = exact_histogram(P, 3)
    assert h.scanned >= 2048
    assert list(h.counts) == brute_histogram(P, 3, h.scanned)


def test_shift_map_property():
    for a in range(-7, 8):
        for b in range(1, 8):
            if a == 0 or math.gcd(a, b) != 1:
                continue
            for beta in (F(0), F(1, 2), F(-3, 4)):
                for m in (2, 3, 4, 6):
                    c = exact_histogram(x * F(a, b) + beta, m).counts
                    assert all(c[i] == c[(i + a) % m] for i in range(m))


def test_sqrt2_shift_uses_exact_floor():
    # a0 = sqrt 2 is allowed in exact scans
    for a, b, m in [(1, 3, 4), (2, 5, 4), (3, 2, 9)]:
        P = x * F(a, b) + SQRT2
        assert is_ud_mod_m(P, m) == (math.gcd(a, m) == 1)


def test_histogram_merge_and_validation():
    P = x * x * F(1, 3)
    h1 = empirical_histogram(P, 4, 100)
    whole = empirical_histogram(P, 4, 300)
    tail = [0] * 4
    for v in floor_values(P, 101, 301):
        tail[v % 4] += 1
    merged = h1 + ResidueHistogram(4, tuple(tail), 200, False)
    assert merged.counts == whole.counts
    with pytest.raises(ValueError):
        ResidueHistogram(3, (1, 2), 3, True)
    with pytest.raises(ValueError):
        ResidueHistogram(2, (1, 2), 4, True)


def test_histogram_exports():
    h = exact_histogram(x * F(2, 3), 2)
    assert h.to_dict() == {"m": 2, "counts": [4, 2], "scanned": 6, "exact": True}
    assert h.to_csv() == "class,count\n0,4\n1,2\n"


def test_weyl_examples():
    assert weyl_sum(x, 2, 1, 1000).magnitude < 1e-12
    # floor(k^2) mod 4 is half 0 and half 1, and e(2c/4) = +-1 cancels
    assert weyl_sum(x * x, 4, 2, 10**4).magnitude < 1e-12
    assert weyl_sum(x * x, 4, 1, 10**4).magnitude == pytest.approx(math.sqrt(2) / 2)
    P = SQRT2 * x * x
    assert weyl_sum(P, 5, 1, 10**5).magnitude < weyl_sum(P, 5, 1, 10**3).magnitude
    with pytest.raises(PreconditionError):
        weyl_sum(x, 3, 3, 100)


def test_weyl_matches_direct_sum():
    import cmath

    P = SQRT2 * x * x * F(1, 3) + x
    for m, h in [(3, 1), (7, 4), (10, 9)]:
        n = 500
        direct = abs(sum(cmath.exp(2j * math.pi * h * poly_floor(P.coeffs, k) / m) for k in range(1, n + 1))) / n
        assert weyl_sum(P, m, h, n).magnitude == pytest.approx(direct, abs=1e-9)
    assert [w.h for w in weyl_profile(P, 6, 100)] == [1, 2, 3, 4, 5]


small_rational = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_rational, min_size=2, max_size=4), st.integers(2, 8))
def test_complete_when_ud(cs, m):
    P = Poly(cs)
    if not P.has_rational_nonconstant() or P.degree < 1:
        return
    ok, missing = is_complete_mod_m(P, m)
    if is_ud_mod_m(P, m):
        assert ok and missing == []
    assert ok == (missing == [])
