import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from floorpoly.cli.expr import MixedFieldError, format_poly, parse_exact, parse_poly
from floorpoly.errors import ParseError
from floorpoly.exactcore import ExactReal, er_make
from floorpoly.polyring import Poly

x = Poly.x()


def test_examples():
    assert parse_poly("1/2*x^2") == x * x * F(1, 2)
    P = parse_poly("sqrt(2)*x + 1/2")
    assert P.coeff(1) == ExactReal.sqrt(2) and P.coeff(0) == ExactReal.rational(F(1, 2))
    with pytest.raises(MixedFieldError) as info:
        parse_poly("sqrt(2)*x + sqrt(3)")
    assert info.value.position == 12


@pytest.mark.parametrize(
    "src, expected",
    [
        ("x", x),
        ("-x^3 + 2", -(x**3) + 2),
        ("x^2/2", x * x * F(1, 2)),
        ("3 x^4 / 5", x**4 * F(3, 5)),
        ("2*sqrt(8)*x", x * er_make(0, 4, 2)),
        ("sqrt(9)", Poly([3])),
        ("1/2 - 3/4*sqrt(2)*x + 5", x * er_make(0, F(-3, 4), 2) + F(11, 2)),
        ("x^2 + x^2", x * x * 2),
        ("0", Poly()),
    ],
)
def test_parse_forms(src, expected):
    assert parse_poly(src) == expected


@pytest.mark.parametrize(
    "src, pos",
    [("x^", 2), ("x + ", 4), ("2 $ x", 2), ("sqrt(2", 6), ("1/0", 2), ("", 0), ("x y", 2)],
)
def test_syntax_errors_carry_position(src, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(src)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


def test_parse_exact():
    assert parse_exact("1/2 + 3/4*sqrt(2)") == er_make(F(1, 2), F(3, 4), 2)
    assert parse_exact("-7/3") == ExactReal.rational(F(-7, 3))
    with pytest.raises(ParseError):
        parse_exact("x + 1")


def _random_source(rng: random.Random) -> str:
    """A grammar-valid expression with varied spacing and term shapes."""
    d = rng.choice([2, 3, 5, 7, 12])
    parts = []
    for i in range(rng.randint(1, 5)):
        shape = rng.randrange(5)
        num, den = rng.randint(0, 40), rng.randint(1, 9)
        rat = f"{num}" if den == 1 or rng.random() < 0.4 else f"{num}/{den}"
        mono = rng.choice(["", "x", f"x^{rng.randint(0, 6)}"])
        if shape == 0:
            term = rat
        elif shape == 1:
            term = f"{rat}*sqrt({d})"
        elif shape == 2:
            term = f"sqrt({d})"
        elif shape == 3:
            term = mono or "x"
        else:
            term = rat + ("*" if rng.random() < 0.7 else " ") + (mono or "x")
        if rng.random() < 0.2 and shape in (3, 4):
            term += f"/{rng.randint(1, 9)}"
        sign = rng.choice(["+", "-"])
        if i == 0:
            parts.append(("-" if sign == "-" else "") + term)
        else:
            parts.append(rng.choice([" ", ""]) + sign + rng.choice([" ", ""]) + term)
    return "".join(parts)


def test_round_trip_random_sources():
    rng = random.Random(200)
    for _ in range(200):
        src = _random_source(rng)
        P = parse_poly(src)
        text = format_poly(P)
        assert parse_poly(text) == P, (src, text)
        assert format_poly(parse_poly(text)) == text


coeff = st.builds(
    er_make,
    st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100),
    st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100),
    st.just(6),
)


@given(st.lists(coeff, max_size=6))
def test_print_parse_inverse(cs):
    P = Poly(cs)
    assert parse_poly(str(P)) == P
