"""Parser for polynomial expressions such as ``1/2*x^2 - 3/4*sqrt(2)*x + 5``.

Grammar::

    expr     := sign? term (('+' | '-') term)*
    term     := coeff ('*'? mono)? divisor? | mono divisor?
    coeff    := rational ('*'? radical)? | radical
    mono     := 'x' ('^' uint)?
    divisor  := '/' uint
    rational := uint ('/' uint)?
    radical  := 'sqrt(' uint ')'

Whitespace is ignored.  All radicals in one expression must live in the same
field Q(sqrt(d)) after extracting square factors.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from ..exactcore import ExactReal, er_make
from ..polyring import Poly, format_poly

__all__ = ["parse_poly", "parse_exact", "format_poly", "MixedFieldError"]


class MixedFieldError(ParseError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|(x)|([-+*/^()]))")


def _tokenize(s: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _TOKEN.match(s, pos)
        if not m:
            bad = len(s) - len(s[pos:].lstrip()) if s[pos].isspace() else pos
            raise ParseError(f"unexpected character {s[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("sqrt", "sqrt", start))
        elif m.group(3):
            tokens.append(("x", "x", start))
        else:
            tokens.append((m.group(4), m.group(4), start))
        pos = m.end()
    tokens.append(("end", "", len(s)))
    return tokens


class _Parser:
    def __init__(self, s: str):
        self.src = s
        self.tokens = _tokenize(s)
        self.i = 0
        self.field: tuple[int, int] | None = None  # (radicand, position first seen)

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, kind: str, expected: str | None = None):
        t = self.tok
        if t[0] != kind:
            raise ParseError(f"unexpected {t[1] or 'end of input'!r}", t[2], expected or kind)
        self.i += 1
        return t

    def accept(self, kind: str) -> bool:
        if self.tok[0] == kind:
            self.i += 1
            return True
        return False

    def uint(self) -> int:
        return int(self.take("int", "unsigned integer")[1])

    def nonzero_uint(self) -> int:
        pos = self.tok[2]
        v = self.uint()
        if v == 0:
            raise ParseError("division by zero", pos)
        return v

    def radical(self) -> ExactReal:
        pos = self.take("sqrt")[2]
        self.take("(", "'('")
        d = self.uint()
        self.take(")", "')'")
        val = er_make(0, 1, d)
        if val.d:
            if self.field is None:
                self.field = (val.d, pos)
            elif self.field[0] != val.d:
                raise MixedFieldError(
                    f"sqrt({d}) lies outside Q(sqrt({self.field[0]})) "
                    f"introduced at position {self.field[1]}",
                    pos,
                )
        return val

    def term(self) -> tuple[ExactReal, int]:
        coeff = ExactReal.rational(1)
        have_coeff = False
        kind = self.tok[0]
        if kind == "int":
            num = self.uint()
            if self.tok[0] == "/" and self.tokens[self.i + 1][0] == "int":
                self.i += 1
                num = Fraction(num, self.nonzero_uint())
            coeff = ExactReal.rational(num)
            have_coeff = True
            if self.tok[0] == "*" and self.tokens[self.i + 1][0] == "sqrt":
                self.i += 1
            if self.tok[0] == "sqrt":
                coeff = coeff * self.radical()
        elif kind == "sqrt":
            coeff = self.radical()
            have_coeff = True
        elif kind != "x":
            raise ParseError(f"unexpected {self.tok[1] or 'end of input'!r}", self.tok[2], "term")

        power = 0
        if have_coeff and self.tok[0] == "*":
            self.i += 1
            if self.tok[0] != "x":
                raise ParseError(f"unexpected {self.tok[1] or 'end of input'!r}", self.tok[2], "'x'")
        if self.accept("x"):
            power = 1
            if self.accept("^"):
                power = self.uint()
        if self.tok[0] == "/":
            self.i += 1
            coeff = coeff / self.nonzero_uint()
        return coeff, power

    def expr(self) -> Poly:
        terms: dict[int, ExactReal] = {}
        sign = 1
        if self.tok[0] in "+-" and self.tok[0] != "end":
            sign = -1 if self.tok[0] == "-" else 1
            self.i += 1
        while True:
            c, n = self.term()
            terms[n] = terms.get(n, ExactReal.rational(0)) + (c if sign > 0 else -c)
            if self.tok[0] == "+":
                sign = 1
            elif self.tok[0] == "-":
                sign = -1
            else:
                break
            self.i += 1
        if self.tok[0] != "end":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2], "'+', '-' or end of input")
        deg = max(terms)
        return Poly([terms.get(i, 0) for i in range(deg + 1)])


def parse_poly(s: str) -> Poly:
    if not s or not s.strip():
        raise ParseError("empty expression", 0, "term")
    return _Parser(s).expr()


def parse_exact(s: str) -> ExactReal:
    """Parse a constant such as ``1/2 + 3/4*sqrt(2)``."""
    P = parse_poly(s)
    if P.degree > 0:
        raise ParseError("expected a constant, found a term in x", 0)
    return P.constant
