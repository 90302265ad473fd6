"""Text grammar for polynomials.

    polynomial := term (("+"|"-") term)*
    term       := [coeff "*"] factor ("*" factor)*  |  coeff
    factor     := var ("^" uint)?
    coeff      := uint

Whitespace is ignored everywhere. A bare unsigned integer is accepted as a
constant term. Examples: "x^2 - y^3", "2*x*y + 1".
"""

from __future__ import annotations

from .errors import PolynomialParseError
from .polynomials import Polynomial


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise PolynomialParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


def parse_polynomial(text: str, var_names, p: int) -> Polynomial:
    """Parse the grammar above into a polynomial over F_p.

    Unknown variable names and malformed syntax raise PolynomialParseError
    with the character position of the problem.
    """
    tokens = _tokenize(text)
    index = {name: i for i, name in enumerate(var_names)}
    nvars = len(var_names)
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_factor():
        kind, value, at = advance()
        if kind != "name":
            raise PolynomialParseError(f"expected a variable, got {value!r}", at)
        if value not in index:
            raise PolynomialParseError(f"unknown variable {value!r}", at)
        exponent = 1
        if peek()[0] == "^":
            advance()
            kind, value2, at2 = advance()
            if kind != "int":
                raise PolynomialParseError("expected an exponent", at2)
            exponent = int(value2)
        return index[value], exponent

    def parse_term():
        coeff = 1
        expo = [0] * nvars
        kind, value, at = peek()
        if kind == "int":
            advance()
            coeff = int(value)
            if peek()[0] != "*":
                return coeff, tuple(expo)  # bare constant
            advance()
        elif kind != "name":
            raise PolynomialParseError(f"expected a term, got {value!r}", at)
        while True:
            var, exponent = parse_factor()
            expo[var] += exponent
            if peek()[0] != "*":
                break
            advance()
        return coeff, tuple(expo)

    total = Polynomial.zero(p, nvars)
    sign = 1
    kind, value, at = peek()
    if kind in ("+", "-"):
        advance()
        sign = -1 if kind == "-" else 1
    while True:
        coeff, mono = parse_term()
        total = total + Polynomial.term(p, nvars, mono, sign * coeff)
        kind, value, at = peek()
        if kind == "end":
            return total
        if kind == "+":
            sign = 1
        elif kind == "-":
            sign = -1
        else:
            raise PolynomialParseError(f"expected '+' or '-', got {value!r}", at)
        advance()
