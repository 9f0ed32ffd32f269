# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import re
from fractions import Fraction

from ..errors import ParseError
from .ring import ZERO, Series

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>b)|(?P<pow>\^)|(?P<star>\*)|(?P<sign>[+-]))"
)


def format_rational(value):
    """Rational number as "p" or "p/q" """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    """Inverse of format_rational

    :raises ParseError: when the text is not an integer or a quotient of integers
    """
    match = re.fullmatch(r"\s*([+-]?\d+)(?:/(\d+))?\s*", str(text))
    if match is None:
        raise ParseError(f"not a rational number: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def _format_term(coefficient, power):
    magnitude = abs(coefficient)
    if power == 0:
        return format_rational(magnitude)
    monomial = "b" if power == 1 else f"b^{power}"
    if magnitude == 1:
        return monomial
    return f"{format_rational(magnitude)}*{monomial}"


def format_series(series):
    """Canonical text form, e.g. "1 - b + 3/2*b^2".

    Only the nonzero coefficients below the truncation order are printed,
    the zero series prints as "0".
    """
    parts = []
    for power, coefficient in enumerate(series.coeffs):
        if coefficient == 0:
            continue
        term = _format_term(coefficient, power)
        if not parts:
            parts.append(term if coefficient > 0 else f"-{term}")
        else:
            parts.append(f" + {term}" if coefficient > 0 else f" - {term}")
    return "".join(parts) if parts else "0"


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            column = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[column - 1]!r}", column=column)
        kind = match.lastgroup
        column = match.start(kind) + 1
        tokens.append((kind, match.group(kind), column))
        pos = match.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _SeriesParser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def take(self, kind=None):
        token = self.tokens[self.index]
        if kind is not None and token[0] != kind:
            expected = {"num": "a number", "var": "'b'", "end": "end of input"}.get(kind, kind)
            found = token[1] or "end of input"
            raise ParseError(f"expected {expected}, found {found!r}", column=token[2])
        self.index += 1
        return token

    def power(self):
        self.take("var")
        if self.peek()[0] == "pow":
            self.take("pow")
            token = self.take("num")
            if "/" in token[1]:
                raise ParseError("exponent should be a non-negative integer", column=token[2])
            return int(token[1])
        return 1

    def term(self):
        sign = 1
        if self.peek()[0] == "sign":
            sign = -1 if self.take()[1] == "-" else 1
        kind = self.peek()[0]
        if kind == "var":
            return Fraction(sign), self.power()
        token = self.take("num")
        coefficient = sign * parse_rational(token[1])
        if self.peek()[0] == "star":
            self.take("star")
            return coefficient, self.power()
        return coefficient, 0

    def parse(self):
        terms = [self.term()]
        while self.peek()[0] == "sign":
            terms.append(self.term())
        self.take("end")
        return terms


def parse_series(text, trunc):
    """Parse the canonical text form of a series.

    Terms may repeat powers and appear in any order; terms of degree >= trunc
    are dropped.

    :param str text: series text, e.g. "1/2*b + b^2"
    :param int trunc: truncation order of the result
    :return: the parsed series
    :rtype: Series
    :raises ParseError: with the 1-based column of the offending token
    """
    if not isinstance(text, str):
        raise ParseError(f"series should be given as a string, got {type(text).__name__}")
    if text.strip() == "":
        raise ParseError("empty series", column=1)
    values = [ZERO] * trunc
    for coefficient, power in _SeriesParser(text).parse():
        if power < trunc:
            values[power] += coefficient
    return Series(values, trunc)
