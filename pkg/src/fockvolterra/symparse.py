"""Tiny expression grammar for polynomial symbols and series.

    poly  := term ('+' term)*
    term  := coeff 'z' ['^' integer] | coeff | 'z' ['^' integer]
    coeff := signed decimal | '(' re ('+'|'-') im 'i' ')'

Whitespace is ignored everywhere. Parse failures carry the byte offset of
the offending character. Formatting is canonical so that a parsed symbol
round-trips to the same coefficients bit for bit.
"""

from __future__ import annotations

import numpy as np

from .operators import PolynomialSymbol
from .series import TruncatedSeries


class SymbolParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"at byte {position}: {message}")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise SymbolParseError(f"expected {ch!r}", self.pos)

    def decimal(self, signed: bool = True) -> float:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = 0
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
            digits += 1
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
                digits += 1
        if digits == 0:
            raise SymbolParseError("expected a number", start)
        if self.pos < len(self.text) and self.text[self.pos] in "eE":
            mark = self.pos
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos] in "+-":
                self.pos += 1
            expd = 0
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
                expd += 1
            if expd == 0:  # bare 'e' was not an exponent
                self.pos = mark
        return float(self.text[start : self.pos])

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SymbolParseError("expected an integer", start)
        return int(self.text[start : self.pos])


def _coeff(sc: _Scanner) -> complex:
    if sc.take("("):
        re = sc.decimal()
        sc.skip_ws()
        if sc.peek() not in "+-":
            raise SymbolParseError("expected '+' or '-' in complex coefficient", sc.pos)
        sign = 1.0 if sc.take("+") else (sc.take("-"), -1.0)[1]
        im = sc.decimal(signed=False)
        sc.expect("i")
        sc.expect(")")
        return complex(re, sign * im)
    return complex(sc.decimal(), 0.0)


def _term(sc: _Scanner) -> tuple[int, complex]:
    """One term -> (power, coefficient)."""
    ch = sc.peek()
    if ch == "z":
        coeff = 1.0 + 0.0j
    else:
        coeff = _coeff(sc)
    if sc.take("z"):
        power = sc.integer() if sc.take("^") else 1
    else:
        power = 0
    return power, coeff


def parse_polynomial(text: str) -> np.ndarray:
    """Dense complex coefficients c_0..c_d of the parsed polynomial."""
    sc = _Scanner(text)
    terms = [_term(sc)]
    while True:
        sc.skip_ws()
        if sc.pos >= len(sc.text):
            break
        ch = sc.text[sc.pos]
        if ch == "+":
            sc.pos += 1
            terms.append(_term(sc))
        elif ch == "-" or ch == "(":
            # tolerate '-' as a separator (sign folds into the coefficient)
            terms.append(_term(sc))
        else:
            raise SymbolParseError(f"unexpected character {ch!r}", sc.pos)
    degree = max(p for p, _ in terms)
    coeffs = np.zeros(degree + 1, dtype=np.complex128)
    for power, c in terms:
        coeffs[power] += c
    return coeffs


def parse_series(text: str, order: int | None = None) -> TruncatedSeries:
    coeffs = parse_polynomial(text)
    f = TruncatedSeries(coeffs)
    return f if order is None else f.truncated(order)


def parse_symbol(text: str) -> tuple[PolynomialSymbol, complex]:
    """Parse a symbol g; returns (symbol, dropped constant term)."""
    coeffs = parse_polynomial(text)
    dropped = complex(coeffs[0])
    if coeffs.size < 2 or not np.any(coeffs[1:]):
        raise SymbolParseError("symbol must have degree >= 1", 0)
    return PolynomialSymbol(coeffs[1:]), dropped


def _format_number(x: float) -> str:
    return f"{x:.17g}"


def format_coefficient(c: complex) -> str:
    if c.imag == 0.0:
        return _format_number(c.real)
    sign = "+" if c.imag >= 0 else "-"
    return f"({_format_number(c.real)}{sign}{_format_number(abs(c.imag))}i)"


def format_polynomial(coeffs) -> str:
    """Canonical text form; parses back to identical coefficients."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    parts = []
    for power in range(coeffs.size - 1, -1, -1):
        c = complex(coeffs[power])
        if c == 0:
            continue
        cs = format_coefficient(c)
        if power == 0:
            parts.append(cs)
        elif power == 1:
            parts.append(f"{cs}z")
        else:
            parts.append(f"{cs}z^{power}")
    if not parts:
        return "0"
    return "+".join(parts)


def format_symbol(g: PolynomialSymbol) -> str:
    return format_polynomial(np.concatenate([[0.0 + 0.0j], g.coeffs]))
