"""Parsing and printing of element literals such as ``3/2 q^-1 * F^2 K^-1 E + x1^3``.

Grammar (whitespace between factors means multiplication)::

    element := ["+" | "-"] term (("+" | "-") term)*
    term    := factor (["*" | "/"] factor)*
    factor  := atom ["^" ["-"] INT]
    atom    := INT | "q" | "eps" | GENERATOR | ALIAS | "(" element ")"

Scalar factors (numbers, q, eps and parenthesized scalar expressions) must
come before any generator, and generators must appear in PBW order, each at
most once. Nothing is reordered silently. Aliases (for example ``x`` for
E^l) stand for whole elements; a term may multiply aliases in sequence but
may not mix them with bare generators. A divisor must be a scalar.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from ..errors import ParseError
from ..exactnum import CyclotomicNumber, RationalFunctionOfQ
from .element import NcElement, multiply

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^|\*|/|\+|-|\(|\)))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
        if m.group(1) is not None:
            tokens.append(("int", m.group(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, presentation, field, aliases: Mapping[str, NcElement]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.pres = presentation
        self.field = field
        self.aliases = dict(aliases)
        self.gen_index = {name: i for i, name in enumerate(presentation.names)}

    # -- token helpers -------------------------------------------------------

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise ParseError(f"expected {want} at token {self.pos}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def at(self, kind, value=None) -> bool:
        tok = self.peek()
        return tok[0] == kind and (value is None or tok[1] == value)

    # -- grammar -------------------------------------------------------------

    def parse(self):
        result = self.element()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input at token {self.pos}: {self.peek()[1]!r}")
        return result

    def element(self):
        sign = 1
        if self.at("op", "+") or self.at("op", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        total = self.term(sign)
        while self.at("op", "+") or self.at("op", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            total = total + self.term(sign)
        return total

    def exponent(self) -> int:
        if not self.at("op", "^"):
            return 1
        self.take()
        neg = False
        if self.at("op", "-"):
            self.take()
            neg = True
        value = int(self.take("int")[1])
        return -value if neg else value

    def term(self, sign: int):
        scalar = self.field.coerce(sign)
        gens: list[tuple[int, int]] = []
        alias_product: NcElement | None = None
        first = True
        while True:
            divide = False
            if not first:
                if self.at("op", "*"):
                    self.take()
                elif self.at("op", "/"):
                    self.take()
                    divide = True
                elif not (self.at("int") or self.at("name") or self.at("op", "(")):
                    break
            first = False
            kind, value = self.factor()
            if divide and kind != "scalar":
                raise ParseError("only scalars may appear after '/'")
            if kind == "scalar":
                if gens or alias_product is not None:
                    raise ParseError("scalar factors must precede generators and aliases")
                scalar = scalar / value if divide else scalar * value
            elif kind == "gen":
                if alias_product is not None:
                    raise ParseError("a term cannot mix aliases with generators")
                idx, power = value
                if gens and idx <= gens[-1][0]:
                    raise ParseError(
                        f"generator {self.pres.names[idx]} out of PBW order "
                        f"(expected order {' '.join(self.pres.names)})")
                gens.append((idx, power))
            else:
                if gens:
                    raise ParseError("a term cannot mix aliases with generators")
                alias_product = value if alias_product is None else multiply(alias_product, value)
        if alias_product is not None:
            return alias_product.scale(scalar)
        if not gens:
            return NcElement.scalar(self.pres, self.field, scalar)
        mono = [0] * self.pres.rank
        for idx, power in gens:
            mono[idx] = power
        try:
            return NcElement(self.pres, self.field, {tuple(mono): scalar})
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def factor(self):
        kind, value = self.peek()
        if kind == "int":
            self.take()
            base = Fraction(int(value))
            return "scalar", self.field.coerce(base) ** self.exponent()
        if kind == "op" and value == "(":
            self.take()
            inner = self.element()
            self.take("op", ")")
            if set(inner.terms) - {self.pres.one()}:
                raise ParseError("parenthesized expressions must be scalars")
            return "scalar", inner.coefficient(self.pres.one()) ** self.exponent()
        if kind == "name":
            self.take()
            if value in self.gen_index:
                return "gen", (self.gen_index[value], self.exponent())
            if value in self.aliases:
                return "alias", self.aliases[value] ** self.exponent()
            if value == "q":
                return "scalar", self._q() ** self.exponent()
            if value == "eps":
                if self.field.l is None:
                    raise ParseError("'eps' is only available for specialized elements")
                return "scalar", self._q() ** self.exponent()
            raise ParseError(f"unknown symbol {value!r}")
        raise ParseError(f"unexpected token {value!r}")

    def _q(self):
        if self.field.l is None:
            return RationalFunctionOfQ.q()
        return CyclotomicNumber.root_power(self.field.l, 1)


def parse_element(text: str, presentation, field, aliases: Mapping[str, NcElement] | None = None) -> NcElement:
    """Parse a literal into an element over ``field``.

    In specialized mode ``q`` and ``eps`` both denote the root of unity.
    """
    if not text.strip():
        raise ParseError("empty element literal")
    return _Parser(text, presentation, field, aliases or {}).parse()


# -- printing ---------------------------------------------------------------


def format_monomial(presentation, mono) -> str:
    parts = []
    for name, e in zip(presentation.names, mono):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def format_coefficient(c) -> str:
    if isinstance(c, CyclotomicNumber):
        return str(c)
    if c.is_constant():
        return str(c)
    return f"({c})"


def format_element(a: NcElement) -> str:
    if a.is_zero():
        return "0"
    pieces = []
    one = a.presentation.one()
    for mono, c in a.sorted_terms():
        cs = format_coefficient(c)
        if mono == one:
            body = cs
        elif cs == "1":
            body = format_monomial(a.presentation, mono)
        elif cs == "-1":
            body = "-" + format_monomial(a.presentation, mono)
        else:
            body = f"{cs} * {format_monomial(a.presentation, mono)}"
        pieces.append(body)
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
