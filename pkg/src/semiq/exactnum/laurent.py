"""Laurent polynomials in q with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from . import _dense as dense

RationalLike = Union[int, Fraction]


class LaurentPoly:
    """An element of Q[q, q^-1].

    Stored as ``q**low * (c[0] + c[1] q + ...)`` with ``c[0]`` and ``c[-1]``
    nonzero, so the representation is canonical and ``==`` is structural.
    """

    __slots__ = ("_low", "_c", "_hash")

    def __init__(self, coefficients: Mapping[int, RationalLike] | None = None):
        coefficients = {k: Fraction(v) for k, v in (coefficients or {}).items() if v}
        if not coefficients:
            self._low, self._c = 0, dense.ZERO
        else:
            low, high = min(coefficients), max(coefficients)
            self._low = low
            self._c = tuple(coefficients.get(k, Fraction(0)) for k in range(low, high + 1))
        self._hash = None

    @classmethod
    def _from_dense(cls, low: int, c: dense.Dense) -> "LaurentPoly":
        obj = object.__new__(cls)
        c = dense.trim(c)
        k = 0
        while k < len(c) and not c[k]:
            k += 1
        obj._low = low + k if c else 0
        obj._c = tuple(c[k:])
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: RationalLike) -> "LaurentPoly":
        return cls._from_dense(0, (Fraction(value),))

    @classmethod
    def monomial(cls, exponent: int, coefficient: RationalLike = 1) -> "LaurentPoly":
        return cls._from_dense(exponent, (Fraction(coefficient),))

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls.monomial(1)

    # -- accessors ---------------------------------------------------------

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return {self._low + i: c for i, c in enumerate(self._c) if c}

    @property
    def low(self) -> int:
        """Smallest exponent with a nonzero coefficient (0 for the zero polynomial)."""
        return self._low

    @property
    def high(self) -> int:
        return self._low + len(self._c) - 1 if self._c else 0

    def stripped(self) -> dense.Dense:
        """Dense coefficients of ``self / q**low``; an ordinary polynomial with nonzero constant term."""
        return self._c

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and self._low == 0)

    def constant_value(self) -> Fraction:
        return self.coefficients.get(0, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        low = min(self._low, other._low)
        a = (Fraction(0),) * (self._low - low) + self._c
        b = (Fraction(0),) * (other._low - low) + other._c
        return LaurentPoly._from_dense(low, dense.add(a, b))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._from_dense(self._low, dense.neg(self._c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._from_dense(self._low + other._low, dense.mul(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            return LaurentPoly.monomial(-self._low * -n, 1 / self._c[0] ** -n)
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        if not self._c:
            return self
        return LaurentPoly._from_dense(self._low + k, self._c)

    def derivative(self) -> "LaurentPoly":
        """Formal d/dq."""
        return LaurentPoly({e - 1: e * c for e, c in self.coefficients.items()})

    def q_derivative(self) -> "LaurentPoly":
        """The Euler operator q d/dq."""
        return LaurentPoly({e: e * c for e, c in self.coefficients.items()})

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._low == other._low and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._low, self._c))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.coefficients!r})"

    def __str__(self):
        return format_laurent(self.coefficients, "q")


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_laurent(coefficients: Mapping[int, Fraction], var: str) -> str:
    """Render ``{exponent: coefficient}`` as ``3/2 q^-1 - q^2`` (descending powers)."""
    if not coefficients:
        return "0"
    parts: list[tuple[str, str]] = []
    for e in sorted(coefficients, reverse=True):
        c = coefficients[e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = _fmt_rational(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{_fmt_rational(mag)} {power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
