"""The field Q(q) of rational functions, the coefficient field of generic quantum algebras."""

from __future__ import annotations

from fractions import Fraction

from . import _dense as dense
from .laurent import LaurentPoly, RationalLike


class RationalFunctionOfQ:
    """``numerator / denominator`` with both parts Laurent polynomials in q.

    Canonical form: the denominator is an ordinary polynomial with constant
    term 1 and no common factor with the numerator; every power of q lives in
    the numerator. Two equal functions therefore have identical fields.
    """

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator: LaurentPoly | RationalLike, denominator: LaurentPoly | RationalLike = 1):
        if not isinstance(numerator, LaurentPoly):
            numerator = LaurentPoly.constant(numerator)
        if not isinstance(denominator, LaurentPoly):
            denominator = LaurentPoly.constant(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.numerator, self.denominator = _normalize(numerator, denominator)
        self._hash = None

    @classmethod
    def _raw(cls, numerator: LaurentPoly, denominator: LaurentPoly) -> "RationalFunctionOfQ":
        obj = object.__new__(cls)
        obj.numerator = numerator
        obj.denominator = denominator
        obj._hash = None
        return obj

    @classmethod
    def q_power(cls, k: int) -> "RationalFunctionOfQ":
        return cls._raw(LaurentPoly.monomial(k), _ONE_POLY)

    @classmethod
    def q(cls) -> "RationalFunctionOfQ":
        return cls.q_power(1)

    @classmethod
    def from_rational(cls, value: RationalLike) -> "RationalFunctionOfQ":
        return cls._raw(LaurentPoly.constant(value), _ONE_POLY)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_laurent(self) -> bool:
        return self.denominator == _ONE_POLY

    def is_constant(self) -> bool:
        return self.is_laurent() and self.numerator.is_constant()

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RationalFunctionOfQ | None":
        if isinstance(other, RationalFunctionOfQ):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunctionOfQ.from_rational(other)
        if isinstance(other, LaurentPoly):
            return RationalFunctionOfQ._raw(other, _ONE_POLY)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.denominator == other.denominator:
            return RationalFunctionOfQ(self.numerator + other.numerator, self.denominator)
        num = self.numerator * other.denominator + other.numerator * self.denominator
        return RationalFunctionOfQ(num, self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionOfQ._raw(-self.numerator, self.denominator)

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
        if self.is_zero() or other.is_zero():
            return _ZERO
        if self.is_laurent() and other.is_laurent():
            return RationalFunctionOfQ._raw(self.numerator * other.numerator, _ONE_POLY)
        return RationalFunctionOfQ(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunctionOfQ":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunctionOfQ(self.denominator, self.numerator)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "RationalFunctionOfQ":
        """Formal d/dq by the quotient rule."""
        n, d = self.numerator, self.denominator
        return RationalFunctionOfQ(n.derivative() * d - n * d.derivative(), d * d)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __repr__(self):
        return f"RationalFunctionOfQ({self.numerator!r}, {self.denominator!r})"

    def __str__(self):
        num = str(self.numerator)
        if self.is_laurent():
            return num
        if len(self.numerator.coefficients) > 1:
            num = f"({num})"
        return f"{num}/({self.denominator})"


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, _ONE_POLY
    shift = num.low - den.low
    n, d = num.stripped(), den.stripped()
    if len(d) > 1 and len(n) > 1:
        g = dense.gcd(n, d)
        if len(g) > 1:
            n = dense.exact_div(n, g)
            d = dense.exact_div(d, g)
    c0 = d[0]
    if c0 != 1:
        n = dense.scale(n, 1 / c0)
        d = dense.scale(d, 1 / c0)
    return LaurentPoly._from_dense(shift, n), LaurentPoly._from_dense(0, d)


_ONE_POLY = LaurentPoly.constant(1)
_ZERO = RationalFunctionOfQ._raw(LaurentPoly(), _ONE_POLY)
_ONE = RationalFunctionOfQ._raw(_ONE_POLY, _ONE_POLY)


def quantum_integer(n: int) -> RationalFunctionOfQ:
    """[n] = (q^n - q^-n) / (q - q^-1)."""
    if n == 0:
        return _ZERO
    # exact quotient: q^(n-1) + q^(n-3) + ... + q^(1-n)
    sign = 1 if n > 0 else -1
    m = abs(n)
    return RationalFunctionOfQ._raw(
        LaurentPoly({m - 1 - 2 * i: sign for i in range(m)}), _ONE_POLY
    )


def quantum_factorial(n: int) -> RationalFunctionOfQ:
    result = _ONE
    for k in range(1, n + 1):
        result = result * quantum_integer(k)
    return result


def quantum_binomial(n: int, k: int) -> RationalFunctionOfQ:
    if k < 0 or k > n:
        return _ZERO
    return quantum_factorial(n) / (quantum_factorial(k) * quantum_factorial(n - k))
