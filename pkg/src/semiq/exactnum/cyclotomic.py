"""Exact arithmetic in Q(eps), eps a primitive l-th root of unity.

Elements are residues modulo the cyclotomic polynomial Phi_l, stored as
phi(l) rational coordinates in the power basis 1, eps, ..., eps^(phi(l)-1).
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from typing import Iterable, Sequence

from . import _dense as dense
from .laurent import _fmt_rational

_PHI_CACHE: dict[int, tuple[Fraction, ...]] = {}
_PHI_LOCK = threading.Lock()


def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def _build_cyclotomic(n: int) -> tuple[Fraction, ...]:
    # Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)
    num, den = dense.ONE, dense.ONE
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(n // d)
        if mu == 0:
            continue
        factor = (Fraction(-1),) + (Fraction(0),) * (d - 1) + (Fraction(1),)
        if mu == 1:
            num = dense.mul(num, factor)
        else:
            den = dense.mul(den, factor)
    return dense.exact_div(num, den)


def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Dense coefficients of Phi_n, lowest degree first.

    Memoized unless ``SEMIQ_NO_PHI_CACHE`` is set in the environment.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    if os.environ.get("SEMIQ_NO_PHI_CACHE"):
        return _build_cyclotomic(n)
    cached = _PHI_CACHE.get(n)
    if cached is None:
        cached = _build_cyclotomic(n)
        with _PHI_LOCK:
            cached = _PHI_CACHE.setdefault(n, cached)
    return cached


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def reduce_mod_phi(coeffs: Sequence[Fraction], l: int) -> tuple[Fraction, ...]:
    """Remainder of an ordinary polynomial modulo Phi_l, padded to length phi(l)."""
    phi = cyclotomic_polynomial(l)
    deg = len(phi) - 1
    rem = list(coeffs)
    # Phi_l is monic
    for k in range(len(rem) - 1, deg - 1, -1):
        c = rem[k]
        if not c:
            continue
        for j in range(deg + 1):
            rem[k - deg + j] -= c * phi[j]
    rem = rem[:deg]
    rem.extend([Fraction(0)] * (deg - len(rem)))
    return tuple(rem)


class CyclotomicNumber:
    """An element of Q(eps) for a fixed root order ``l``."""

    __slots__ = ("l", "coords", "_hash")

    def __init__(self, l: int, coords: Iterable):
        self.l = l
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != euler_phi(l):
            coords = reduce_mod_phi(coords, l)
        self.coords = coords
        self._hash = None

    @classmethod
    def _raw(cls, l: int, coords: tuple) -> "CyclotomicNumber":
        obj = object.__new__(cls)
        obj.l = l
        obj.coords = coords
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, l: int, value) -> "CyclotomicNumber":
        n = euler_phi(l)
        return cls._raw(l, (Fraction(value),) + (Fraction(0),) * (n - 1))

    @classmethod
    def zero(cls, l: int) -> "CyclotomicNumber":
        return cls.from_rational(l, 0)

    @classmethod
    def one(cls, l: int) -> "CyclotomicNumber":
        return cls.from_rational(l, 1)

    @classmethod
    def root_power(cls, l: int, k: int) -> "CyclotomicNumber":
        """eps**k for any integer k."""
        k %= l
        poly = [Fraction(0)] * k + [Fraction(1)]
        return cls._raw(l, reduce_mod_phi(poly, l))

    @classmethod
    def from_poly(cls, l: int, coeffs: Sequence[Fraction]) -> "CyclotomicNumber":
        return cls._raw(l, reduce_mod_phi(coeffs, l))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coords[0]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicNumber | None":
        if isinstance(other, CyclotomicNumber):
            if other.l != self.l:
                raise ValueError(f"cyclotomic orders differ: {self.l} vs {other.l}")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.l, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(self.l, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.l, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(self.l, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(self.l, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            s = other.coords[0]
            return CyclotomicNumber._raw(self.l, tuple(a * s for a in self.coords))
        if self.is_rational():
            s = self.coords[0]
            return CyclotomicNumber._raw(self.l, tuple(a * s for a in other.coords))
        return CyclotomicNumber._raw(self.l, reduce_mod_phi(dense.mul(self.coords, other.coords), self.l))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(eps)")
        inv = dense.xgcd_inverse(dense.trim(self.coords), cyclotomic_polynomial(self.l))
        return CyclotomicNumber.from_poly(self.l, inv)

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
        result = CyclotomicNumber.one(self.l)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.l == other.l and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.l, self.coords))
        return self._hash

    def __repr__(self):
        return f"CyclotomicNumber({self.l}, {[str(c) for c in self.coords]})"

    def __str__(self):
        return format_cyclotomic(self)

    def to_json(self) -> dict:
        return {"l": self.l, "coords": [_fmt_rational(c) for c in self.coords]}


def format_cyclotomic(x: CyclotomicNumber, var: str = "eps") -> str:
    if x.is_rational():
        return _fmt_rational(x.coords[0])
    terms = []
    for e in range(len(x.coords) - 1, -1, -1):
        c = x.coords[e]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        power = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if not power:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = power
        else:
            body = f"{_fmt_rational(mag)}*{power}"
        terms.append((sign, body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return f"({out})"
