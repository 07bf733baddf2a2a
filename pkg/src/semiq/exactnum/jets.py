"""Specialization q -> eps and order-2 expansions of rational functions around eps.

Two expansion parameters are supported:

* ``additive``: q = eps + h
* ``multiplicative``: q = eps * exp(h)

The coefficients of the same function in the two conventions are related by
c1_mult = eps * c1_add and c2_mult = eps**2 * c2_add + (eps / 2) * c1_add.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..errors import DenominatorVanishes, NonvanishingAtRoot
from .cyclotomic import CyclotomicNumber, reduce_mod_phi
from .laurent import LaurentPoly
from .ratfunc import RationalFunctionOfQ

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"
CONVENTIONS = (ADDITIVE, MULTIPLICATIVE)


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")


def _weighted_residue(p: LaurentPoly, l: int, weight: Callable[[int], Fraction]) -> CyclotomicNumber:
    """sum_k a_k * weight(k) * eps**k for p = sum_k a_k q**k."""
    buckets = [Fraction(0)] * l
    for k, a in p.coefficients.items():
        w = weight(k)
        if w:
            buckets[k % l] += a * w
    return CyclotomicNumber.from_poly(l, buckets)


def _eval_laurent(p: LaurentPoly, l: int) -> CyclotomicNumber:
    return _weighted_residue(p, l, lambda k: Fraction(1))


def eval_at_root(f: RationalFunctionOfQ | LaurentPoly | int | Fraction, l: int) -> CyclotomicNumber:
    """Value of ``f`` at q = eps as an element of Q(eps).

    Raises DenominatorVanishes when Phi_l divides the denominator.
    """
    if isinstance(f, (int, Fraction)):
        return CyclotomicNumber.from_rational(l, f)
    if isinstance(f, LaurentPoly):
        return _eval_laurent(f, l)
    den = _eval_laurent(f.denominator, l)
    if den.is_zero():
        raise DenominatorVanishes(f"denominator {f.denominator} vanishes at a primitive {l}-th root of unity")
    num = _eval_laurent(f.numerator, l)
    if f.is_laurent():
        return num
    return num / den


@dataclass(frozen=True)
class JetAtRoot:
    """Truncated expansion c0 + c1 h + c2 h^2 of a function regular at eps."""

    l: int
    convention: str
    c0: CyclotomicNumber
    c1: CyclotomicNumber
    c2: CyclotomicNumber

    @classmethod
    def constant(cls, l: int, convention: str, value) -> "JetAtRoot":
        if not isinstance(value, CyclotomicNumber):
            value = CyclotomicNumber.from_rational(l, value)
        zero = CyclotomicNumber.zero(l)
        return cls(l, convention, value, zero, zero)

    def coefficients(self) -> tuple[CyclotomicNumber, CyclotomicNumber, CyclotomicNumber]:
        return self.c0, self.c1, self.c2

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero() and self.c2.is_zero()

    def _check(self, other: "JetAtRoot") -> None:
        if other.l != self.l or other.convention != self.convention:
            raise ValueError("jets at different roots or in different conventions")

    def __add__(self, other: "JetAtRoot") -> "JetAtRoot":
        self._check(other)
        return JetAtRoot(self.l, self.convention, self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "JetAtRoot") -> "JetAtRoot":
        self._check(other)
        return JetAtRoot(self.l, self.convention, self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "JetAtRoot":
        return JetAtRoot(self.l, self.convention, -self.c0, -self.c1, -self.c2)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return JetAtRoot(self.l, self.convention, self.c0 * other, self.c1 * other, self.c2 * other)
        if not isinstance(other, JetAtRoot):
            return NotImplemented
        self._check(other)
        a0, a1, a2 = self.coefficients()
        b0, b1, b2 = other.coefficients()
        return JetAtRoot(self.l, self.convention, a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0)

    __rmul__ = __mul__

    def inverse(self) -> "JetAtRoot":
        if self.c0.is_zero():
            raise DenominatorVanishes("jet with vanishing constant term is not invertible")
        inv0 = self.c0.inverse()
        inv1 = -self.c1 * inv0 * inv0
        inv2 = (self.c1 * self.c1 * inv0 - self.c2) * inv0 * inv0
        return JetAtRoot(self.l, self.convention, inv0, inv1, inv2)

    def __truediv__(self, other: "JetAtRoot") -> "JetAtRoot":
        return self * other.inverse()

    def to_multiplicative(self) -> "JetAtRoot":
        if self.convention == MULTIPLICATIVE:
            return self
        eps = CyclotomicNumber.root_power(self.l, 1)
        return JetAtRoot(
            self.l,
            MULTIPLICATIVE,
            self.c0,
            eps * self.c1,
            eps * eps * self.c2 + eps * self.c1 * Fraction(1, 2),
        )

    def to_additive(self) -> "JetAtRoot":
        if self.convention == ADDITIVE:
            return self
        eps_inv = CyclotomicNumber.root_power(self.l, -1)
        c1 = eps_inv * self.c1
        c2 = eps_inv * eps_inv * (self.c2 - self.c1 * Fraction(1, 2))
        return JetAtRoot(self.l, ADDITIVE, self.c0, c1, c2)


def _laurent_jet(p: LaurentPoly, l: int, convention: str) -> JetAtRoot:
    c0 = _eval_laurent(p, l)
    if convention == ADDITIVE:
        # (eps + h)^k = eps^k + k eps^(k-1) h + C(k,2) eps^(k-2) h^2, k of either sign
        s1 = _weighted_residue(p, l, lambda k: Fraction(k))
        s2 = _weighted_residue(p, l, lambda k: Fraction(k * (k - 1), 2))
        c1 = s1 * CyclotomicNumber.root_power(l, -1)
        c2 = s2 * CyclotomicNumber.root_power(l, -2)
    else:
        # (eps e^h)^k = eps^k (1 + k h + k^2 h^2 / 2)
        c1 = _weighted_residue(p, l, lambda k: Fraction(k))
        c2 = _weighted_residue(p, l, lambda k: Fraction(k * k, 2))
    return JetAtRoot(l, convention, c0, c1, c2)


def jet_at_root(f: RationalFunctionOfQ | LaurentPoly | int | Fraction, l: int, convention: str = ADDITIVE) -> JetAtRoot:
    """Order-2 expansion of ``f`` around q = eps in the requested convention."""
    _check_convention(convention)
    if isinstance(f, (int, Fraction)):
        return JetAtRoot.constant(l, convention, f)
    if isinstance(f, LaurentPoly):
        return _laurent_jet(f, l, convention)
    num = _laurent_jet(f.numerator, l, convention)
    if f.is_laurent():
        return num
    den = _laurent_jet(f.denominator, l, convention)
    if den.c0.is_zero():
        raise DenominatorVanishes(f"denominator {f.denominator} vanishes at a primitive {l}-th root of unity")
    return num / den


def limit_quotient(f: RationalFunctionOfQ | LaurentPoly | int | Fraction, l: int) -> CyclotomicNumber:
    """lim_{q -> eps} f(q) / (q - eps) for f vanishing at eps."""
    jet = jet_at_root(f, l, ADDITIVE)
    if not jet.c0.is_zero():
        raise NonvanishingAtRoot(f"function does not vanish at eps (value {jet.c0})")
    return jet.c1
