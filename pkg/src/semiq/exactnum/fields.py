"""Scalar modes: the generic field Q(q) and the specialized field Q(eps)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .laurent import LaurentPoly
from .ratfunc import RationalFunctionOfQ


@dataclass(frozen=True)
class GenericField:
    """Coefficients are rational functions of the formal parameter q."""

    l = None

    @property
    def name(self) -> str:
        return "generic"

    def zero(self) -> RationalFunctionOfQ:
        return RationalFunctionOfQ.from_rational(0)

    def one(self) -> RationalFunctionOfQ:
        return RationalFunctionOfQ.from_rational(1)

    def q_power(self, k: int) -> RationalFunctionOfQ:
        return RationalFunctionOfQ.q_power(k)

    def coerce(self, x) -> RationalFunctionOfQ:
        if isinstance(x, RationalFunctionOfQ):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunctionOfQ.from_rational(x)
        if isinstance(x, LaurentPoly):
            return RationalFunctionOfQ(x)
        raise TypeError(f"cannot use {type(x).__name__} as a generic coefficient")


@dataclass(frozen=True)
class CyclotomicField:
    """Coefficients live in Q(eps), eps a primitive l-th root of unity."""

    l: int

    @property
    def name(self) -> str:
        return f"eps{self.l}"

    def zero(self) -> CyclotomicNumber:
        return CyclotomicNumber.zero(self.l)

    def one(self) -> CyclotomicNumber:
        return CyclotomicNumber.one(self.l)

    def q_power(self, k: int) -> CyclotomicNumber:
        return CyclotomicNumber.root_power(self.l, k)

    def coerce(self, x) -> CyclotomicNumber:
        if isinstance(x, CyclotomicNumber):
            if x.l != self.l:
                raise ValueError(f"expected an element of Q(eps_{self.l}), got order {x.l}")
            return x
        if isinstance(x, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.l, x)
        raise TypeError(f"cannot use {type(x).__name__} as a coefficient in Q(eps_{self.l})")


GENERIC = GenericField()
