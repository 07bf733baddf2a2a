"""Elements of the supported algebras in PBW normal form."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from ..errors import PresentationMismatch, ScalarModeMismatch
from ..exactnum import GENERIC, CyclotomicField, RationalFunctionOfQ, eval_at_root
from . import uqsl2
from .presentation import QUANTUM_AFFINE, QUANTUM_TORUS, AlgebraPresentation, Monomial


def qexponent(a: Monomial, b: Monomial, matrix) -> int:
    """m such that x^a x^b = q^m x^(a+b) for q-commuting generators.

    Moving x_i^(a_i) to the right past x_j^(b_j), i > j, costs q^(r_ij a_i b_j).
    """
    n = len(a)
    total = 0
    for i in range(1, n):
        ai = a[i]
        if not ai:
            continue
        row = matrix[i]
        for j in range(i):
            if b[j]:
                total += row[j] * ai * b[j]
    return total


def qexponent_by_swaps(a: Monomial, b: Monomial, matrix) -> int:
    """Brute-force counterpart of :func:`qexponent`: bubble-sort the word x^a x^b.

    Each adjacent swap x_i^s x_j^t -> x_j^t x_i^s (i > j, s, t = +-1) contributes r_ij s t.
    """
    word = []
    for vec in (a, b):
        for i, e in enumerate(vec):
            word.extend([(i, 1 if e > 0 else -1)] * abs(e))
    total = 0
    changed = True
    while changed:
        changed = False
        for p in range(len(word) - 1):
            (i, s), (j, t) = word[p], word[p + 1]
            if i > j:
                total += matrix[i][j] * s * t
                word[p], word[p + 1] = word[p + 1], word[p]
                changed = True
    return total


@lru_cache(maxsize=None)
def _generic_product(presentation: AlgebraPresentation, m: Monomial, n: Monomial) -> tuple:
    if presentation.is_uqsl2:
        return tuple(sorted(uqsl2.monomial_product(m, n).items()))
    k = qexponent(m, n, presentation.matrix)
    mono = tuple(x + y for x, y in zip(m, n))
    return ((mono, RationalFunctionOfQ.q_power(k)),)


@lru_cache(maxsize=None)
def _specialized_product(presentation: AlgebraPresentation, l: int, m: Monomial, n: Monomial) -> tuple:
    out = []
    for mono, c in _generic_product(presentation, m, n):
        v = eval_at_root(c, l)
        if not v.is_zero():
            out.append((mono, v))
    return tuple(out)


def monomial_product(presentation: AlgebraPresentation, field, m: Monomial, n: Monomial) -> tuple:
    """Structure constants of m * n as a tuple of (monomial, coefficient) pairs."""
    if field.l is None:
        return _generic_product(presentation, m, n)
    return _specialized_product(presentation, field.l, m, n)


class NcElement:
    """A finite linear combination of PBW monomials.

    ``field`` is either :data:`GENERIC` (coefficients in Q(q)) or a
    :class:`CyclotomicField` (coefficients in Q(eps)). Instances are treated as
    immutable.
    """

    __slots__ = ("presentation", "field", "terms")

    def __init__(self, presentation: AlgebraPresentation, field, terms: Mapping | Iterable = ()):
        self.presentation = presentation
        self.field = field
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for mono, coeff in items:
            mono = presentation.check_monomial(mono)
            coeff = field.coerce(coeff)
            total = clean.get(mono)
            total = coeff if total is None else total + coeff
            if total.is_zero():
                clean.pop(mono, None)
            else:
                clean[mono] = total
        self.terms = clean

    @classmethod
    def _raw(cls, presentation, field, terms: dict) -> "NcElement":
        obj = object.__new__(cls)
        obj.presentation = presentation
        obj.field = field
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, presentation, field, mono: Monomial, coeff=1) -> "NcElement":
        return cls(presentation, field, {tuple(mono): coeff})

    @classmethod
    def scalar(cls, presentation, field, coeff) -> "NcElement":
        return cls(presentation, field, {presentation.one(): coeff})

    @classmethod
    def zero(cls, presentation, field) -> "NcElement":
        return cls._raw(presentation, field, {})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.field.zero())

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms)

    def sorted_terms(self) -> list[tuple]:
        return sorted(self.terms.items())

    @property
    def is_generic(self) -> bool:
        return self.field.l is None

    # -- arithmetic ----------------------------------------------------------

    def _compatible(self, other: "NcElement") -> None:
        if other.presentation != self.presentation:
            raise PresentationMismatch("elements belong to different presentations")
        if other.field != self.field:
            raise ScalarModeMismatch(f"scalar modes differ: {self.field.name} vs {other.field.name}")

    def _coerce(self, other) -> "NcElement | None":
        if isinstance(other, NcElement):
            self._compatible(other)
            return other
        try:
            return NcElement.scalar(self.presentation, self.field, other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            total = out.get(mono)
            total = c if total is None else total + c
            if total.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = total
        return NcElement._raw(self.presentation, self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return NcElement._raw(self.presentation, self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, s) -> "NcElement":
        s = self.field.coerce(s)
        if s.is_zero():
            return NcElement.zero(self.presentation, self.field)
        return NcElement._raw(self.presentation, self.field, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcElement):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int) -> "NcElement":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only single monomials can be inverted")
            (mono, c), = self.terms.items()
            if self.presentation.kind == QUANTUM_AFFINE or (self.presentation.is_uqsl2 and (mono[0] or mono[2])):
                raise ValueError(f"monomial {mono} is not invertible")
            inv_mono = tuple(-e for e in mono)
            # x^m x^-m = q^k, so (c x^m)^-1 = c^-1 q^-k x^-m
            prod = monomial_product(self.presentation, self.field, mono, inv_mono)
            (_, k_coeff), = prod
            inv = NcElement._raw(self.presentation, self.field, {inv_mono: self.field.one() / (c * k_coeff)})
            return inv ** (-n)
        result = NcElement.scalar(self.presentation, self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NcElement):
            return (self.presentation == other.presentation and self.field == other.field
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction)):
            return self == NcElement.scalar(self.presentation, self.field, other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"NcElement({self.presentation.kind}, {self.field.name}, {self})"

    def __str__(self):
        from .literals import format_element

        return format_element(self)


def multiply(a: NcElement, b: NcElement) -> NcElement:
    """PBW normal form of the product a * b."""
    a._compatible(b)
    pres, field = a.presentation, a.field
    out: dict = {}
    for m, ca in a.terms.items():
        for n, cb in b.terms.items():
            cab = ca * cb
            for mono, s in monomial_product(pres, field, m, n):
                term = cab * s
                total = out.get(mono)
                total = term if total is None else total + term
                if total.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = total
    return NcElement._raw(pres, field, out)


def commutator(a: NcElement, b: NcElement) -> NcElement:
    return multiply(a, b) - multiply(b, a)


def specialize(a: NcElement, l: int) -> NcElement:
    """Push every coefficient through q -> eps; raises DenominatorVanishes if one is singular."""
    if not a.is_generic:
        if a.field.l != l:
            raise ScalarModeMismatch(f"element is specialized at l={a.field.l}, not {l}")
        return a
    field = CyclotomicField(l)
    out = {}
    for mono, c in a.terms.items():
        v = eval_at_root(c, l)
        if not v.is_zero():
            out[mono] = v
    return NcElement._raw(a.presentation, field, out)


def generator_elements(presentation: AlgebraPresentation, field) -> list[NcElement]:
    return [NcElement.monomial(presentation, field, g) for g in presentation.generators()]


def is_central_at_root(a: NcElement, l: int) -> bool:
    """True iff [a, g] vanishes at q = eps for every generator g."""
    field = a.field
    for g in generator_elements(a.presentation, field):
        c = commutator(a, g)
        if not specialize(c, l).is_zero():
            return False
    return True


def casimir(presentation: AlgebraPresentation | None = None) -> NcElement:
    """c = EF + (K q^-1 + K^-1 q) / (q - q^-1)^2 in PBW form."""
    pres = presentation or AlgebraPresentation.uqsl2()
    if not pres.is_uqsl2:
        raise ValueError("the Casimir element is defined for U_q(sl2) only")
    q = RationalFunctionOfQ.q()
    denom = (q - q.inverse()) ** 2
    e = NcElement.monomial(pres, GENERIC, (0, 0, 1))
    f = NcElement.monomial(pres, GENERIC, (1, 0, 0))
    k_part = NcElement(pres, GENERIC, {(0, 1, 0): q.inverse() / denom, (0, -1, 0): q / denom})
    return multiply(e, f) + k_part


def is_pbw(presentation: AlgebraPresentation, mono: Monomial) -> bool:
    try:
        presentation.check_monomial(mono)
    except ValueError:
        return False
    return True


__all__ = [
    "NcElement",
    "QUANTUM_AFFINE",
    "QUANTUM_TORUS",
    "casimir",
    "commutator",
    "generator_elements",
    "is_central_at_root",
    "is_pbw",
    "monomial_product",
    "multiply",
    "qexponent",
    "qexponent_by_swaps",
    "specialize",
]
