"""Borel-Weil-Bott bookkeeping for SL_eps(2) at the level of dimensions and monomial spans."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NegativeWeight, TheoremMismatch, WeightOutOfRange
from .exactnum import CyclotomicField, rank
from .ncalg import NcElement, multiply, qplane
from .projgeom import line_bundle_cohomology, quantum_cohomology


def induced_dim(lam: int) -> int:
    """dim ind_B^G(lam): lam + 1 for lam >= 0, otherwise 0."""
    return lam + 1 if lam >= 0 else 0


def bwb_cohomology(lam: int, l: int) -> tuple[int, int]:
    """(dim H^0, dim H^1) of the line bundle of weight ``lam`` on the quantum flag space."""
    if l < 3 or l % 2 == 0:
        raise ValueError("l must be odd and at least 3")
    if lam >= 0:
        dims = (induced_dim(lam), 0)
    elif lam <= -2:
        dims = (0, induced_dim(-2 - lam))
    else:
        dims = (0, 0)
    via_sheaves = quantum_cohomology(1, l, lam)
    if dims != via_sheaves:
        raise TheoremMismatch(f"lambda={lam}, l={l}: {dims} vs quantum cohomology {via_sheaves}")
    return dims


@dataclass(frozen=True)
class WeightDecomposition:
    lam: int
    l: int
    lam0: int
    lam1: int

    def __post_init__(self):
        if not (0 <= self.lam0 < self.l and self.lam1 >= 0 and self.lam == self.lam0 + self.l * self.lam1):
            raise ValueError(f"invalid decomposition {self}")

    @property
    def dimension(self) -> int:
        return (self.lam0 + 1) * (self.lam1 + 1)


def steinberg_factor(lam: int, l: int) -> WeightDecomposition:
    """lam = lam0 + l lam1 with 0 <= lam0 < l."""
    if lam < 0:
        raise NegativeWeight(f"weight {lam} is negative")
    if l < 2:
        raise ValueError("l must be at least 2")
    lam1, lam0 = divmod(lam, l)
    return WeightDecomposition(lam, l, lam0, lam1)


def _degree_monomials(degree: int, step: int = 1):
    """Exponent pairs (a, b) of X_0^a X_1^b with a + b = degree, both multiples of ``step``."""
    return [(a, degree - a) for a in range(0, degree + 1, step) if (degree - a) % step == 0]


def irreducible_dim_via_image(lam0: int, lam1: int, l: int) -> int:
    """Dimension of the span of all products (degree lam0 monomial) . (l-th power monomial of degree l lam1),
    multiplied in the quantum plane at eps."""
    if not (0 <= lam0 < l) or lam1 < 0:
        raise WeightOutOfRange(f"need 0 <= lam0 < l and lam1 >= 0, got ({lam0}, {lam1}) with l={l}")
    pres = qplane(2)
    field = CyclotomicField(l)
    target_degree = lam0 + l * lam1
    index = {mono: i for i, mono in enumerate(_degree_monomials(target_degree))}
    rows = []
    for a in _degree_monomials(lam0):
        for b in _degree_monomials(l * lam1, step=l):
            prod = multiply(NcElement.monomial(pres, field, a), NcElement.monomial(pres, field, b))
            row = [field.zero()] * len(index)
            for mono, c in prod.terms.items():
                row[index[mono]] = c
            rows.append(row)
    return rank(rows)


def frobenius_pullback_dim(lam1: int) -> int:
    """dim L(lam1) pulled back along the quantum Frobenius: lam1 + 1 = dim H^0(P^1, O(lam1))."""
    if lam1 < 0:
        raise NegativeWeight(f"weight {lam1} is negative")
    return line_bundle_cohomology(1, lam1)[0]


def bwb_table(l: int, lam_min: int, lam_max: int) -> list[dict]:
    rows = []
    for lam in range(lam_min, lam_max + 1):
        h0, h1 = bwb_cohomology(lam, l)
        row = {"lambda": lam, "h0": h0, "h1": h1, "lambda0": None, "lambda1": None, "dim_L": None}
        if lam >= 0:
            w = steinberg_factor(lam, l)
            row.update(lambda0=w.lam0, lambda1=w.lam1, dim_L=irreducible_dim_via_image(w.lam0, w.lam1, l))
        rows.append(row)
    return rows
