"""Poisson fibred brackets, curvature and gauge transformations at a root of unity.

An element of A_eps is lifted to the generic algebra by keeping its PBW
monomials and treating its Q(eps)-coefficients as constants. The lifted
commutator [f~, a~] is expanded around q = eps to order two; its order-1
part is the bracket {f, a} and its order-2 part feeds the curvature.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Mapping

from ..errors import NotCentral, OutOfSpan, ScalarModeMismatch
from ..exactnum import ADDITIVE, CONVENTIONS, CyclotomicField, CyclotomicNumber, jet_at_root
from ..ncalg import AlgebraPresentation, NcElement, commutator, monomial_product


@dataclass(frozen=True)
class BracketContext:
    """Ambient algebra, root order and expansion convention for every bracket computation."""

    presentation: AlgebraPresentation
    l: int
    convention: str = ADDITIVE
    allow_even: bool = False

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.l < 2:
            raise ValueError("root order must be at least 2")
        if not self.allow_even and (self.l < 3 or self.l % 2 == 0):
            raise ValueError(f"l = {self.l}: only odd l >= 3 is supported without allow_even")

    @property
    def field(self) -> CyclotomicField:
        return CyclotomicField(self.l)

    def element(self, terms) -> NcElement:
        return NcElement(self.presentation, self.field, terms)

    def zero(self) -> NcElement:
        return NcElement.zero(self.presentation, self.field)


@lru_cache(maxsize=None)
def _monomial_commutator_jets(presentation, l, convention, m, n) -> tuple:
    """Order-2 jets of the generic structure constants of m*n - n*m."""
    from ..exactnum import GENERIC

    acc: dict = {}
    for mono, c in monomial_product(presentation, GENERIC, m, n):
        acc[mono] = c
    for mono, c in monomial_product(presentation, GENERIC, n, m):
        acc[mono] = acc[mono] - c if mono in acc else -c
    out = []
    for mono, c in sorted(acc.items()):
        if c.is_zero():
            continue
        jet = jet_at_root(c, l, convention)
        out.append((mono, (jet.c0, jet.c1, jet.c2)))
    return tuple(out)


def _check_ctx(ctx: BracketContext, *elements: NcElement) -> None:
    for e in elements:
        if e.presentation != ctx.presentation:
            raise ScalarModeMismatch("element presentation differs from the bracket context")
        if e.field != ctx.field:
            raise ScalarModeMismatch(
                f"bracket arguments must be specialized at l={ctx.l} (got {e.field.name})")


def commutator_jets(ctx: BracketContext, f: NcElement, a: NcElement) -> dict:
    """``{monomial: (c0, c1, c2)}`` for the lifted commutator [f~, a~]."""
    _check_ctx(ctx, f, a)
    acc: dict = {}
    for m, alpha in f.terms.items():
        for n, beta in a.terms.items():
            ab = alpha * beta
            for mono, (c0, c1, c2) in _monomial_commutator_jets(ctx.presentation, ctx.l, ctx.convention, m, n):
                prev = acc.get(mono)
                if prev is None:
                    acc[mono] = [ab * c0, ab * c1, ab * c2]
                else:
                    prev[0] += ab * c0
                    prev[1] += ab * c1
                    prev[2] += ab * c2
    return acc


def _order(ctx: BracketContext, jets: dict, k: int) -> NcElement:
    return NcElement._raw(
        ctx.presentation,
        ctx.field,
        {m: c[k] for m, c in jets.items() if not c[k].is_zero()},
    )


def bracket(ctx: BracketContext, f: NcElement, a: NcElement) -> NcElement:
    """{f, a}: the order-1 coefficient of [f~, a~] around q = eps."""
    jets = commutator_jets(ctx, f, a)
    order0 = _order(ctx, jets, 0)
    if not order0.is_zero():
        raise NotCentral(f"[f, a] does not vanish at eps: {order0}")
    return _order(ctx, jets, 1)


def require_central(ctx: BracketContext, f: NcElement, label: str = "f") -> None:
    from ..ncalg import generator_elements

    _check_ctx(ctx, f)
    for g in generator_elements(ctx.presentation, ctx.field):
        if not commutator(f, g).is_zero():
            raise NotCentral(f"{label} = {f} is not central at l={ctx.l}")


def second_order_commutator(ctx: BracketContext, f: NcElement, g: NcElement) -> NcElement:
    """B2(f, g) - B2(g, f): the order-2 coefficient of [f~, g~]."""
    jets = commutator_jets(ctx, f, g)
    order0 = _order(ctx, jets, 0)
    if not order0.is_zero():
        raise NotCentral(f"[f, g] does not vanish at eps: {order0}")
    return _order(ctx, jets, 2)


def curvature_taylor(ctx: BracketContext, f: NcElement, g: NcElement, a: NcElement) -> NcElement:
    """Phi(f, g)(a) = [a, B2(f, g) - B2(g, f)]."""
    require_central(ctx, f, "f")
    require_central(ctx, g, "g")
    _check_ctx(ctx, a)
    return commutator(a, second_order_commutator(ctx, f, g))


def curvature_jacobiator(ctx: BracketContext, f: NcElement, g: NcElement, a: NcElement) -> NcElement:
    """Phi(f, g)(a) = {{f, g}, a} - {f, {g, a}} + {g, {f, a}}."""
    require_central(ctx, f, "f")
    require_central(ctx, g, "g")
    fg = bracket(ctx, f, g)
    require_central(ctx, fg, "{f, g}")
    return bracket(ctx, fg, a) - bracket(ctx, f, bracket(ctx, g, a)) + bracket(ctx, g, bracket(ctx, f, a))


@dataclass(frozen=True)
class GaugeMap:
    """A linear map theta defined on the span of finitely many monomials.

    ``table`` sends each designated monomial to an element of A_eps.
    """

    table: Mapping[tuple, NcElement] = dc_field(default_factory=dict)

    def __call__(self, ctx: BracketContext, f: NcElement) -> NcElement:
        return _apply_gauge(ctx, self, f)

    @classmethod
    def zero_map(cls, monomials) -> "GaugeMap":
        """theta = 0 on the span of ``monomials`` (a ``None`` image means zero)."""
        return cls({tuple(m): None for m in monomials})


def _apply_gauge(ctx: BracketContext, theta: GaugeMap, f: NcElement) -> NcElement:
    out = ctx.zero()
    for mono, coeff in f.terms.items():
        if mono not in theta.table:
            raise OutOfSpan(f"monomial {mono} is outside the domain of the gauge map")
        image = theta.table[mono]
        if image is not None:
            out = out + image.scale(coeff)
    return out


def gauge_bracket(ctx: BracketContext, theta: GaugeMap, f: NcElement, a: NcElement) -> NcElement:
    """{f, a}_theta = {f, a} + [theta(f), a]."""
    return bracket(ctx, f, a) + commutator(_apply_gauge(ctx, theta, f), a)


def gauge_curvature_sides(ctx: BracketContext, theta: GaugeMap, f, g, a) -> tuple[NcElement, NcElement]:
    """Both sides of the transformation law of the curvature under ``theta``.

    Left: the Jacobiator of the gauged bracket. Right: the original curvature
    plus [theta({f,g}), a] - [{f, theta(g)}, a] + [{g, theta(f)}, a] - [[theta(f), theta(g)], a].
    """
    gb = lambda x, y: gauge_bracket(ctx, theta, x, y)  # noqa: E731
    lhs = gb(gb(f, g), a) - gb(f, gb(g, a)) + gb(g, gb(f, a))

    fg = bracket(ctx, f, g)
    phi = bracket(ctx, fg, a) - bracket(ctx, f, bracket(ctx, g, a)) + bracket(ctx, g, bracket(ctx, f, a))
    tf, tg = _apply_gauge(ctx, theta, f), _apply_gauge(ctx, theta, g)
    rhs = (
        phi
        + commutator(_apply_gauge(ctx, theta, fg), a)
        - commutator(bracket(ctx, f, tg), a)
        + commutator(bracket(ctx, g, tf), a)
        - commutator(commutator(tf, tg), a)
    )
    return lhs, rhs


def gauge_curvature_check(ctx: BracketContext, theta: GaugeMap, f, g, a) -> bool:
    lhs, rhs = gauge_curvature_sides(ctx, theta, f, g, a)
    return lhs == rhs


def root_of_unity(ctx: BracketContext, power: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.root_power(ctx.l, power)
