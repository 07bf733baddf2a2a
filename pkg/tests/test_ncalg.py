from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiq.errors import ParseError, PresentationMismatch, ScalarModeMismatch
from semiq.exactnum import GENERIC, CyclotomicField, CyclotomicNumber, RationalFunctionOfQ
from semiq.ncalg import (
    AlgebraPresentation,
    NcElement,
    casimir,
    commutator,
    format_element,
    is_central_at_root,
    monomial_product,
    multiply,
    parse_element,
    preset,
    qexponent,
    qexponent_by_swaps,
    qplane,
    specialize,
    torus2,
    uqsl2_central,
)
from semiq.ncalg import uqsl2 as uq
from semiq.ncalg.rewriting import rewrite_product

UQ = AlgebraPresentation.uqsl2()
MANIN = AlgebraPresentation.quantum_torus([[0, 2, -1], [-2, 0, 3], [1, -3, 0]])
PRESENTATIONS = [torus2(), qplane(3), MANIN, UQ]


def random_monomial(rng, pres, lo=-2, hi=3):
    if pres.is_uqsl2:
        return (rng.randint(0, hi), rng.randint(lo, hi), rng.randint(0, hi))
    if pres.kind == "quantum_affine":
        return tuple(rng.randint(0, hi) for _ in range(pres.rank))
    return tuple(rng.randint(lo, hi) for _ in range(pres.rank))


def random_element(rng, pres, field, terms=2):
    out = NcElement.zero(pres, field)
    for _ in range(terms):
        c = rng.randint(-3, 3)
        coeff = field.coerce(c) * field.q_power(rng.randint(-2, 2))
        out = out + NcElement.monomial(pres, field, random_monomial(rng, pres), coeff)
    return out


# -- exponent closed form vs brute force ----------------------------------------------------------


def test_qexponent_closed_form_vs_swaps_1000_cases():
    rng = random.Random(1234)
    for _ in range(1000):
        n = rng.randint(1, 4)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                m[i][j] = rng.randint(-3, 3)
                m[j][i] = -m[i][j]
        a = tuple(rng.randint(-3, 3) for _ in range(n))
        b = tuple(rng.randint(-3, 3) for _ in range(n))
        assert qexponent(a, b, m) == qexponent_by_swaps(a, b, m)


# -- associativity and units ---------------------------------------------------------------------


@pytest.mark.parametrize("pres", PRESENTATIONS, ids=lambda p: p.kind + str(p.rank))
@pytest.mark.parametrize("field", [GENERIC, CyclotomicField(5)], ids=lambda f: f.name)
def test_associativity(pres, field):
    rng = random.Random(7)
    for _ in range(15):
        a, b, c = (random_element(rng, pres, field) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@pytest.mark.parametrize("pres", PRESENTATIONS, ids=lambda p: p.kind + str(p.rank))
def test_unit_and_specialization_is_a_homomorphism(pres):
    rng = random.Random(11)
    one = NcElement.scalar(pres, GENERIC, 1)
    for _ in range(10):
        a, b = random_element(rng, pres, GENERIC), random_element(rng, pres, GENERIC)
        assert multiply(one, a) == a == multiply(a, one)
        assert specialize(multiply(a, b), 5) == multiply(specialize(a, 5), specialize(b, 5))


def test_uqsl2_defining_relations():
    q = RationalFunctionOfQ.q()
    E = NcElement.monomial(UQ, GENERIC, (0, 0, 1))
    F = NcElement.monomial(UQ, GENERIC, (1, 0, 0))
    K = NcElement.monomial(UQ, GENERIC, (0, 1, 0))
    Kinv = NcElement.monomial(UQ, GENERIC, (0, -1, 0))
    assert multiply(K, Kinv) == 1
    assert multiply(K, E) == multiply(E, K).scale(q ** 2)
    assert multiply(K, F) == multiply(F, K).scale(q ** -2)
    assert commutator(E, F) == (K - Kinv).scale((q - q.inverse()).inverse())


def test_torus_relation_and_inverse():
    u = NcElement.monomial(torus2(), GENERIC, (1, 0))
    v = NcElement.monomial(torus2(), GENERIC, (0, 1))
    assert multiply(u, v) == multiply(v, u).scale(RationalFunctionOfQ.q())
    assert multiply(u, u ** -1) == 1
    assert multiply(v ** -3, v ** 3) == 1


def test_mixing_presentations_or_fields_raises():
    a = NcElement.monomial(torus2(), GENERIC, (1, 0))
    with pytest.raises(PresentationMismatch):
        multiply(a, NcElement.monomial(qplane(2), GENERIC, (1, 0)))
    with pytest.raises(ScalarModeMismatch):
        multiply(a, NcElement.monomial(torus2(), CyclotomicField(3), (1, 0)))


def test_invalid_monomials_rejected():
    with pytest.raises(ValueError):
        NcElement.monomial(qplane(2), GENERIC, (-1, 0))
    with pytest.raises(ValueError):
        NcElement.monomial(UQ, GENERIC, (0, 0, -1))
    with pytest.raises(ValueError):
        NcElement.monomial(qplane(2), GENERIC, (1, 0)) ** -1


# -- rewriting confluence ---------------------------------------------------------------------


def test_rewriting_matches_closed_form_and_is_strategy_independent_200_cases():
    rng = random.Random(2024)
    for _ in range(200):
        m, n = random_monomial(rng, UQ, hi=2), random_monomial(rng, UQ, hi=2)
        direct = uq.monomial_product(m, n)
        left = rewrite_product(m, n, "leftmost")
        right = rewrite_product(m, n, "rightmost")
        rand = rewrite_product(m, n, "random", random.Random(rng.random()))
        assert left == right == rand == direct


# -- centrality at the root -------------------------------------------------------------------


@pytest.mark.parametrize("l", [3, 5, 7])
def test_uqsl2_centre_at_root(l):
    field = CyclotomicField(l)
    z = uqsl2_central(l, field)
    for name in "xyzc":
        assert is_central_at_root(z[name], l), name
    assert is_central_at_root(NcElement.monomial(UQ, field, (0, -l, 0)), l)
    for k in range(1, l):
        assert not is_central_at_root(NcElement.monomial(UQ, field, (0, 0, k)), l)


def test_casimir_is_central_generically():
    c = casimir()
    for g in ((0, 0, 1), (1, 0, 0), (0, 1, 0)):
        assert commutator(c, NcElement.monomial(UQ, GENERIC, g)).is_zero()


@pytest.mark.parametrize("l", [3, 5])
def test_torus_powers_central(l):
    field = CyclotomicField(l)
    for mono in ((l, 0), (0, l), (l, l), (2 * l, 0), (-l, l)):
        assert is_central_at_root(NcElement.monomial(torus2(), field, mono), l)
    assert not is_central_at_root(NcElement.monomial(torus2(), field, (1, 0)), l)


# -- parser --------------------------------------------------------------------------------------


def test_parse_examples():
    field = CyclotomicField(5)
    a = parse_element("3/2 q^-1 * F^2 K^-1 E + 2", UQ, GENERIC)
    expected = NcElement(UQ, GENERIC, {(2, -1, 1): RationalFunctionOfQ.q_power(-1) * RationalFunctionOfQ(3) / 2,
                                       (0, 0, 0): 2})
    assert a == expected
    b = parse_element("eps^2 u^5 v^-5 - v", torus2(), field)
    assert b == NcElement(torus2(), field, {(5, -5): CyclotomicNumber.root_power(5, 2), (0, 1): -1})
    x = parse_element("x - 2 y", UQ, field, uqsl2_central(5, field))
    assert x == NcElement(UQ, field, {(0, 0, 5): 1, (5, 0, 0): -2})


@pytest.mark.parametrize("text", ["E F", "u v u", "", "F +", "F^", "u * 2", "eps u", "(u) v", "F / E", "x F"])
def test_parse_errors(text):
    pres = torus2() if "u" in text or "v" in text else UQ
    field = GENERIC if "eps" in text else CyclotomicField(5)
    al = uqsl2_central(5, field) if pres.is_uqsl2 and field is not GENERIC else {}
    with pytest.raises(ParseError):
        parse_element(text, pres, field, al)


@pytest.mark.parametrize("pres", PRESENTATIONS, ids=lambda p: p.kind + str(p.rank))
@pytest.mark.parametrize("field", [GENERIC, CyclotomicField(7)], ids=lambda f: f.name)
def test_format_parse_roundtrip(pres, field):
    rng = random.Random(3)
    for _ in range(20):
        a = random_element(rng, pres, field, terms=3)
        assert parse_element(format_element(a), pres, field) == a


def test_presets_and_config_roundtrip():
    for name in ("torus2", "uqsl2", "qplane(3)", "qplane4"):
        p = preset(name)
        assert AlgebraPresentation.from_config(p.to_config()) == p
    with pytest.raises(ValueError):
        preset("nope")
    with pytest.raises(ValueError):
        AlgebraPresentation.quantum_torus([[0, 1], [1, 0]])


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2), st.lists(st.integers(-3, 3), min_size=2, max_size=2))
@settings(max_examples=50)
def test_torus_monomial_product_exponent(a, b):
    (mono, c), = monomial_product(torus2(), GENERIC, tuple(a), tuple(b))
    assert mono == (a[0] + b[0], a[1] + b[1])
    assert c == RationalFunctionOfQ.q_power(qexponent(a, b, torus2().matrix))
