"""Shared sympy oracles: independent conversions between semiq scalars and sympy expressions."""

from __future__ import annotations

import sys
from fractions import Fraction

import pytest
import sympy as sp

from semiq.exactnum import CyclotomicNumber, LaurentPoly, RationalFunctionOfQ

Q, E, H = sp.symbols("q e h")


def to_sympy_rational(x: Fraction) -> sp.Rational:
    return sp.Rational(x.numerator, x.denominator)


def laurent_to_sympy(p: LaurentPoly, var=Q):
    return sum((to_sympy_rational(c) * var ** k for k, c in p.coefficients.items()), sp.Integer(0))


def ratfunc_to_sympy(f: RationalFunctionOfQ, var=Q):
    return laurent_to_sympy(f.numerator, var) / laurent_to_sympy(f.denominator, var)


def cyclotomic_to_sympy(x: CyclotomicNumber, var=E):
    return sum((to_sympy_rational(c) * var ** k for k, c in enumerate(x.coords)), sp.Integer(0))


def sympy_to_cyclotomic(expr, l: int, var=E) -> CyclotomicNumber:
    """Reduce a rational function of ``var`` modulo the l-th cyclotomic polynomial."""
    phi = sp.Poly(sp.cyclotomic_poly(l, var), var)
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    num, den = sp.Poly(num, var), sp.Poly(den, var)
    inv = sp.invert(den, phi)
    rem = (num * inv).rem(phi)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(rem.all_coeffs())] if not rem.is_zero else []
    return CyclotomicNumber(l, coeffs or [0])


def sympy_jet(expr, l: int, convention: str):
    """Taylor coefficients (c0, c1, c2) of expr(q) at q = eps in h, by sympy series."""
    sub = E + H if convention == "additive" else E * sp.exp(H)
    series = sp.series(expr.subs(Q, sub), H, 0, 3).removeO()
    return tuple(sympy_to_cyclotomic(sp.simplify(series.coeff(H, k)), l) for k in range(3))


@pytest.fixture
def oracles():
    import types

    return types.SimpleNamespace(
        Q=Q, E=E, laurent=laurent_to_sympy, ratfunc=ratfunc_to_sympy,
        cyc=cyclotomic_to_sympy, to_cyc=sympy_to_cyclotomic, jet=sympy_jet,
    )


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
