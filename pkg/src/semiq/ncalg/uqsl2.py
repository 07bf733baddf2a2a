"""PBW straightening in U_q(sl2) with basis F^i K^j E^k.

Only E^c F^d ever needs reordering; the K-moves are pure q-powers:
K^b F^i = q^(-2bi) F^i K^b and E^k K^e = q^(-2ke) K^e E^k.
"""

from __future__ import annotations

from functools import lru_cache

from ..exactnum import RationalFunctionOfQ, quantum_integer

Terms = dict  # dict[tuple[int, int, int], RationalFunctionOfQ]

_Q_MINUS_QINV_INV = (RationalFunctionOfQ.q() - RationalFunctionOfQ.q_power(-1)).inverse()


def _accumulate(out: Terms, mono, coeff) -> None:
    total = out.get(mono)
    total = coeff if total is None else total + coeff
    if total.is_zero():
        out.pop(mono, None)
    else:
        out[mono] = total


def _times_e(terms: Terms) -> Terms:
    return {(i, j, k + 1): c for (i, j, k), c in terms.items()}


def _times_k(terms: Terms, s: int) -> Terms:
    # F^i K^j E^k K^s = q^(-2ks) F^i K^(j+s) E^k
    return {(i, j + s, k): c * RationalFunctionOfQ.q_power(-2 * k * s) for (i, j, k), c in terms.items()}


@lru_cache(maxsize=None)
def _ef_cached(c: int, d: int) -> tuple:
    if c == 0 or d == 0:
        return (((d, 0, c), RationalFunctionOfQ.from_rational(1)),)
    # E^c F^d = (E^(c-1) F^d) E + E^(c-1) [d] F^(d-1) (q^(1-d) K - q^(d-1) K^-1) / (q - q^-1)
    out: Terms = {}
    for mono, coeff in _times_e(dict(_ef_cached(c - 1, d))).items():
        _accumulate(out, mono, coeff)
    lower = dict(_ef_cached(c - 1, d - 1))
    scale = quantum_integer(d) * _Q_MINUS_QINV_INV
    for s, qexp in ((1, 1 - d), (-1, d - 1)):
        factor = scale * RationalFunctionOfQ.q_power(qexp) * s
        for mono, coeff in _times_k(lower, s).items():
            _accumulate(out, mono, coeff * factor)
    return tuple(sorted(out.items()))


def ef_product(c: int, d: int) -> Terms:
    """PBW normal form of E^c F^d as ``{(i, j, k): coefficient}``."""
    if c < 0 or d < 0:
        raise ValueError("E and F exponents must be nonnegative")
    return dict(_ef_cached(c, d))


def monomial_product(m: tuple, n: tuple) -> Terms:
    """(F^a K^b E^c)(F^d K^e E^f) in PBW normal form."""
    a, b, c = m
    d, e, f = n
    out: Terms = {}
    for (i, j, k), coeff in _ef_cached(c, d):
        qexp = -2 * b * i - 2 * k * e
        mono = (a + i, b + j + e, k + f)
        _accumulate(out, mono, coeff * RationalFunctionOfQ.q_power(qexp) if qexp else coeff)
    return out
