"""Dense univariate polynomials over Q as tuples of Fractions, lowest degree first.

Every function returns trimmed tuples (no trailing zeros); the zero
polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Dense = tuple  # tuple[Fraction, ...]

ZERO: Dense = ()
ONE: Dense = (Fraction(1),)


def trim(c: Sequence[Fraction]) -> Dense:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def add(a: Dense, b: Dense) -> Dense:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def neg(a: Dense) -> Dense:
    return tuple(-x for x in a)


def sub(a: Dense, b: Dense) -> Dense:
    return add(a, neg(b))


def scale(a: Dense, s: Fraction) -> Dense:
    if not s:
        return ZERO
    return tuple(x * s for x in a)


def mul(a: Dense, b: Dense) -> Dense:
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def divmod_(a: Dense, b: Dense) -> tuple[Dense, Dense]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return ZERO, a
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    quo = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        c = c / lead
        quo[k - db] = c
        for j in range(db + 1):
            rem[k - db + j] -= c * b[j]
    return trim(quo), trim(rem[:db])


def exact_div(a: Dense, b: Dense) -> Dense:
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def monic(a: Dense) -> Dense:
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(x / lead for x in a)


def gcd(a: Dense, b: Dense) -> Dense:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    a, b = monic(a), monic(b)
    while b:
        _, r = divmod_(a, b)
        a, b = b, monic(r)
    return a


def derivative(a: Dense) -> Dense:
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a: Dense, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def xgcd_inverse(a: Dense, m: Dense) -> Dense:
    """Inverse of ``a`` modulo ``m``; raises ZeroDivisionError when not coprime."""
    r0, r1 = m, divmod_(a, m)[1]
    s0, s1 = ZERO, ONE
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo the given polynomial")
    return divmod_(scale(s0, 1 / r0[0]), m)[1]
