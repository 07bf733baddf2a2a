"""Letter-by-letter rewriting in U_q(sl2), independent of the straightening in ``uqsl2``.

Words are tuples of letters ``("F",)``, ``("E",)`` and ``("K", j)``. The rules

    E F     -> F E + (K - K^-1) / (q - q^-1)
    E K^j   -> q^(-2j) K^j E
    K^j F   -> q^(-2j) F K^j
    K^i K^j -> K^(i+j)           (K^0 is erased)

terminate: each step either lowers the number of (E before F) pairs or keeps
it and lowers the number of misplaced K letters or the word length. The
order in which redexes are chosen is a parameter so that confluence can be
observed directly.
"""

from __future__ import annotations

import random
from typing import Callable

from ..exactnum import RationalFunctionOfQ

F = ("F",)
E = ("E",)

Word = tuple
Combination = dict  # dict[Word, RationalFunctionOfQ]

_ONE = RationalFunctionOfQ.from_rational(1)
_INV_DIFF = (RationalFunctionOfQ.q() - RationalFunctionOfQ.q_power(-1)).inverse()


def K(j: int) -> tuple:
    return ("K", j)


def word_of_monomial(mono: tuple) -> Word:
    i, j, k = mono
    return (F,) * i + ((K(j),) if j else ()) + (E,) * k


def _redex_positions(word: Word) -> list[int]:
    out = []
    for p in range(len(word)):
        a = word[p]
        if a[0] == "K" and a[1] == 0:
            out.append(p)
            continue
        if p + 1 >= len(word):
            continue
        b = word[p + 1]
        if (a == E and (b == F or b[0] == "K")) or (a[0] == "K" and (b == F or b[0] == "K")):
            out.append(p)
    return out


def _apply(word: Word, p: int) -> list[tuple[Word, RationalFunctionOfQ]]:
    a = word[p]
    if a[0] == "K" and a[1] == 0:
        return [(word[:p] + word[p + 1:], _ONE)]
    b = word[p + 1]
    head, tail = word[:p], word[p + 2:]
    if a == E and b == F:
        return [
            (head + (F, E) + tail, _ONE),
            (head + (K(1),) + tail, _INV_DIFF),
            (head + (K(-1),) + tail, -_INV_DIFF),
        ]
    if a == E:
        j = b[1]
        return [(head + (b, E) + tail, RationalFunctionOfQ.q_power(-2 * j))]
    if b == F:
        j = a[1]
        return [(head + (F, a) + tail, RationalFunctionOfQ.q_power(-2 * j))]
    return [(head + (K(a[1] + b[1]),) + tail, _ONE)]


def _choose(strategy: str | Callable[[list[int]], int], rng: random.Random | None) -> Callable[[list[int]], int]:
    if callable(strategy):
        return strategy
    if strategy == "leftmost":
        return lambda ps: ps[0]
    if strategy == "rightmost":
        return lambda ps: ps[-1]
    if strategy == "random":
        rng = rng or random.Random(0)
        return lambda ps: rng.choice(ps)
    raise ValueError(f"unknown strategy {strategy!r}")


def normal_form(combination: Combination, strategy="leftmost", rng: random.Random | None = None,
                max_steps: int = 1_000_000) -> Combination:
    """Rewrite a linear combination of words until no redex remains."""
    pick = _choose(strategy, rng)
    pending = dict(combination)
    done: Combination = {}
    steps = 0
    while pending:
        word, coeff = pending.popitem()
        positions = _redex_positions(word)
        if not positions:
            _add(done, word, coeff)
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError("rewriting did not terminate within the step budget")
        for new_word, c in _apply(word, pick(positions)):
            _add(pending, new_word, coeff * c)
    return done


def _add(target: Combination, word: Word, coeff) -> None:
    total = target.get(word)
    total = coeff if total is None else total + coeff
    if total.is_zero():
        target.pop(word, None)
    else:
        target[word] = total


def word_to_monomial(word: Word) -> tuple:
    i = sum(1 for a in word if a == F)
    k = sum(1 for a in word if a == E)
    j = sum(a[1] for a in word if a[0] == "K")
    if word != word_of_monomial((i, j, k)):
        raise ValueError(f"word {word} is not in PBW order")
    return (i, j, k)


def rewrite_product(m: tuple, n: tuple, strategy="leftmost", rng: random.Random | None = None) -> dict:
    """PBW normal form of monomial(m) * monomial(n) by pure rewriting."""
    start = {word_of_monomial(m) + word_of_monomial(n): _ONE}
    return {word_to_monomial(w): c for w, c in normal_form(start, strategy, rng).items()}
