"""Generators of valid Poisson algebra / module tables and of corrupted variants.

The basic algebra is A = Q[x, y] / (x, y)^(d+1) with {x, y} = p for a
polynomial p without constant term; any such p gives a Poisson bracket in two
variables, and the truncation ideal is preserved because p vanishes at 0.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping

from .tables import FinDimPoissonAlgebra, PoissonModuleData, zero_vector

Poly = dict  # {(i, j): Fraction} for x^i y^j


def _monomials(d: int) -> list[tuple[int, int]]:
    return [(i, t - i) for t in range(d + 1) for i in range(t, -1, -1)]


def _label(mono: tuple[int, int]) -> str:
    i, j = mono
    parts = [s if e == 1 else f"{s}^{e}" for s, e in (("x", i), ("y", j)) if e]
    return " ".join(parts) or "1"


def _poly_mul(a: Poly, b: Poly, d: int) -> Poly:
    out: Poly = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            if i1 + i2 + j1 + j2 <= d:
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _dx(a: Poly) -> Poly:
    return {(i - 1, j): c * i for (i, j), c in a.items() if i}


def _dy(a: Poly) -> Poly:
    return {(i, j - 1): c * j for (i, j), c in a.items() if j}


def _sub(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def truncated_plane(d: int, p: Mapping[tuple[int, int], Fraction] | None = None) -> FinDimPoissonAlgebra:
    """Q[x,y]/(x,y)^(d+1) with {f, g} = p (f_x g_y - f_y g_x). ``p`` must have no constant term."""
    p = {k: Fraction(v) for k, v in (p or {}).items() if v}
    if p.get((0, 0)):
        raise ValueError("p must vanish at the origin")
    monos = _monomials(d)
    index = {m: k for k, m in enumerate(monos)}
    n = len(monos)

    def to_vec(poly: Poly):
        v = [Fraction(0)] * n
        for mono, c in poly.items():
            if sum(mono) <= d:
                v[index[mono]] += c
        return tuple(v)

    prod_t, br_t = [], []
    for m1 in monos:
        prow, brow = [], []
        for m2 in monos:
            f, g = {m1: Fraction(1)}, {m2: Fraction(1)}
            prow.append(to_vec(_poly_mul(f, g, d)))
            jac = _sub(_poly_mul(_dx(f), _dy(g), d), _poly_mul(_dy(f), _dx(g), d))
            brow.append(to_vec(_poly_mul(p, jac, d)))
        prod_t.append(prow)
        br_t.append(brow)
    return FinDimPoissonAlgebra([_label(m) for m in monos], prod_t, br_t, to_vec({(0, 0): Fraction(1)}))


def self_module(A: FinDimPoissonAlgebra, bracket: bool = True) -> PoissonModuleData:
    """A as a module over itself, with {f, m}' = {f, m} (or 0 if ``bracket`` is false)."""
    zero = zero_vector(A.dim)
    br = A.bracket if bracket else [[zero] * A.dim for _ in range(A.dim)]
    return PoissonModuleData(A.dim, [f"m.{s}" for s in A.labels], A.product, br)


def free_module(A: FinDimPoissonAlgebra, rank: int) -> PoissonModuleData:
    """A^rank with componentwise action and bracket."""
    n = A.dim
    size = n * rank
    action = [[zero_vector(size) for _ in range(size)] for _ in range(n)]
    bracket = [[zero_vector(size) for _ in range(size)] for _ in range(n)]
    for i in range(n):
        for r in range(rank):
            for a in range(n):
                col = r * n + a
                act = [Fraction(0)] * size
                brv = [Fraction(0)] * size
                for k in range(n):
                    act[r * n + k] = A.product[i][a][k]
                    brv[r * n + k] = A.bracket[i][a][k]
                action[i][col] = tuple(act)
                bracket[i][col] = tuple(brv)
    labels = [f"m{r}.{s}" for r in range(rank) for s in A.labels]
    return PoissonModuleData(n, labels, action, bracket)


def _invert(P: list[list[Fraction]]) -> list[list[Fraction]] | None:
    from ..exactnum import row_echelon

    n = len(P)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(P)]
    reduced, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in reduced]


def change_basis(M: PoissonModuleData, P: list[list[Fraction]]) -> PoissonModuleData:
    """The same module written in the basis given by the columns of the invertible matrix P."""
    Pinv = _invert(P)
    if Pinv is None:
        raise ValueError("change of basis matrix is singular")
    m = M.dim

    def conj(table):
        out = []
        for i in range(M.algebra_dim):
            # operator L_i in old coordinates: column a is table[i][a]
            L = [[table[i][a][k] for a in range(m)] for k in range(m)]
            LP = [[sum(L[r][s] * P[s][c] for s in range(m)) for c in range(m)] for r in range(m)]
            N = [[sum(Pinv[r][s] * LP[s][c] for s in range(m)) for c in range(m)] for r in range(m)]
            out.append([tuple(N[k][a] for k in range(m)) for a in range(m)])
        return out

    return PoissonModuleData(M.algebra_dim, M.labels, conj(M.action), conj(M.bracket))


def _random_fraction(rng: random.Random, spread: int = 3) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.randint(1, 2))


def _random_elementary_product(rng: random.Random, n: int, steps: int = 2) -> list[list[Fraction]]:
    """An invertible integer matrix: a few row additions and a swap applied to the identity.

    Sparse integer changes of basis keep the transformed tables sparse.
    """
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    if n < 2:
        P[0][0] = Fraction(rng.choice([-2, -1, 2]))
        return P
    for _ in range(steps):
        r, s = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        P[r] = [a + c * b for a, b in zip(P[r], P[s])]
    r, s = rng.sample(range(n), 2)
    P[r], P[s] = P[s], P[r]
    return P


def random_valid_pair(rng: random.Random, max_degree: int = 2, max_rank: int = 2):
    """A random Poisson algebra A and a Poisson module M over it."""
    d = rng.randint(1, max_degree)
    p = {mono: _random_fraction(rng) for mono in _monomials(d) if mono != (0, 0) and rng.random() < 0.6}
    A = truncated_plane(d, p)
    M = free_module(A, rng.randint(1, max_rank))
    if rng.random() < 0.5:
        M = change_basis(M, _random_elementary_product(rng, M.dim))
    return A, M


def corrupt(M: PoissonModuleData, rng: random.Random) -> PoissonModuleData:
    """Perturb one coordinate of one bracket entry by a nonzero rational."""
    i = rng.randrange(M.algebra_dim)
    a = rng.randrange(M.dim)
    k = rng.randrange(M.dim)
    delta = Fraction(0)
    while not delta:
        delta = _random_fraction(rng)
    return M.with_bracket_entry(i, a, k, M.bracket[i][a][k] + delta)
