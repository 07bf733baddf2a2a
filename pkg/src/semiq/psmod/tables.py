"""Finite-dimensional Poisson algebras and modules given by structure-constant tables.

A table ``T`` for a bilinear map V x W -> U is nested as ``T[i][j]``, the
coordinate vector (length dim U) of the image of the i-th and j-th basis
vectors. All entries are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DimensionMismatch

Vector = tuple  # tuple[Fraction, ...]


def _vec(v, n: int, what: str) -> Vector:
    v = tuple(Fraction(x) for x in v)
    if len(v) != n:
        raise DimensionMismatch(f"{what}: expected length {n}, got {len(v)}")
    return v


def _table(t, rows: int, cols: int, out: int, what: str) -> tuple:
    if len(t) != rows or any(len(r) != cols for r in t):
        raise DimensionMismatch(f"{what}: expected a {rows} x {cols} table")
    return tuple(tuple(_vec(cell, out, f"{what}[{i}][{j}]") for j, cell in enumerate(r)) for i, r in enumerate(t))


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def add(u: Vector, v: Vector) -> Vector:
    # skipping zero operands avoids most Fraction arithmetic on sparse tables
    return tuple((a + b if a else b) if b else a for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple((a - b if a else -b) if b else a for a, b in zip(u, v))


def scale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def bilinear(table, u: Vector, v: Vector, out: int) -> Vector:
    acc = [Fraction(0)] * out
    for i, a in enumerate(u):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(row[j]):
                if c:
                    acc[k] += ab * c
    return tuple(acc)


@dataclass(frozen=True)
class FinDimPoissonAlgebra:
    """Commutative product and bracket on Q^n with a designated unit. Axioms are checked, not assumed."""

    labels: tuple
    product: tuple
    bracket: tuple
    unit: Vector

    def __init__(self, labels: Sequence[str], product, bracket, unit):
        n = len(labels)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "product", _table(product, n, n, n, "product"))
        object.__setattr__(self, "bracket", _table(bracket, n, n, n, "bracket"))
        object.__setattr__(self, "unit", _vec(unit, n, "unit"))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def mul(self, u: Vector, v: Vector) -> Vector:
        return bilinear(self.product, u, v, self.dim)

    def br(self, u: Vector, v: Vector) -> Vector:
        return bilinear(self.bracket, u, v, self.dim)

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "product": _table_json(self.product),
            "bracket": _table_json(self.bracket),
            "unit": [str(x) for x in self.unit],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FinDimPoissonAlgebra":
        return cls(data["labels"], _table_from_json(data["product"]), _table_from_json(data["bracket"]),
                   [Fraction(x) for x in data["unit"]])


@dataclass(frozen=True)
class PoissonModuleData:
    """An A-action A x M -> M and a bracket {,}': A x M -> M, both as tables indexed [A-basis][M-basis]."""

    labels: tuple
    action: tuple
    bracket: tuple

    def __init__(self, algebra_dim: int, labels: Sequence[str], action, bracket):
        m = len(labels)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "action", _table(action, algebra_dim, m, m, "action"))
        object.__setattr__(self, "bracket", _table(bracket, algebra_dim, m, m, "module bracket"))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def algebra_dim(self) -> int:
        return len(self.action)

    def basis(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def act(self, f: Vector, m: Vector) -> Vector:
        return bilinear(self.action, f, m, self.dim)

    def br(self, f: Vector, m: Vector) -> Vector:
        return bilinear(self.bracket, f, m, self.dim)

    def with_bracket_entry(self, i: int, a: int, k: int, value) -> "PoissonModuleData":
        """Copy with the k-th coordinate of {e_i, m_a}' replaced by ``value``."""
        table = [[list(cell) for cell in row] for row in self.bracket]
        table[i][a][k] = Fraction(value)
        return PoissonModuleData(self.algebra_dim, self.labels, self.action, table)

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "action": _table_json(self.action), "bracket": _table_json(self.bracket)}

    @classmethod
    def from_json(cls, algebra_dim: int, data: dict) -> "PoissonModuleData":
        return cls(algebra_dim, data["labels"], _table_from_json(data["action"]), _table_from_json(data["bracket"]))


@dataclass(frozen=True)
class LeftPoissonModuleWitness:
    """Module data together with a bilinear map B~: A x M -> M (table indexed [A-basis][M-basis])."""

    module: PoissonModuleData
    witness: tuple

    def __init__(self, module: PoissonModuleData, witness):
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "witness", _table(witness, module.algebra_dim, module.dim, module.dim, "witness"))

    def btilde(self, f: Vector, m: Vector) -> Vector:
        return bilinear(self.witness, f, m, self.module.dim)

    @classmethod
    def zero(cls, module: PoissonModuleData) -> "LeftPoissonModuleWitness":
        z = zero_vector(module.dim)
        return cls(module, [[z] * module.dim for _ in range(module.algebra_dim)])


def _table_json(t) -> list:
    return [[[str(x) for x in cell] for cell in row] for row in t]


def _table_from_json(t) -> list:
    return [[[Fraction(x) for x in cell] for cell in row] for row in t]


def trivial_extension(A: FinDimPoissonAlgebra, M: PoissonModuleData) -> FinDimPoissonAlgebra:
    """A + M with M.M = {M, M} = 0, (a,m)(a',m') = (aa', am' + a'm) and
    {(a,m),(a',m')} = ({a,a'}, {a,m'}' - {a',m}')."""
    if M.algebra_dim != A.dim:
        raise DimensionMismatch(f"module tables are indexed by {M.algebra_dim} algebra vectors, algebra has {A.dim}")
    n, m = A.dim, M.dim
    size = n + m
    zero = zero_vector(size)

    def embed_a(v):
        return tuple(v) + zero_vector(m)

    def embed_m(v):
        return zero_vector(n) + tuple(v)

    product = [[zero] * size for _ in range(size)]
    bracket = [[zero] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            product[i][j] = embed_a(A.product[i][j])
            bracket[i][j] = embed_a(A.bracket[i][j])
        for a in range(m):
            product[i][n + a] = product[n + a][i] = embed_m(M.action[i][a])
            bracket[i][n + a] = embed_m(M.bracket[i][a])
            bracket[n + a][i] = embed_m(scale(-1, M.bracket[i][a]))
    labels = tuple(A.labels) + tuple(M.labels)
    return FinDimPoissonAlgebra(labels, product, bracket, embed_a(A.unit))
