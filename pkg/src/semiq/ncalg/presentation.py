"""Algebra presentations: quantum affine spaces, quantum tori and U_q(sl2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

QUANTUM_AFFINE = "quantum_affine"
QUANTUM_TORUS = "quantum_torus"
UQSL2 = "uqsl2"
KINDS = (QUANTUM_AFFINE, QUANTUM_TORUS, UQSL2)

Monomial = tuple  # tuple[int, ...]

UQSL2_NAMES = ("F", "K", "E")


def standard_relation_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """r_ij = 1 for i < j: x_i x_j = q x_j x_i."""
    return tuple(tuple(1 if i < j else (-1 if i > j else 0) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class AlgebraPresentation:
    """Generators and relations of one of the supported algebras.

    For the two q-commuting kinds, ``matrix[i][j]`` is the integer m with
    x_i x_j = q^m x_j x_i; monomials are exponent vectors in the order
    x_1, ..., x_n. For U_q(sl2) a monomial (i, j, k) means F^i K^j E^k.
    """

    kind: str
    rank: int
    matrix: tuple[tuple[int, ...], ...] = ()
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown presentation kind {self.kind!r}")
        if self.kind == UQSL2:
            if self.rank != 3 or self.names != UQSL2_NAMES:
                raise ValueError("U_q(sl2) has the fixed generators F, K, E")
            return
        n = self.rank
        if n < 0:
            raise ValueError("rank must be nonnegative")
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError(f"relation matrix must be {n}x{n}")
        for i in range(n):
            if self.matrix[i][i] != 0:
                raise ValueError("relation matrix must have zero diagonal")
            for j in range(n):
                if self.matrix[i][j] != -self.matrix[j][i]:
                    raise ValueError("relation matrix must be antisymmetric")
        if len(self.names) != n or len(set(self.names)) != n:
            raise ValueError("need one distinct name per generator")

    # -- constructors --------------------------------------------------------

    @classmethod
    def quantum_affine(cls, n: int, matrix: Sequence[Sequence[int]] | None = None,
                       names: Sequence[str] | None = None) -> "AlgebraPresentation":
        m = standard_relation_matrix(n) if matrix is None else tuple(tuple(int(x) for x in row) for row in matrix)
        names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(n))
        return cls(QUANTUM_AFFINE, n, m, names)

    @classmethod
    def quantum_torus(cls, matrix: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> "AlgebraPresentation":
        m = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(m)
        names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(n))
        return cls(QUANTUM_TORUS, n, m, names)

    @classmethod
    def uqsl2(cls) -> "AlgebraPresentation":
        return cls(UQSL2, 3, (), UQSL2_NAMES)

    # -- monomials -----------------------------------------------------------

    @property
    def is_uqsl2(self) -> bool:
        return self.kind == UQSL2

    def one(self) -> Monomial:
        return (0,) * self.rank

    def check_monomial(self, m: Monomial) -> Monomial:
        m = tuple(int(e) for e in m)
        if len(m) != self.rank:
            raise ValueError(f"monomial {m} has wrong length for rank {self.rank}")
        if self.kind == QUANTUM_AFFINE and any(e < 0 for e in m):
            raise ValueError(f"negative exponent in quantum affine monomial {m}")
        if self.kind == UQSL2 and (m[0] < 0 or m[2] < 0):
            raise ValueError(f"F and E exponents must be nonnegative in {m}")
        return m

    def generators(self) -> list[Monomial]:
        """Algebra generators (inverses included where they exist)."""
        if self.kind == UQSL2:
            return [(0, 0, 1), (1, 0, 0), (0, 1, 0), (0, -1, 0)]
        gens = []
        for i in range(self.rank):
            e = [0] * self.rank
            e[i] = 1
            gens.append(tuple(e))
            if self.kind == QUANTUM_TORUS:
                e[i] = -1
                gens.append(tuple(e))
        return gens

    def degree(self, m: Monomial) -> int:
        return sum(m)

    def kernel_mod(self, chi: Monomial, l: int) -> bool:
        """True when B(chi, .) vanishes modulo l (chi lies in H')."""
        if self.kind == UQSL2:
            raise ValueError("kernel is defined only for q-commuting presentations")
        return all(sum(chi[i] * self.matrix[i][j] for i in range(self.rank)) % l == 0 for j in range(self.rank))

    def skew_form(self, a: Monomial, b: Monomial) -> int:
        """B(a, b) = sum_ij a_i B_ij b_j."""
        return sum(a[i] * self.matrix[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def to_config(self) -> dict:
        if self.kind == UQSL2:
            return {"kind": self.kind}
        return {"kind": self.kind, "rank": self.rank, "matrix": [list(r) for r in self.matrix],
                "names": list(self.names)}

    @classmethod
    def from_config(cls, data: dict) -> "AlgebraPresentation":
        """Inverse of :meth:`to_config`; ``matrix`` may be omitted for the standard quantum affine space."""
        kind = data.get("kind")
        if kind == UQSL2:
            return cls.uqsl2()
        if kind == QUANTUM_AFFINE:
            return cls.quantum_affine(int(data["rank"]) if "rank" in data else len(data["matrix"]),
                                      data.get("matrix"), data.get("names"))
        if kind == QUANTUM_TORUS:
            return cls.quantum_torus(data["matrix"], data.get("names"))
        raise ValueError(f"unknown presentation kind {kind!r}")
