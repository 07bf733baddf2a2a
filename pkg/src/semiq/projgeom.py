"""Quantum projective space at a root of unity: decompositions and cohomology of Q(j).

Q(j) pushed down along the l-th power map splits as a sum of line bundles
O(-k) with multiplicity p(kl + j, n + 1; l), the number of ordered
(n+1)-tuples in [0, l-1] summing to kl + j. Cohomology is computed through
that splitting and compared with the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import CrossCheckFailed, RankIdentityViolated, TheoremMismatch
from .exactnum import CyclotomicField, CyclotomicNumber
from .ncalg import NcElement, multiply, qplane


@lru_cache(maxsize=None)
def _partition_row(parts: int, bound: int) -> tuple[int, ...]:
    """Coefficients of ((1 - t^bound) / (1 - t))^parts."""
    row = [1]
    for _ in range(parts):
        nxt = [0] * (len(row) + bound - 1)
        # multiply by 1 + t + ... + t^(bound-1) with a running window sum
        window = 0
        for m in range(len(nxt)):
            if m < len(row):
                window += row[m]
            if m - bound >= 0 and m - bound < len(row):
                window -= row[m - bound]
            nxt[m] = window
        row = nxt
    return tuple(row)


def restricted_partitions(m: int, parts: int, bound: int) -> int:
    """p(m, parts; bound): ordered tuples of ``parts`` integers in [0, bound-1] with sum m."""
    if parts < 1 or bound < 1:
        raise ValueError("parts and bound must be positive")
    if m < 0 or m > parts * (bound - 1):
        return 0
    return _partition_row(parts, bound)[m]


@dataclass(frozen=True)
class SheafDecomposition:
    """Q(j) = sum over k of m_k O(-k); ``terms`` lists (k, m_k) with m_k > 0, k ascending."""

    n: int
    l: int
    j: int
    terms: tuple[tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.terms)

    def multiplicity(self, k: int) -> int:
        return dict(self.terms).get(k, 0)

    def to_json(self) -> dict:
        return {"n": self.n, "l": self.l, "j": self.j, "terms": [{"k": k, "m": m} for k, m in self.terms]}

    def __str__(self) -> str:
        pieces = []
        for k, m in self.terms:
            bundle = "O" if k == 0 else f"O({-k})"
            pieces.append(bundle if m == 1 else f"{m} {bundle}")
        return " + ".join(pieces) or "0"


def decompose_sheaf(n: int, l: int, j: int) -> SheafDecomposition:
    if n < 1 or l < 2:
        raise ValueError("need n >= 1 and l >= 2")
    top = (n + 1) * (l - 1)
    # 0 <= kl + j <= top bounds k
    k_lo = -(j // l)
    k_hi = (top - j) // l
    terms = []
    for k in range(k_lo, k_hi + 1):
        m = restricted_partitions(k * l + j, n + 1, l)
        if m:
            terms.append((k, m))
    dec = SheafDecomposition(n, l, j, tuple(terms))
    if dec.rank != l ** n:
        raise RankIdentityViolated(f"rank {dec.rank} != l^n = {l ** n} for n={n}, l={l}, j={j}")
    return dec


def line_bundle_cohomology(n: int, m: int) -> tuple[int, ...]:
    """Dimensions of H^0..H^n of O(m) on projective n-space."""
    if n < 1:
        raise ValueError("n must be positive")
    dims = [0] * (n + 1)
    if m >= 0:
        dims[0] = comb(n + m, n)
    if m <= -n - 1:
        dims[n] = comb(-m - 1, n)
    return tuple(dims)


def cohomology_closed_form(n: int, j: int) -> tuple[int, ...]:
    """dim S^j(V*) in degree 0 for j >= 0, dim S^(-n-1-j)(V) in degree n for j <= -n-1, dim V = n+1."""
    return line_bundle_cohomology(n, j)


def quantum_cohomology(n: int, l: int, j: int) -> tuple[int, ...]:
    """Dimensions of H^i(Q(j)) computed through the line-bundle splitting."""
    dims = [0] * (n + 1)
    for k, m in decompose_sheaf(n, l, j).terms:
        for i, h in enumerate(line_bundle_cohomology(n, -k)):
            dims[i] += m * h
    result = tuple(dims)
    expected = cohomology_closed_form(n, j)
    if result != expected:
        raise TheoremMismatch(f"n={n}, l={l}, j={j}: decomposition gives {result}, closed form {expected}")
    return result


def euler_characteristic(dims) -> int:
    return sum((-1) ** i * d for i, d in enumerate(dims))


def cohomology_table(n: int, l: int, jmin: int, jmax: int) -> list[dict]:
    return [{"j": j, "h": list(quantum_cohomology(n, l, j))} for j in range(jmin, jmax + 1)]


def binomial_multiplicities(n: int, l: int) -> dict[int, int]:
    """m_1, m_2, m_3 by the expanded binomial expressions (compared against p(kl, n+1; l) as data)."""
    m1 = comb(n + l, n) - n - 1
    m2 = comb(n + 2 * l, 2 * l) - (n + 1) * m1 - comb(n + 2, 2)
    m3 = comb(n + 3 * l, 3 * l) - (n + 1) * m2 - comb(n + 2, 2) * m1 - comb(n + 3, 3)
    return {1: m1, 2: m2, 3: m3}


def compare_binomial_multiplicities(n: int, l: int) -> list[dict]:
    out = []
    for k, value in binomial_multiplicities(n, l).items():
        if k > n:
            continue
        actual = restricted_partitions(k * l, n + 1, l)
        out.append({"k": k, "binomial": value, "partition": actual, "equal": value == actual})
    return out


@dataclass(frozen=True)
class ProductEntry:
    """X_0^p X_1^(l-p) . X_0^q X_1^(l-q) = scalar X_0^(p+q) X_1^(2l-p-q)."""

    p: int
    q: int
    exponent: int  # (p - l) q, the power of eps
    scalar: CyclotomicNumber
    case: str  # "p+q<l", "p+q=l" or "p+q>l"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "exponent": self.exponent, "scalar": self.scalar.to_json(),
                "scalar_text": str(self.scalar), "case": self.case}


def product_table_p1(l: int) -> list[ProductEntry]:
    """The multiplication table of the degree-one generators of the n = 1 decomposition,
    each entry cross-checked against the normal form in the quantum plane at eps."""
    if l < 2:
        raise ValueError("l must be at least 2")
    pres = qplane(2)
    field = CyclotomicField(l)
    entries = []
    for p in range(1, l):
        for q in range(1, l):
            exponent = (p - l) * q
            scalar = CyclotomicNumber.root_power(l, exponent)
            a = NcElement.monomial(pres, field, (p, l - p))
            b = NcElement.monomial(pres, field, (q, l - q))
            expected = NcElement.monomial(pres, field, (p + q, 2 * l - p - q), scalar)
            got = multiply(a, b)
            if got != expected:
                raise CrossCheckFailed(f"l={l}, p={p}, q={q}: normal form {got}, table {expected}")
            case = "p+q<l" if p + q < l else ("p+q=l" if p + q == l else "p+q>l")
            entries.append(ProductEntry(p, q, exponent, scalar, case))
    return entries
