"""Exhaustive axiom checks over basis tuples; bilinearity makes basis tuples sufficient."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..errors import DimensionMismatch
from ..exactnum import solve_sparse
from ..report import Report, Tally
from .tables import (
    FinDimPoissonAlgebra,
    LeftPoissonModuleWitness,
    PoissonModuleData,
    add,
    scale,
    sub,
    zero_vector,
)


def _is_zero(v) -> bool:
    return not any(v)


# Sparse vectors {index: nonzero coefficient} keep the O(n^3) algebra checks cheap.


def _sparse(table) -> list[list[dict]]:
    return [[{k: c for k, c in enumerate(cell) if c} for cell in row] for row in table]


def _acc(out: dict, k, c) -> None:
    total = out.get(k, 0) + c
    if total:
        out[k] = total
    else:
        out.pop(k, None)


def _row(table, i: int, v: dict) -> dict:
    """table(e_i, v)."""
    out: dict = {}
    row = table[i]
    for j, b in v.items():
        for k, c in row[j].items():
            _acc(out, k, b * c)
    return out


def _col(table, v: dict, k: int) -> dict:
    """table(v, e_k)."""
    out: dict = {}
    for i, a in v.items():
        for m, c in table[i][k].items():
            _acc(out, m, a * c)
    return out


def _plus(*vs: dict) -> dict:
    out: dict = {}
    for v in vs:
        for k, c in v.items():
            _acc(out, k, c)
    return out


def check_poisson_algebra(A: FinDimPoissonAlgebra) -> Report:
    """Unit, commutativity, associativity, antisymmetry, Jacobi and Leibniz on all basis tuples."""
    n = A.dim
    e = [A.basis(i) for i in range(n)]
    lab = A.labels
    report = Report(f"Poisson algebra (dim {n})")

    t = Tally("unit")
    for i in range(n):
        t.record(A.mul(A.unit, e[i]) == e[i], lambda i=i: f"1 * {lab[i]} != {lab[i]}")
    report.results.append(t.result())

    t = Tally("commutativity")
    for i, j in product(range(n), repeat=2):
        t.record(A.product[i][j] == A.product[j][i], lambda i=i, j=j: f"{lab[i]}*{lab[j]} != {lab[j]}*{lab[i]}")
    report.results.append(t.result())

    P, B = _sparse(A.product), _sparse(A.bracket)
    t = Tally("associativity")
    for i, j, k in product(range(n), repeat=3):
        ok = _col(P, P[i][j], k) == _row(P, i, P[j][k])
        t.record(ok, lambda i=i, j=j, k=k: f"({lab[i]}, {lab[j]}, {lab[k]})")
    report.results.append(t.result())

    t = Tally("antisymmetry")
    for i, j in product(range(n), repeat=2):
        t.record(B[i][j] == {k: -c for k, c in B[j][i].items()}, lambda i=i, j=j: f"({lab[i]}, {lab[j]})")
    report.results.append(t.result())

    t = Tally("Jacobi")
    for i, j, k in product(range(n), repeat=3):
        jac = _plus(_row(B, i, B[j][k]), _row(B, j, B[k][i]), _row(B, k, B[i][j]))
        t.record(not jac, lambda i=i, j=j, k=k: f"({lab[i]}, {lab[j]}, {lab[k]})")
    report.results.append(t.result())

    t = Tally("Leibniz {f,gh} = {f,g}h + g{f,h}")
    for i, j, k in product(range(n), repeat=3):
        lhs = _row(B, i, P[j][k])
        rhs = _plus(_col(P, B[i][j], k), _row(P, j, B[i][k]))
        t.record(lhs == rhs, lambda i=i, j=j, k=k: f"({lab[i]}, {lab[j]}, {lab[k]})")
    report.results.append(t.result())
    return report


def _check_dims(A: FinDimPoissonAlgebra, M: PoissonModuleData) -> None:
    if M.algebra_dim != A.dim:
        raise DimensionMismatch(f"module tables are indexed by {M.algebra_dim} algebra vectors, algebra has {A.dim}")


def _module_axioms(A: FinDimPoissonAlgebra, M: PoissonModuleData, report: Report) -> None:
    e = [A.basis(i) for i in range(A.dim)]
    b = [M.basis(a) for a in range(M.dim)]
    la, lm = A.labels, M.labels

    t = Tally("module: 1 m = m")
    for a in range(M.dim):
        t.record(M.act(A.unit, b[a]) == b[a], lambda a=a: f"m={lm[a]}")
    report.results.append(t.result())

    t = Tally("module: (fg)m = f(gm)")
    for i, j, a in product(range(A.dim), range(A.dim), range(M.dim)):
        ok = M.act(A.mul(e[i], e[j]), b[a]) == M.act(e[i], M.act(e[j], b[a]))
        t.record(ok, lambda i=i, j=j, a=a: f"f={la[i]}, g={la[j]}, m={lm[a]}")
    report.results.append(t.result())


def check_poisson_module(A: FinDimPoissonAlgebra, M: PoissonModuleData) -> Report:
    """Module axioms and the three bracket identities of a Poisson module:

    {{f,g},m}' = {f,{g,m}'}' - {g,{f,m}'}'
    {f,gm}'    = g{f,m}' + {f,g}m
    {fg,m}'    = f{g,m}' + g{f,m}'
    """
    _check_dims(A, M)
    report = Report(f"Poisson module (dim {M.dim} over dim {A.dim})")
    _module_axioms(A, M, report)
    e = [A.basis(i) for i in range(A.dim)]
    b = [M.basis(a) for a in range(M.dim)]
    la, lm = A.labels, M.labels
    triples = list(product(range(A.dim), range(A.dim), range(M.dim)))

    def where(i, j, a):
        return lambda: f"f={la[i]}, g={la[j]}, m={lm[a]}"

    t = Tally("{{f,g},m}' = {f,{g,m}'}' - {g,{f,m}'}'")
    for i, j, a in triples:
        lhs = M.br(A.br(e[i], e[j]), b[a])
        rhs = sub(M.br(e[i], M.br(e[j], b[a])), M.br(e[j], M.br(e[i], b[a])))
        t.record(lhs == rhs, where(i, j, a))
    report.results.append(t.result())

    t = Tally("{f,gm}' = g{f,m}' + {f,g}m")
    for i, j, a in triples:
        lhs = M.br(e[i], M.act(e[j], b[a]))
        rhs = add(M.act(e[j], M.br(e[i], b[a])), M.act(A.br(e[i], e[j]), b[a]))
        t.record(lhs == rhs, where(i, j, a))
    report.results.append(t.result())

    t = Tally("{fg,m}' = f{g,m}' + g{f,m}'")
    for i, j, a in triples:
        lhs = M.br(A.mul(e[i], e[j]), b[a])
        rhs = add(M.act(e[i], M.br(e[j], b[a])), M.act(e[j], M.br(e[i], b[a])))
        t.record(lhs == rhs, where(i, j, a))
    report.results.append(t.result())
    return report


def _property2_sides(A, M, f, g, m):
    lhs = M.act(A.br(f, g), m)
    rhs = add(sub(M.act(f, M.br(g, m)), M.br(A.mul(f, g), m)), M.br(f, M.act(g, m)))
    return lhs, rhs


def _property3_lhs(A, M, f, g, m):
    """2{{f,g},m} - {f,{g,m}} + {g,{f,m}}."""
    return add(sub(scale(2, M.br(A.br(f, g), m)), M.br(f, M.br(g, m))), M.br(g, M.br(f, m)))


def _property3_rhs(A, M, btilde, f, g, m):
    """4(f B~(g,m) - B~(g,fm) + B~(f,gm) - g B~(f,m))."""
    inner = sub(add(sub(M.act(f, btilde(g, m)), btilde(g, M.act(f, m))), btilde(f, M.act(g, m))), M.act(g, btilde(f, m)))
    return scale(4, inner)


def check_left_poisson_module(A: FinDimPoissonAlgebra, W: LeftPoissonModuleWitness) -> Report:
    """Properties 1-3 of a left Poisson module, property 3 with the supplied witness B~.

    Property 2: {f,g}m = f{g,m} - {fg,m} + {f,gm}.
    Property 3: 2{{f,g},m} - {f,{g,m}} + {g,{f,m}} = 4(f B~(g,m) - B~(g,fm) + B~(f,gm) - g B~(f,m)).
    """
    M = W.module
    _check_dims(A, M)
    report = Report(f"left Poisson module (dim {M.dim} over dim {A.dim})")
    _module_axioms(A, M, report)
    e = [A.basis(i) for i in range(A.dim)]
    b = [M.basis(a) for a in range(M.dim)]
    la, lm = A.labels, M.labels
    triples = list(product(range(A.dim), range(A.dim), range(M.dim)))

    t = Tally("property 2: {f,g}m = f{g,m} - {fg,m} + {f,gm}")
    for i, j, a in triples:
        lhs, rhs = _property2_sides(A, M, e[i], e[j], b[a])
        t.record(lhs == rhs, lambda i=i, j=j, a=a: f"f={la[i]}, g={la[j]}, m={lm[a]}")
    report.results.append(t.result())

    t = Tally("property 3 with the given witness")
    for i, j, a in triples:
        lhs = _property3_lhs(A, M, e[i], e[j], b[a])
        rhs = _property3_rhs(A, M, W.btilde, e[i], e[j], b[a])
        t.record(lhs == rhs, lambda i=i, j=j, a=a: f"f={la[i]}, g={la[j]}, m={lm[a]}")
    report.results.append(t.result())
    return report


def solve_left_witness(A: FinDimPoissonAlgebra, M: PoissonModuleData) -> LeftPoissonModuleWitness | None:
    """A witness B~ satisfying property 3, found by exact linear algebra, or None if none exists.

    The unknowns are the table entries B~[i][a][k]; property 3 is linear in them,
    and for basis f = e_i, g = e_j, m = m_a its right-hand side reads
    4(e_i B~(e_j, m_a) - B~(e_j, e_i m_a) + B~(e_i, e_j m_a) - e_j B~(e_i, m_a)).
    """
    _check_dims(A, M)
    n, m = A.dim, M.dim
    act = M.action

    def var(i, a, k):
        return (i * m + a) * m + k

    e = [A.basis(i) for i in range(n)]
    b = [M.basis(a) for a in range(m)]
    rows, rhs = [], []
    for i, j, a in product(range(n), range(n), range(m)):
        lhs = _property3_lhs(A, M, e[i], e[j], b[a])
        eq = [dict() for _ in range(m)]

        def put(out, v, coeff):
            if coeff:
                eq[out][v] = eq[out].get(v, 0) + 4 * coeff

        for k in range(m):
            for out in range(m):
                put(out, var(j, a, k), act[i][k][out])
                put(out, var(i, a, k), -act[j][k][out])
        for c in range(m):
            for out in range(m):
                put(out, var(j, c, out), -act[i][a][c])
                put(out, var(i, c, out), act[j][a][c])
        for out in range(m):
            rows.append(eq[out])
            rhs.append(lhs[out])
    x = solve_sparse(rows, rhs, n * m * m, zero=Fraction(0))
    if x is None:
        return None
    table = [[tuple(x[var(i, a, k)] for k in range(m)) for a in range(m)] for i in range(n)]
    return LeftPoissonModuleWitness(M, table)
