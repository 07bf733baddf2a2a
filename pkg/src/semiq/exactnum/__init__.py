"""Exact scalars: Laurent polynomials, Q(q), Q(eps) and order-2 jets at eps."""

from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, euler_phi
from .fields import GENERIC, CyclotomicField, GenericField
from .jets import (
    ADDITIVE,
    CONVENTIONS,
    MULTIPLICATIVE,
    JetAtRoot,
    eval_at_root,
    jet_at_root,
    limit_quotient,
)
from .laurent import LaurentPoly
from .linalg import rank, row_echelon, solve, solve_sparse
from .ratfunc import RationalFunctionOfQ, quantum_binomial, quantum_factorial, quantum_integer

__all__ = [
    "ADDITIVE",
    "CONVENTIONS",
    "GENERIC",
    "MULTIPLICATIVE",
    "CyclotomicField",
    "CyclotomicNumber",
    "GenericField",
    "JetAtRoot",
    "LaurentPoly",
    "RationalFunctionOfQ",
    "cyclotomic_polynomial",
    "euler_phi",
    "eval_at_root",
    "jet_at_root",
    "limit_quotient",
    "quantum_binomial",
    "quantum_factorial",
    "quantum_integer",
    "rank",
    "row_echelon",
    "solve",
    "solve_sparse",
]
