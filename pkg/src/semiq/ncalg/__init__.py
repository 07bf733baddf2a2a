"""Noncommutative algebras in PBW normal form."""

from .element import (
    NcElement,
    casimir,
    commutator,
    generator_elements,
    is_central_at_root,
    is_pbw,
    monomial_product,
    multiply,
    qexponent,
    qexponent_by_swaps,
    specialize,
)
from .literals import format_element, format_monomial, parse_element
from .presentation import QUANTUM_AFFINE, QUANTUM_TORUS, UQSL2, AlgebraPresentation
from .presets import aliases, default_convention, preset, qplane, torus2, uqsl2_central

__all__ = [
    "QUANTUM_AFFINE",
    "QUANTUM_TORUS",
    "UQSL2",
    "AlgebraPresentation",
    "NcElement",
    "aliases",
    "casimir",
    "commutator",
    "default_convention",
    "format_element",
    "format_monomial",
    "generator_elements",
    "is_central_at_root",
    "is_pbw",
    "monomial_product",
    "multiply",
    "parse_element",
    "preset",
    "qexponent",
    "qexponent_by_swaps",
    "qplane",
    "specialize",
    "torus2",
    "uqsl2_central",
]
