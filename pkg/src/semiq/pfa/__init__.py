"""Poisson fibred algebra structure on A_eps over its centre."""

from .bracket import (
    BracketContext,
    GaugeMap,
    bracket,
    commutator_jets,
    curvature_jacobiator,
    curvature_taylor,
    gauge_bracket,
    gauge_curvature_check,
    gauge_curvature_sides,
    require_central,
    second_order_commutator,
)
from .axioms import check_pfa_axioms
from .uqsl2_table import (
    TableComparison,
    compare_curvature_formula,
    compare_uqsl2_table,
    computed_brackets,
    closed_form_curvature_operator,
    proportionality,
    table_constants,
    uqsl2_reference_brackets,
)
