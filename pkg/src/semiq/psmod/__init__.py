"""Poisson algebras, Poisson modules and left Poisson modules as structure-constant tables."""

from .checks import check_left_poisson_module, check_poisson_algebra, check_poisson_module, solve_left_witness
from .examples import change_basis, corrupt, free_module, random_valid_pair, self_module, truncated_plane
from .tables import FinDimPoissonAlgebra, LeftPoissonModuleWitness, PoissonModuleData, trivial_extension

__all__ = [
    "FinDimPoissonAlgebra",
    "LeftPoissonModuleWitness",
    "PoissonModuleData",
    "change_basis",
    "check_left_poisson_module",
    "check_poisson_algebra",
    "check_poisson_module",
    "corrupt",
    "free_module",
    "random_valid_pair",
    "self_module",
    "solve_left_witness",
    "trivial_extension",
    "truncated_plane",
]
