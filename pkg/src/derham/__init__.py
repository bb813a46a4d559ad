"""
Differentials, de Rham cohomology of the curve and the Cartier operator
"""

from .differentials import (
    DifferentialKind,
    RationalDifferential,
    canonical_basis,
    classify,
    first_kind_basis,
    hodge_dimension,
    order_of_differential,
    pole_places,
    residues,
)
from .reduction import DeRhamClass, Reduction, reduce_to_basis, reduce_with_witness
from .cartier import cartier, cartier_inverse, p_power_components

__all__ = [
    "DifferentialKind",
    "RationalDifferential",
    "canonical_basis",
    "classify",
    "first_kind_basis",
    "hodge_dimension",
    "order_of_differential",
    "pole_places",
    "residues",
    "DeRhamClass",
    "Reduction",
    "reduce_to_basis",
    "reduce_with_witness",
    "cartier",
    "cartier_inverse",
    "p_power_components",
]
