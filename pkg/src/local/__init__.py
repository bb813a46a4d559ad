"""
Local fields at places: Laurent series, expansions and residues
"""

from .laurent import LaurentSeries, termwise_antiderivative
from .expansion import (
    expand,
    expand_differential,
    local_coordinates,
    local_residue_coefficient,
    residue,
    residue_at,
    sum_of_residues,
)

__all__ = [
    "LaurentSeries",
    "termwise_antiderivative",
    "expand",
    "expand_differential",
    "local_coordinates",
    "local_residue_coefficient",
    "residue",
    "residue_at",
    "sum_of_residues",
]
