"""Adeles on curves, the adele complex and its cohomology"""
from .adele import Adele, MixedAdele, adele_equal, mixed, rational_adele, serialize_adele, unit_adele
from .cohomology import (
    HodgeDecompositionCheck,
    basis_cocycles,
    cocycle_from_second_kind,
    first_kind_variant,
    gram_matrix,
    hodge_decomposition_check,
    is_coboundary_witness,
    local_primitive,
    pair_differentials,
    pairing,
    pairing_vector,
    primitive_witness,
    split_obstruction,
    try_coboundary_01,
)
from .operators import cup, d_double_prime, d_prime, integrate, is_cocycle, total_differential

__all__ = [
    "Adele",
    "MixedAdele",
    "adele_equal",
    "mixed",
    "rational_adele",
    "serialize_adele",
    "unit_adele",
    "HodgeDecompositionCheck",
    "basis_cocycles",
    "cocycle_from_second_kind",
    "first_kind_variant",
    "gram_matrix",
    "hodge_decomposition_check",
    "is_coboundary_witness",
    "local_primitive",
    "pair_differentials",
    "pairing",
    "pairing_vector",
    "primitive_witness",
    "split_obstruction",
    "try_coboundary_01",
    "cup",
    "d_double_prime",
    "d_prime",
    "integrate",
    "is_cocycle",
    "total_differential",
]
