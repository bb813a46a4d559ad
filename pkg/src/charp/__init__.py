"""Frobenius lifts modulo p^2 and the adelic decomposition map in characteristic p"""
from .decomposition import (
    cartier_inverse_representative,
    lift_gap_witness,
    maps_f_h,
    psi,
    psi_of_exact,
    u_adele,
    verify_f_h_closure,
    verify_h0,
    verify_linearity,
    verify_psi_identity,
    verify_quasi_iso,
)
from .lifting import (
    Coordinate,
    FrobeniusLift,
    LiftedCurve,
    LiftFamily,
    canonical_family,
    complete_family,
    compute_u,
    frobenius_defect,
    lift_frobenius,
    ramified_lift,
    random_lift_family,
)

__all__ = [
    "cartier_inverse_representative",
    "lift_gap_witness",
    "maps_f_h",
    "psi",
    "psi_of_exact",
    "u_adele",
    "verify_f_h_closure",
    "verify_h0",
    "verify_linearity",
    "verify_psi_identity",
    "verify_quasi_iso",
    "Coordinate",
    "FrobeniusLift",
    "LiftedCurve",
    "LiftFamily",
    "canonical_family",
    "complete_family",
    "compute_u",
    "frobenius_defect",
    "lift_frobenius",
    "ramified_lift",
    "random_lift_family",
]
