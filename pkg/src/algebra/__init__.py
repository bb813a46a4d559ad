"""
Exact arithmetic: scalar fields, Witt vectors of length two, polynomials
"""

from .fields import (
    QQ,
    ExtensionField,
    ExtensionFieldElement,
    Field,
    FieldElement,
    PrimeField,
    PrimeFieldElement,
    RationalField,
    RationalNumber,
    trace_to_base,
)
from .polynomials import Polynomial, RationalFunction
from .witt import LiftedPolynomial, WittLength2
from .factoring import factor, is_irreducible

__all__ = [
    "QQ",
    "ExtensionField",
    "ExtensionFieldElement",
    "Field",
    "FieldElement",
    "PrimeField",
    "PrimeFieldElement",
    "RationalField",
    "RationalNumber",
    "trace_to_base",
    "Polynomial",
    "RationalFunction",
    "LiftedPolynomial",
    "WittLength2",
    "factor",
    "is_irreducible",
]
