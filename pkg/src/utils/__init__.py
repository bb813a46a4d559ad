"""
Errors, reports and input helpers shared by the library and the CLI
"""

from .errors import (
    AdeleError,
    CharPObstructionError,
    DivisionByZeroError,
    FieldMismatchError,
    HenselFailureError,
    InsufficientPrecisionError,
    InvalidSpecError,
    ModulusMismatchError,
    NonzeroResidueError,
    NotClosedError,
    NotFirstKindError,
    NotIntegralError,
    NotSecondKindError,
    ReducibleError,
    SingularModelError,
    UnsupportedCharacteristicError,
    VerificationError,
)

__all__ = [
    "AdeleError",
    "CharPObstructionError",
    "DivisionByZeroError",
    "FieldMismatchError",
    "HenselFailureError",
    "InsufficientPrecisionError",
    "InvalidSpecError",
    "ModulusMismatchError",
    "NonzeroResidueError",
    "NotClosedError",
    "NotFirstKindError",
    "NotIntegralError",
    "NotSecondKindError",
    "ReducibleError",
    "SingularModelError",
    "UnsupportedCharacteristicError",
    "VerificationError",
]
