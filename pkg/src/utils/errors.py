"""
Typed errors raised by the adele library
"""
from typing import Any, Dict, Optional


class AdeleError(Exception):
    """Base class for every library error; `code` is stable and shows up in reports"""

    code = "adele-error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}


class DivisionByZeroError(AdeleError, ZeroDivisionError):
    code = "division-by-zero"


class FieldMismatchError(AdeleError):
    code = "field-mismatch"


class ModulusMismatchError(AdeleError):
    code = "modulus-mismatch"


class ReducibleError(AdeleError):
    code = "reducible-center"


class SingularModelError(AdeleError):
    code = "singular-model"


class InsufficientPrecisionError(AdeleError):
    code = "insufficient-precision"


class NonzeroResidueError(AdeleError):
    code = "nonzero-residue"


class CharPObstructionError(AdeleError):
    code = "char-p-obstruction"


class NotSecondKindError(AdeleError):
    code = "not-second-kind"


class NotFirstKindError(AdeleError):
    code = "not-first-kind"


class NotClosedError(AdeleError):
    code = "not-closed"


class NotIntegralError(AdeleError, ValueError):
    """A point component of an adele has a pole where none is allowed"""

    code = "not-integral"


class HenselFailureError(AdeleError):
    code = "hensel-failure"


class InvalidSpecError(AdeleError):
    code = "invalid-spec"


class UnsupportedCharacteristicError(AdeleError):
    code = "unsupported-characteristic"


class VerificationError(AdeleError):
    """A verification suite found a counterexample; `details` holds it"""

    code = "verification-failed"
