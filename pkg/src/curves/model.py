"""
Curve models: the projective line and hyperelliptic curves y^2 = f(x)
"""
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from loguru import logger

from ..algebra.fields import QQ, Field, PrimeField
from ..algebra.polynomials import Polynomial
from ..utils.errors import InvalidSpecError, SingularModelError, UnsupportedCharacteristicError


class CurveKind(str, Enum):
    PROJECTIVE_LINE = "P1"
    HYPERELLIPTIC = "hyperelliptic"


@dataclass(frozen=True)
class CurveModel:
    """
    A smooth projective curve over Q or F_p

    For hyperelliptic curves `f` is squarefree of odd degree, so the curve
    has a single (ramified) place at infinity.
    """

    kind: CurveKind
    field: Field
    f: Optional[Polynomial] = None

    def __post_init__(self):
        if self.kind == CurveKind.PROJECTIVE_LINE:
            if self.f is not None:
                raise InvalidSpecError("The projective line takes no defining polynomial")
            return
        if self.f is None or self.f.field != self.field:
            raise InvalidSpecError("Hyperelliptic model needs f over the base field")
        if self.field.characteristic == 2:
            raise UnsupportedCharacteristicError("Hyperelliptic curves in characteristic 2 are not supported")
        if self.f.degree < 3 or self.f.degree % 2 == 0:
            raise InvalidSpecError(f"deg f must be odd and at least 3, got {self.f.degree}")
        if not self.f.squarefree():
            raise SingularModelError(f"f = {self.f} is not squarefree", {"f": self.f.to_json()})

    # ------------------------------------------------------------ constructors

    @classmethod
    def projective_line(cls, field: Field = QQ) -> "CurveModel":
        return cls(CurveKind.PROJECTIVE_LINE, field)

    @classmethod
    def hyperelliptic(cls, field: Field, f_coefficients: List[Any]) -> "CurveModel":
        """y^2 = f(x) with f given constant term first"""
        return cls(CurveKind.HYPERELLIPTIC, field, Polynomial(f_coefficients, field))

    @classmethod
    def from_spec(cls, document: Dict[str, Any]) -> "CurveModel":
        """Build a curve from {"characteristic": 0 | p, "model": "P1" | {"hyperelliptic_f": [...]}}"""
        if not isinstance(document, dict):
            raise InvalidSpecError("Curve spec must be a JSON object")
        characteristic = document.get("characteristic")
        if not isinstance(characteristic, int) or isinstance(characteristic, bool) or characteristic < 0:
            raise InvalidSpecError(f"Invalid characteristic: {characteristic!r}")
        try:
            field: Field = QQ if characteristic == 0 else PrimeField(characteristic)
        except ValueError as e:
            raise InvalidSpecError(str(e)) from e

        model = document.get("model")
        if model == "P1":
            return cls.projective_line(field)
        if isinstance(model, dict) and isinstance(model.get("hyperelliptic_f"), list):
            coefficients = [_parse_coefficient(c, characteristic) for c in model["hyperelliptic_f"]]
            logger.debug(f"Hyperelliptic spec over {field} with coefficients {coefficients}")
            return cls.hyperelliptic(field, coefficients)
        raise InvalidSpecError(f"Unknown curve model: {model!r}")

    # ------------------------------------------------------------ properties

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def is_hyperelliptic(self) -> bool:
        return self.kind == CurveKind.HYPERELLIPTIC

    @property
    def f_coefficients(self) -> List[Any]:
        return list(self.f.coefficients) if self.f is not None else []

    @property
    def genus(self) -> int:
        return genus(self)

    def to_spec(self) -> Dict[str, Any]:
        if not self.is_hyperelliptic:
            return {"characteristic": self.characteristic, "model": "P1"}
        return {
            "characteristic": self.characteristic,
            "model": {"hyperelliptic_f": [c.to_json() for c in self.f.coefficients]},
        }

    def __repr__(self) -> str:
        if not self.is_hyperelliptic:
            return f"P1 over {self.field}"
        return f"y^2 = {self.f} over {self.field}"


def genus(curve: CurveModel) -> int:
    if not curve.is_hyperelliptic:
        return 0
    return (curve.f.degree - 1) // 2


def load_curve_spec(path: Union[str, Path]) -> CurveModel:
    try:
        document = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidSpecError(f"Cannot read curve spec {path}: {e}") from e
    return CurveModel.from_spec(document)


def _parse_coefficient(value: Any, characteristic: int) -> Union[int, Fraction]:
    if isinstance(value, bool):
        raise InvalidSpecError(f"Invalid coefficient {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            parsed = Fraction(value.strip())
        except ValueError as e:
            raise InvalidSpecError(f"Invalid coefficient {value!r}") from e
        if characteristic and parsed.denominator % characteristic == 0:
            raise InvalidSpecError(f"Coefficient {value!r} is not defined mod {characteristic}")
        return parsed
    raise InvalidSpecError(f"Invalid coefficient {value!r}")
