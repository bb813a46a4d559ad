"""
Rational differentials g dx, their orders and their kind
"""
import math
from enum import Enum
from typing import Any, List, Tuple, Union

from ..algebra.fields import FieldElement
from ..algebra.polynomials import Polynomial, RationalFunction
from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..curves.places import Branch, Place, candidate_places, order_at
from ..local.expansion import local_residue_coefficient
from ..utils.errors import FieldMismatchError


class DifferentialKind(str, Enum):
    FIRST_KIND = "first-kind"
    SECOND_KIND = "second-kind"
    NEITHER = "neither"


class RationalDifferential:
    """omega = coefficient * dx"""

    __slots__ = ("coefficient",)

    def __init__(self, coefficient: FunctionFieldElement):
        self.coefficient = coefficient

    @classmethod
    def of(cls, curve: CurveModel, coefficient: Any) -> "RationalDifferential":
        if isinstance(coefficient, FunctionFieldElement):
            return cls(coefficient)
        return cls(FunctionFieldElement(curve, coefficient))

    @classmethod
    def dx(cls, curve: CurveModel) -> "RationalDifferential":
        return cls(FunctionFieldElement(curve, 1))

    @classmethod
    def exact(cls, g: FunctionFieldElement) -> "RationalDifferential":
        """dg"""
        return cls(g.derivative())

    @classmethod
    def basis_element(cls, curve: CurveModel, i: int) -> "RationalDifferential":
        """x^i dx/y"""
        return cls(FunctionFieldElement(curve, 0, RationalFunction(Polynomial.monomial(1, i, curve.field), curve.f)))

    @property
    def curve(self) -> CurveModel:
        return self.coefficient.curve

    def is_zero(self) -> bool:
        return self.coefficient.is_zero()

    def _other(self, other: Any) -> "RationalDifferential":
        if not isinstance(other, RationalDifferential):
            raise TypeError(f"Cannot combine a differential with {other!r}")
        if other.curve != self.curve:
            raise FieldMismatchError("Differentials on different curves")
        return other

    def __add__(self, other: Any) -> "RationalDifferential":
        return RationalDifferential(self.coefficient + self._other(other).coefficient)

    def __neg__(self) -> "RationalDifferential":
        return RationalDifferential(-self.coefficient)

    def __sub__(self, other: Any) -> "RationalDifferential":
        return RationalDifferential(self.coefficient - self._other(other).coefficient)

    def __mul__(self, other: Any) -> "RationalDifferential":
        """Product with a function or a scalar"""
        if isinstance(other, RationalDifferential):
            return NotImplemented
        return RationalDifferential(self.coefficient * other)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, RationalDifferential) and self.coefficient == other.coefficient

    def __hash__(self) -> int:
        return hash(self.coefficient)

    def to_json(self) -> dict:
        return {"g": self.coefficient.to_json()}

    def __repr__(self) -> str:
        return f"({self.coefficient}) dx"


def _order_of_dx(place: Place) -> int:
    if place.is_at_infinity:
        return -3 if place.curve.is_hyperelliptic else -2
    return 1 if place.branch == Branch.RAMIFIED else 0


def order_of_differential(omega: RationalDifferential, place: Place) -> Union[int, float]:
    if omega.is_zero():
        return math.inf
    return order_at(omega.coefficient, place) + _order_of_dx(place)


def pole_places(omega: RationalDifferential) -> List[Place]:
    """Places where omega has a pole, in candidate order"""
    if omega.is_zero():
        return []
    return [place for place in candidate_places(omega.curve, [omega]) if order_of_differential(omega, place) < 0]


def residues(omega: RationalDifferential) -> List[Tuple[Place, FieldElement]]:
    """(place, residue in the residue field) at every pole"""
    return [(place, local_residue_coefficient(omega, place)) for place in pole_places(omega)]


def classify(omega: RationalDifferential) -> DifferentialKind:
    poles = pole_places(omega)
    if not poles:
        return DifferentialKind.FIRST_KIND
    if all(local_residue_coefficient(omega, place).is_zero() for place in poles):
        return DifferentialKind.SECOND_KIND
    return DifferentialKind.NEITHER


def canonical_basis(curve: CurveModel) -> List[RationalDifferential]:
    """x^i dx/y for 0 <= i < 2g; empty on the projective line"""
    return [RationalDifferential.basis_element(curve, i) for i in range(2 * curve.genus)]


def first_kind_basis(curve: CurveModel) -> List[RationalDifferential]:
    return canonical_basis(curve)[: curve.genus]


def hodge_dimension(curve: CurveModel) -> int:
    """dim H^0(X, Omega^1) = g"""
    return curve.genus
