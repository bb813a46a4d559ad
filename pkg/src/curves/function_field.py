"""
Elements a + b*y of k(X) = k(x)[y]/(y^2 - f)
"""
from fractions import Fraction
from typing import Any, Tuple

from ..algebra.fields import FieldElement
from ..algebra.polynomials import Polynomial, RationalFunction
from ..utils.errors import DivisionByZeroError, FieldMismatchError
from .model import CurveModel

_Scalar = (RationalFunction, Polynomial, FieldElement, int, Fraction)


class FunctionFieldElement:
    """a + b*y with a, b in k(x); on the projective line b is always 0"""

    __slots__ = ("curve", "a", "b")

    def __init__(self, curve: CurveModel, a: Any = 0, b: Any = 0):
        field = curve.field
        self.curve = curve
        self.a = RationalFunction.coerce(a, field)
        self.b = RationalFunction.coerce(b, field)
        if not curve.is_hyperelliptic and not self.b.is_zero():
            raise FieldMismatchError("y is not defined on the projective line")

    # ------------------------------------------------------------ constructors

    @classmethod
    def x(cls, curve: CurveModel) -> "FunctionFieldElement":
        return cls(curve, RationalFunction.x(curve.field))

    @classmethod
    def y(cls, curve: CurveModel) -> "FunctionFieldElement":
        return cls(curve, 0, 1)

    @classmethod
    def constant(cls, curve: CurveModel, value: Any) -> "FunctionFieldElement":
        return cls(curve, value)

    def _coerce(self, other: Any) -> "FunctionFieldElement":
        if isinstance(other, FunctionFieldElement):
            if other.curve != self.curve:
                raise FieldMismatchError(f"Elements of {self.curve} and {other.curve}")
            return other
        if isinstance(other, Fraction):
            other = self.curve.field.convert(other)
        return FunctionFieldElement(self.curve, other)

    # ------------------------------------------------------------ arithmetic

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_rational(self) -> bool:
        """True when the element lies in k(x)"""
        return self.b.is_zero()

    def __add__(self, other: Any) -> "FunctionFieldElement":
        if not isinstance(other, (FunctionFieldElement,) + _Scalar):
            return NotImplemented
        other = self._coerce(other)
        return FunctionFieldElement(self.curve, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self.curve, -self.a, -self.b)

    def __sub__(self, other: Any) -> "FunctionFieldElement":
        if not isinstance(other, (FunctionFieldElement,) + _Scalar):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "FunctionFieldElement":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "FunctionFieldElement":
        if not isinstance(other, (FunctionFieldElement,) + _Scalar):
            return NotImplemented
        other = self._coerce(other)
        a = self.a * other.a
        b = self.a * other.b + self.b * other.a
        if self.curve.is_hyperelliptic and not (self.b.is_zero() or other.b.is_zero()):
            a = a + self.b * other.b * self.curve.f
        return FunctionFieldElement(self.curve, a, b)

    __rmul__ = __mul__

    def conjugate(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self.curve, self.a, -self.b)

    def norm(self) -> RationalFunction:
        """N(a + b y) = a^2 - b^2 f, an element of k(x)"""
        if self.b.is_zero():
            return self.a * self.a
        return self.a * self.a - self.b * self.b * self.curve.f

    def inverse(self) -> "FunctionFieldElement":
        if self.is_zero():
            raise DivisionByZeroError("Inverse of zero in the function field")
        if self.b.is_zero():
            return FunctionFieldElement(self.curve, self.a.inverse())
        n = self.norm().inverse()
        return FunctionFieldElement(self.curve, self.a * n, -self.b * n)

    def __truediv__(self, other: Any) -> "FunctionFieldElement":
        if not isinstance(other, (FunctionFieldElement,) + _Scalar):
            return NotImplemented
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> "FunctionFieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FunctionFieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = FunctionFieldElement(self.curve, 1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self) -> "FunctionFieldElement":
        """d/dx, using dy/dx = f'/(2y), i.e. d(b y)/dx = (b' + b f'/(2f)) y"""
        if self.b.is_zero():
            return FunctionFieldElement(self.curve, self.a.derivative())
        f = RationalFunction.coerce(self.curve.f, self.curve.field)
        db = self.b.derivative() + self.b * f.derivative() / (f * 2)
        return FunctionFieldElement(self.curve, self.a.derivative(), db)

    # ------------------------------------------------------------ comparison & display

    def _key(self) -> Tuple:
        return (self.a._key(), self.b._key())

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, _Scalar):
            other = FunctionFieldElement(self.curve, other)
        if not isinstance(other, FunctionFieldElement):
            return NotImplemented
        return self.curve == other.curve and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json()}

    def __repr__(self) -> str:
        if self.b.is_zero():
            return repr(self.a)
        if self.a.is_zero():
            return f"({self.b})*y"
        return f"{self.a} + ({self.b})*y"
