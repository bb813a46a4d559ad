"""
Truncated Laurent series with exact coefficients and explicit absolute precision
"""
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

from ..algebra.fields import Field, FieldElement
from ..utils.errors import (
    CharPObstructionError,
    FieldMismatchError,
    InsufficientPrecisionError,
    NonzeroResidueError,
)


class LaurentSeries:
    """
    Σ c_i t^i + O(t^precision)

    Only nonzero coefficients with exponent below `precision` are stored.
    `place` tags the series with the place whose uniformizer t is; series at
    different places never mix.
    """

    __slots__ = ("field", "coefficients", "precision", "place")

    def __init__(self, coefficients: Dict[int, Any], precision: int, field: Field, place: Any = None):
        self.field = field
        self.precision = precision
        self.place = place
        self.coefficients: Dict[int, FieldElement] = {}
        for i, c in coefficients.items():
            if i >= precision:
                continue
            c = field.convert(c)
            if not c.is_zero():
                self.coefficients[i] = c

    # ------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, field: Field, precision: int, place: Any = None) -> "LaurentSeries":
        return cls({}, precision, field, place)

    @classmethod
    def constant(cls, value: Any, field: Field, precision: int, place: Any = None) -> "LaurentSeries":
        return cls({0: value}, precision, field, place)

    @classmethod
    def monomial(cls, value: Any, exponent: int, field: Field, precision: int, place: Any = None) -> "LaurentSeries":
        return cls({exponent: value}, precision, field, place)

    def _like(self, coefficients: Dict[int, Any], precision: int, place: Any = None) -> "LaurentSeries":
        return LaurentSeries(coefficients, precision, self.field, place if place is not None else self.place)

    # ------------------------------------------------------------ accessors

    def valuation(self) -> Optional[int]:
        """Smallest exponent with a nonzero coefficient, None if zero within precision"""
        return min(self.coefficients) if self.coefficients else None

    @property
    def min_exponent(self) -> int:
        return min(self.coefficients) if self.coefficients else self.precision

    def coefficient(self, i: int) -> FieldElement:
        if i >= self.precision:
            raise InsufficientPrecisionError(
                f"Coefficient of t^{i} requested from a series known to O(t^{self.precision})",
                {"exponent": i, "precision": self.precision},
            )
        return self.coefficients.get(i, self.field.zero())

    def is_zero(self) -> bool:
        """Zero within the known precision"""
        return not self.coefficients

    def truncate(self, precision: int) -> "LaurentSeries":
        return self._like(self.coefficients, min(precision, self.precision))

    def map_coefficients(self, fn: Callable[[FieldElement], Any], field: Field) -> "LaurentSeries":
        return LaurentSeries({i: fn(c) for i, c in self.coefficients.items()}, self.precision, field, self.place)

    # ------------------------------------------------------------ arithmetic

    def _check_place(self, other: "LaurentSeries") -> Any:
        if self.place is not None and other.place is not None and self.place != other.place:
            raise FieldMismatchError(f"Series at {self.place} and {other.place} cannot be combined")
        return self.place if self.place is not None else other.place

    def _scalar(self, value: Any) -> Optional[FieldElement]:
        if isinstance(value, (int, Fraction)):
            return self.field.convert(value)
        if isinstance(value, FieldElement):
            return self.field.convert(value) if value.field != self.field else value
        return None

    def __add__(self, other: Any) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            place = self._check_place(other)
            precision = min(self.precision, other.precision)
            coefficients = dict(self.coefficients)
            for i, c in other.coefficients.items():
                coefficients[i] = coefficients[i] + c if i in coefficients else c
            return self._like(coefficients, precision, place)
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        coefficients = dict(self.coefficients)
        coefficients[0] = coefficients[0] + scalar if 0 in coefficients else scalar
        return self._like(coefficients, self.precision)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return self._like({i: -c for i, c in self.coefficients.items()}, self.precision)

    def __sub__(self, other: Any) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return self + (-other)
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return self + (-scalar)

    def __rsub__(self, other: Any) -> "LaurentSeries":
        return (-self) + other

    def __mul__(self, other: Any) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            scalar = self._scalar(other)
            if scalar is None:
                return NotImplemented
            return self._like({i: c * scalar for i, c in self.coefficients.items()}, self.precision)

        place = self._check_place(other)
        precision = min(self.precision + other.min_exponent, other.precision + self.min_exponent)
        product: Dict[int, FieldElement] = {}
        for i, a in self.coefficients.items():
            for j, b in other.coefficients.items():
                k = i + j
                if k >= precision:
                    continue
                product[k] = product[k] + a * b if k in product else a * b
        return self._like(product, precision, place)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        v = self.valuation()
        if v is None:
            raise InsufficientPrecisionError(
                "Cannot invert a series that vanishes to its known precision", {"precision": self.precision}
            )
        relative = self.precision - v
        lead_inverse = self.coefficients[v].inverse()
        unit = [self.coefficient(v + k) for k in range(relative)]
        inverse = [lead_inverse]
        for n in range(1, relative):
            total = self.field.zero()
            for k in range(1, n + 1):
                if not unit[k].is_zero():
                    total = total + unit[k] * inverse[n - k]
            inverse.append(-lead_inverse * total)
        return self._like({n - v: c for n, c in enumerate(inverse)}, relative - v)

    def __truediv__(self, other: Any) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        scalar = self._scalar(other)
        if scalar is None:
            return NotImplemented
        return self * scalar.inverse()

    def __rtruediv__(self, other: Any) -> "LaurentSeries":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "LaurentSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self._like({0: self.field.one()}, self._unit_precision())
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _unit_precision(self) -> int:
        # relative precision is shared by every power of self
        return max(self.precision - self.min_exponent, 1)

    def derivative(self) -> "LaurentSeries":
        """d/dt; the precision drops by one"""
        return self._like({i - 1: c * i for i, c in self.coefficients.items() if i != 0}, self.precision - 1)

    def antiderivative(self, constant: Any = 0) -> "LaurentSeries":
        """
        The series a with da/dt = self and constant term `constant`

        Raises NonzeroResidueError when the t^-1 coefficient is nonzero and
        CharPObstructionError when some exponent i = -1 mod p carries a
        nonzero coefficient.
        """
        if self.precision <= -1:
            raise InsufficientPrecisionError("The t^-1 coefficient is not known", {"precision": self.precision})
        residue = self.coefficients.get(-1)
        if residue is not None:
            raise NonzeroResidueError(f"Series has residue {residue}", {"residue": residue.to_json()})

        p = self.field.characteristic
        result: Dict[int, FieldElement] = {}
        for i, c in self.coefficients.items():
            if p and (i + 1) % p == 0:
                raise CharPObstructionError(
                    f"t^{i} has no antiderivative in characteristic {p}", {"exponent": i, "coefficient": c.to_json()}
                )
            result[i + 1] = c / (i + 1)
        if self.precision + 1 > 0:
            result[0] = self.field.convert(constant)
        return self._like(result, self.precision + 1)

    # ------------------------------------------------------------ comparison & display

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equal up to the smaller of the two precisions"""
        return (self - other).is_zero()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.precision == other.precision and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.precision, tuple(sorted((i, c._key()) for i, c in self.coefficients.items()))))

    def to_json(self) -> dict:
        return {
            "precision": self.precision,
            "coefficients": [[i, self.coefficients[i].to_json()] for i in sorted(self.coefficients)],
        }

    def __repr__(self) -> str:
        terms = []
        for i in sorted(self.coefficients):
            c = self.coefficients[i]
            monomial = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not monomial:
                terms.append(f"{c}")
            elif c == self.field.one():
                terms.append(monomial)
            else:
                terms.append(f"({c})*{monomial}")
        terms.append(f"O(t^{self.precision})")
        return " + ".join(terms)


def termwise_antiderivative(series: LaurentSeries, constant: Any = 0) -> LaurentSeries:
    return series.antiderivative(constant)
