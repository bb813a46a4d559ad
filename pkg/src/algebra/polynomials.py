"""
Dense univariate polynomials and reduced rational functions over exact fields
"""
from typing import Any, Callable, List, Sequence, Tuple, Union

from .fields import Field, FieldElement
from ..utils.errors import DivisionByZeroError, FieldMismatchError


class Polynomial:
    """Polynomial with coefficients listed from the constant term upwards"""

    __slots__ = ("field", "coefficients")

    def __init__(self, coefficients: Sequence[Any], field: Field):
        converted = [field.convert(c) for c in coefficients]
        while converted and converted[-1].is_zero():
            converted.pop()
        self.field = field
        self.coefficients: Tuple[FieldElement, ...] = tuple(converted)

    # ------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls((), field)

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls((1,), field)

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls((0, 1), field)

    @classmethod
    def monomial(cls, coefficient: Any, exponent: int, field: Field) -> "Polynomial":
        return cls([0] * exponent + [coefficient], field)

    # ------------------------------------------------------------ accessors

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    @property
    def leading(self) -> FieldElement:
        if not self.coefficients:
            return self.field.zero()
        return self.coefficients[-1]

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return self.field.zero()

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.leading.inverse())

    def map_coefficients(self, fn: Callable[[FieldElement], Any], field: Field) -> "Polynomial":
        return Polynomial([fn(c) for c in self.coefficients], field)

    def change_field(self, field: Field) -> "Polynomial":
        """Same polynomial viewed over a field containing the current one"""
        return Polynomial([field.convert(c) for c in self.coefficients], field)

    # ------------------------------------------------------------ arithmetic

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatchError(f"Polynomials over {self.field} and {other.field}")
            return other
        return Polynomial((other,), self.field)

    def scale(self, c: Any) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial([a * c for a in self.coefficients], self.field)

    def __add__(self, other: Any) -> "Polynomial":
        if not isinstance(other, (Polynomial, FieldElement, int)):
            return NotImplemented
        other = self._coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial([self.coefficient(i) + other.coefficient(i) for i in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coefficients], self.field)

    def __sub__(self, other: Any) -> "Polynomial":
        if not isinstance(other, (Polynomial, FieldElement, int)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Polynomial":
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        zero = self.field.zero()
        product = [zero] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] = product[i + j] + a * b
        return Polynomial(product, self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative power of a polynomial")
        result, base = Polynomial.one(self.field), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZeroError("Polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [self.field.zero()] * max(len(remainder) - other.degree, 0)
        lead_inverse = other.leading.inverse()
        for top in range(len(remainder) - 1, other.degree - 1, -1):
            c = remainder[top]
            if c.is_zero():
                continue
            factor = c * lead_inverse
            shift = top - other.degree
            quotient[shift] = factor
            for i, b in enumerate(other.coefficients):
                remainder[shift + i] = remainder[shift + i] - factor * b
        return Polynomial(quotient, self.field), Polynomial(remainder[: max(other.degree, 0)], self.field)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ValueError("Polynomial division is not exact")
        return quotient

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial", "Polynomial"]:
        """(g, s, t) with s*self + t*other = g (g not normalized)"""
        zero, one = Polynomial.zero(self.field), Polynomial.one(self.field)
        r0, r1 = self, self._coerce(other)
        s0, s1, t0, t1 = one, zero, zero, one
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        return r0, s0, t0

    def inverse_mod(self, modulus: "Polynomial") -> "Polynomial":
        g, s, _ = self.xgcd(modulus)
        if g.degree != 0:
            raise DivisionByZeroError("Polynomial is not invertible modulo the given modulus")
        return (s.scale(g.leading.inverse())) % modulus

    def derivative(self) -> "Polynomial":
        return Polynomial([c * i for i, c in enumerate(self.coefficients)][1:], self.field)

    def __call__(self, value: Any) -> Any:
        """Horner evaluation at a scalar, a series or anything closed under + and *"""
        if self.is_zero():
            if isinstance(value, FieldElement):
                return value.field.zero()
            return value * 0
        result: Any = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            result = result * value + c
        if len(self.coefficients) == 1 and not isinstance(value, FieldElement):
            return value * 0 + result
        return result

    def valuation_at(self, prime: "Polynomial") -> int:
        """Multiplicity of the irreducible `prime` in self"""
        if self.is_zero():
            raise ValueError("Valuation of the zero polynomial")
        count, current = 0, self
        while True:
            quotient, remainder = divmod(current, prime)
            if not remainder.is_zero():
                return count
            count += 1
            current = quotient

    def squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0

    # ------------------------------------------------------------ comparison & display

    def _key(self) -> Tuple:
        return tuple(c._key() for c in self.coefficients)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (FieldElement, int)):
            other = Polynomial((other,), self.field)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.field, self._key()))

    def to_json(self) -> List[Any]:
        return [c.to_json() for c in self.coefficients]

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        one = self.field.one()
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c.is_zero():
                continue
            monomial = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not monomial:
                terms.append(f"{c}")
            elif c == one:
                terms.append(monomial)
            else:
                terms.append(f"({c})*{monomial}")
        return " + ".join(terms)


class RationalFunction:
    """num/den in k(x) with den monic and gcd(num, den) = 1"""

    __slots__ = ("field", "num", "den")

    def __init__(self, num: Polynomial, den: Union[Polynomial, None] = None, _reduced: bool = False):
        field = num.field
        if den is None:
            den = Polynomial.one(field)
        if den.is_zero():
            raise DivisionByZeroError("Rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Polynomial.one(field)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
            lead = den.leading
            if lead != field.one():
                inverse = lead.inverse()
                num, den = num.scale(inverse), den.scale(inverse)
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, value: Any, field: Field) -> "RationalFunction":
        return cls(Polynomial((value,), field), _reduced=True)

    @classmethod
    def x(cls, field: Field) -> "RationalFunction":
        return cls(Polynomial.x(field), _reduced=True)

    @classmethod
    def coerce(cls, value: Any, field: Field) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls(value, _reduced=True)
        return cls.constant(value, field)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.num.is_constant()

    def __add__(self, other: Any) -> "RationalFunction":
        if not isinstance(other, (RationalFunction, Polynomial, FieldElement, int)):
            return NotImplemented
        other = RationalFunction.coerce(other, self.field)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other: Any) -> "RationalFunction":
        if not isinstance(other, (RationalFunction, Polynomial, FieldElement, int)):
            return NotImplemented
        return self + (-RationalFunction.coerce(other, self.field))

    def __rsub__(self, other: Any) -> "RationalFunction":
        return RationalFunction.coerce(other, self.field) - self

    def __mul__(self, other: Any) -> "RationalFunction":
        if not isinstance(other, (RationalFunction, Polynomial, FieldElement, int)):
            return NotImplemented
        other = RationalFunction.coerce(other, self.field)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZeroError("Inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: Any) -> "RationalFunction":
        if not isinstance(other, (RationalFunction, Polynomial, FieldElement, int)):
            return NotImplemented
        return self * RationalFunction.coerce(other, self.field).inverse()

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        return RationalFunction.coerce(other, self.field) * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent, _reduced=True)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den
        )

    def valuation_at(self, prime: Polynomial) -> int:
        if self.is_zero():
            raise ValueError("Valuation of zero")
        return self.num.valuation_at(prime) - self.den.valuation_at(prime)

    def valuation_at_infinity(self) -> int:
        if self.is_zero():
            raise ValueError("Valuation of zero")
        return self.den.degree - self.num.degree

    def __call__(self, value: Any) -> Any:
        return self.num(value) / self.den(value)

    def _key(self) -> Tuple:
        return (self.num._key(), self.den._key())

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (Polynomial, FieldElement, int)):
            other = RationalFunction.coerce(other, self.field)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.field == other.field and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.field, self._key()))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __repr__(self) -> str:
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num})/({self.den})"
