"""
Exact scalar fields: Q, F_p and simple extensions of either

Every element is immutable and knows its field. Mixed arithmetic is allowed
between a field and the fields below it in its extension tower (the smaller
operand is embedded); anything else raises FieldMismatchError.
"""
from abc import ABC, abstractmethod
from fractions import Fraction
from math import isqrt
from typing import Any, Iterator, List, Optional, Sequence, Tuple

import sympy
from sympy.ntheory import sqrt_mod
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from ..config.settings import settings
from ..utils.errors import DivisionByZeroError, FieldMismatchError, ReducibleError


class Field(ABC):
    """A field of exact scalars"""

    characteristic: int = 0
    base: Optional["Field"] = None

    @abstractmethod
    def convert(self, value: Any) -> "FieldElement":
        """Coerce an int, Fraction or element of a subfield into this field"""

    def __call__(self, value: Any) -> "FieldElement":
        return self.convert(value)

    def zero(self) -> "FieldElement":
        return self.convert(0)

    def one(self) -> "FieldElement":
        return self.convert(1)

    @property
    def prime_field(self) -> "Field":
        field = self
        while field.base is not None:
            field = field.base
        return field

    @property
    def absolute_degree(self) -> int:
        return 1

    @property
    def is_finite(self) -> bool:
        return self.characteristic > 0

    @property
    def order(self) -> Optional[int]:
        if not self.is_finite:
            return None
        return self.characteristic ** self.absolute_degree

    def contains_field(self, other: "Field") -> bool:
        """True when `other` is this field or lies below it in the tower"""
        field: Optional[Field] = self
        while field is not None:
            if field == other:
                return True
            field = field.base
        return False

    def elements(self) -> Iterator["FieldElement"]:
        raise NotImplementedError(f"{self} is not finite")

    def sqrt(self, a: "FieldElement") -> Optional["FieldElement"]:
        """A square root of `a`, or None when `a` is not a square"""
        raise NotImplementedError

    def _finite_sqrt(self, a: "FieldElement") -> Optional["FieldElement"]:
        # Tonelli-Shanks over a finite field of odd order
        if a.is_zero():
            return a
        q = self.order
        one = self.one()
        if a ** ((q - 1) // 2) != one:
            return None
        odd, s = q - 1, 0
        while odd % 2 == 0:
            odd //= 2
            s += 1
        nonresidue = next(z for z in self.elements() if not z.is_zero() and z ** ((q - 1) // 2) != one)
        m, c, t, r = s, nonresidue ** odd, a ** odd, a ** ((odd + 1) // 2)
        while t != one:
            i, t2 = 0, t
            while t2 != one:
                t2 = t2 * t2
                i += 1
            b = c ** (2 ** (m - i - 1))
            m, c, t, r = i, b * b, t * b * b, r * b
        return r


class FieldElement(ABC):
    """Element of a Field; subclasses implement the same-field primitives"""

    __slots__ = ("field",)

    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def _add(self, other: "FieldElement") -> "FieldElement": ...

    @abstractmethod
    def _mul(self, other: "FieldElement") -> "FieldElement": ...

    @abstractmethod
    def _neg(self) -> "FieldElement": ...

    @abstractmethod
    def _inverse(self) -> "FieldElement": ...

    @abstractmethod
    def _key(self) -> Tuple: ...

    @abstractmethod
    def to_json(self) -> Any: ...

    def _operands(self, other: Any) -> Optional[Tuple["FieldElement", "FieldElement"]]:
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return self, other
            if self.field.contains_field(other.field):
                return self, self.field.convert(other)
            if other.field.contains_field(self.field):
                return other.field.convert(self), other
            raise FieldMismatchError(f"Cannot combine elements of {self.field} and {other.field}")
        if isinstance(other, (int, Fraction)):
            return self, self.field.convert(other)
        return None

    def __add__(self, other: Any) -> "FieldElement":
        pair = self._operands(other)
        if pair is None:
            return NotImplemented
        return pair[0]._add(pair[1])

    def __radd__(self, other: Any) -> "FieldElement":
        return self.__add__(other)

    def __sub__(self, other: Any) -> "FieldElement":
        pair = self._operands(other)
        if pair is None:
            return NotImplemented
        return pair[0]._add(pair[1]._neg())

    def __rsub__(self, other: Any) -> "FieldElement":
        pair = self._operands(other)
        if pair is None:
            return NotImplemented
        return pair[1]._add(pair[0]._neg())

    def __mul__(self, other: Any) -> "FieldElement":
        pair = self._operands(other)
        if pair is None:
            return NotImplemented
        return pair[0]._mul(pair[1])

    def __rmul__(self, other: Any) -> "FieldElement":
        return self.__mul__(other)

    def __truediv__(self, other: Any) -> "FieldElement":
        pair = self._operands(other)
        if pair is None:
            return NotImplemented
        return pair[0]._mul(pair[1].inverse())

    def __rtruediv__(self, other: Any) -> "FieldElement":
        pair = self._operands(other)
        if pair is None:
            return NotImplemented
        return pair[1]._mul(pair[0].inverse())

    def __neg__(self) -> "FieldElement":
        return self._neg()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.field.one(), self
        while exponent:
            if exponent & 1:
                result = result._mul(base)
            base = base._mul(base)
            exponent >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZeroError(f"Inverse of zero in {self.field}")
        return self._inverse()

    def __eq__(self, other: Any) -> bool:
        try:
            pair = self._operands(other)
        except FieldMismatchError:
            return False
        if pair is None:
            return NotImplemented
        return pair[0]._key() == pair[1]._key()

    def __ne__(self, other: Any) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        return hash(self._key())

    def p_th_root(self) -> "FieldElement":
        """Inverse of the Frobenius x -> x^p (characteristic p only)"""
        p = self.field.characteristic
        if p == 0:
            raise FieldMismatchError("p-th roots only exist in characteristic p")
        return self ** (p ** (self.field.absolute_degree - 1))

    def sqrt(self) -> Optional["FieldElement"]:
        return self.field.sqrt(self)

    def is_square(self) -> bool:
        return self.field.sqrt(self) is not None


# ---------------------------------------------------------------- rationals


class RationalField(Field):
    """The field Q"""

    characteristic = 0

    def convert(self, value: Any) -> "RationalNumber":
        if isinstance(value, RationalNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return RationalNumber(Fraction(value))
        if isinstance(value, str):
            return RationalNumber(Fraction(value))
        if isinstance(value, FieldElement):
            raise FieldMismatchError(f"Cannot embed {value.field} into Q")
        raise TypeError(f"Cannot convert {value!r} to a rational")

    def sqrt(self, a: "RationalNumber") -> Optional["RationalNumber"]:
        value = a.value
        if value < 0:
            return None
        num, den = isqrt(value.numerator), isqrt(value.denominator)
        if num * num != value.numerator or den * den != value.denominator:
            return None
        return RationalNumber(Fraction(num, den))

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


class RationalNumber(FieldElement):
    """Exact rational; gcd(numerator, denominator) = 1 and denominator > 0 by Fraction"""

    __slots__ = ("value",)

    def __init__(self, value: Fraction):
        self.field = QQ
        self.value = value

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def is_zero(self) -> bool:
        return self.value == 0

    def _add(self, other: "RationalNumber") -> "RationalNumber":
        return RationalNumber(self.value + other.value)

    def _mul(self, other: "RationalNumber") -> "RationalNumber":
        return RationalNumber(self.value * other.value)

    def _neg(self) -> "RationalNumber":
        return RationalNumber(-self.value)

    def _inverse(self) -> "RationalNumber":
        return RationalNumber(1 / self.value)

    def _key(self) -> Tuple:
        return (self.value,)

    def __hash__(self) -> int:
        return hash(self.value)

    def to_json(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return str(self.value)


QQ = RationalField()


# ---------------------------------------------------------------- prime fields


class PrimeField(Field):
    """The field F_p"""

    def __init__(self, p: int):
        if p < 2 or not sympy.isprime(p):
            raise ValueError(f"Modulus {p} is not prime")
        self.characteristic = p
        self.p = p

    def convert(self, value: Any) -> "PrimeFieldElement":
        if isinstance(value, PrimeFieldElement):
            if value.field != self:
                raise FieldMismatchError(f"Element of {value.field} used in {self}")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value % self.p, self)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZeroError(f"Denominator of {value} vanishes mod {self.p}")
            return PrimeFieldElement(value.numerator * pow(value.denominator, -1, self.p) % self.p, self)
        if isinstance(value, FieldElement):
            raise FieldMismatchError(f"Cannot embed {value.field} into {self}")
        raise TypeError(f"Cannot convert {value!r} to F_{self.p}")

    def elements(self) -> Iterator["PrimeFieldElement"]:
        for value in range(self.p):
            yield PrimeFieldElement(value, self)

    def sqrt(self, a: "PrimeFieldElement") -> Optional["PrimeFieldElement"]:
        if a.value == 0:
            return a
        if self.p == 2:
            return a
        roots = sqrt_mod(a.value, self.p, all_roots=True)
        if not roots:
            return None
        return PrimeFieldElement(min(roots), self)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


class PrimeFieldElement(FieldElement):
    """Residue class value mod p with 0 <= value < p"""

    __slots__ = ("value",)

    def __init__(self, value: int, field: PrimeField):
        self.field = field
        self.value = value

    @property
    def modulus(self) -> int:
        return self.field.p

    def is_zero(self) -> bool:
        return self.value == 0

    def _add(self, other: "PrimeFieldElement") -> "PrimeFieldElement":
        return PrimeFieldElement((self.value + other.value) % self.field.p, self.field)

    def _mul(self, other: "PrimeFieldElement") -> "PrimeFieldElement":
        return PrimeFieldElement(self.value * other.value % self.field.p, self.field)

    def _neg(self) -> "PrimeFieldElement":
        return PrimeFieldElement(-self.value % self.field.p, self.field)

    def _inverse(self) -> "PrimeFieldElement":
        return PrimeFieldElement(pow(self.value, -1, self.field.p), self.field)

    def _key(self) -> Tuple:
        return (self.field.p, self.value)

    def p_th_root(self) -> "PrimeFieldElement":
        return self

    def to_json(self) -> int:
        return self.value

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return str(self.value)


# ---------------------------------------------------------------- extensions


class ExtensionField(Field):
    """base[z]/(m(z)) for a monic irreducible m; towers are allowed"""

    def __init__(self, base: Field, modulus: Sequence[Any], name: str = "z"):
        coefficients = tuple(base.convert(c) for c in modulus)
        while len(coefficients) > 1 and coefficients[-1].is_zero():
            coefficients = coefficients[:-1]
        if len(coefficients) < 2:
            raise ValueError("Minimal polynomial must have positive degree")
        if coefficients[-1] != base.one():
            raise ValueError("Minimal polynomial must be monic")

        self.base = base
        self.modulus = coefficients
        self.degree = len(coefficients) - 1
        self.name = name
        self.characteristic = base.characteristic

        if self.absolute_degree > settings.MAX_EXTENSION_DEGREE:
            raise ValueError(
                f"Extension of absolute degree {self.absolute_degree} exceeds cap {settings.MAX_EXTENSION_DEGREE}"
            )
        if not _is_irreducible(base, coefficients):
            raise ReducibleError(f"Minimal polynomial {self._modulus_str()} is reducible over {base}")

    @property
    def absolute_degree(self) -> int:
        return self.degree * self.base.absolute_degree

    @property
    def generator(self) -> "ExtensionFieldElement":
        coefficients = [self.base.zero()] * self.degree
        if self.degree > 1:
            coefficients[1] = self.base.one()
            return ExtensionFieldElement(tuple(coefficients), self)
        return self.convert(-self.modulus[0])

    def convert(self, value: Any) -> "ExtensionFieldElement":
        if isinstance(value, ExtensionFieldElement) and value.field == self:
            return value
        if isinstance(value, FieldElement) and not self.base.contains_field(value.field):
            raise FieldMismatchError(f"Cannot embed {value.field} into {self}")
        constant = self.base.convert(value)
        return ExtensionFieldElement((constant,) + (self.base.zero(),) * (self.degree - 1), self)

    def from_coefficients(self, coefficients: Sequence[Any]) -> "ExtensionFieldElement":
        """Element Σ c_i z^i, reducing modulo the minimal polynomial"""
        return ExtensionFieldElement(self._reduce([self.base.convert(c) for c in coefficients]), self)

    def _reduce(self, coefficients: List[FieldElement]) -> Tuple[FieldElement, ...]:
        coefficients = list(coefficients)
        for top in range(len(coefficients) - 1, self.degree - 1, -1):
            lead = coefficients[top]
            if lead.is_zero():
                continue
            shift = top - self.degree
            for i, m in enumerate(self.modulus):
                coefficients[shift + i] = coefficients[shift + i] - lead * m
        coefficients = coefficients[: self.degree]
        coefficients += [self.base.zero()] * (self.degree - len(coefficients))
        return tuple(coefficients)

    def elements(self) -> Iterator["ExtensionFieldElement"]:
        if not self.is_finite:
            raise NotImplementedError(f"{self} is not finite")
        base_elements = list(self.base.elements())

        def rec(prefix: Tuple, remaining: int) -> Iterator[Tuple]:
            if remaining == 0:
                yield prefix
                return
            for c in base_elements:
                yield from rec(prefix + (c,), remaining - 1)

        for coefficients in rec((), self.degree):
            yield ExtensionFieldElement(coefficients, self)

    def relative_trace(self, a: "ExtensionFieldElement") -> FieldElement:
        """Trace of multiplication by a, as an element of the base field"""
        total = self.base.zero()
        power = self.one()
        z = self.generator
        for i in range(self.degree):
            total = total + (a * power).coefficients[i]
            power = power * z
        return total

    def sqrt(self, a: "ExtensionFieldElement") -> Optional["ExtensionFieldElement"]:
        if self.is_finite:
            return self._finite_sqrt(a)
        from .factoring import number_field_sqrt

        return number_field_sqrt(a)

    def _modulus_str(self) -> str:
        return " + ".join(f"({c})*{self.name}^{i}" for i, c in enumerate(self.modulus) if not c.is_zero())

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("EXT", self.base, self.modulus))

    def __repr__(self) -> str:
        return f"{self.base}[{self.name}]/({self._modulus_str()})"


class ExtensionFieldElement(FieldElement):
    """Element Σ coefficients[i] z^i with deg < deg(minimal polynomial)"""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Tuple[FieldElement, ...], field: ExtensionField):
        self.field = field
        self.coefficients = coefficients

    @property
    def minimal_polynomial(self) -> Tuple[FieldElement, ...]:
        return self.field.modulus

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def _add(self, other: "ExtensionFieldElement") -> "ExtensionFieldElement":
        return ExtensionFieldElement(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.field)

    def _mul(self, other: "ExtensionFieldElement") -> "ExtensionFieldElement":
        zero = self.field.base.zero()
        product = [zero] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coefficients):
                if not b.is_zero():
                    product[i + j] = product[i + j] + a * b
        return ExtensionFieldElement(self.field._reduce(product), self.field)

    def _neg(self) -> "ExtensionFieldElement":
        return ExtensionFieldElement(tuple(-c for c in self.coefficients), self.field)

    def _inverse(self) -> "ExtensionFieldElement":
        from .polynomials import Polynomial

        base = self.field.base
        a = Polynomial(self.coefficients, base)
        m = Polynomial(self.field.modulus, base)
        g, s, _ = a.xgcd(m)
        # g is a nonzero constant since m is irreducible
        return self.field.from_coefficients((s * g.coefficient(0).inverse()).coefficients)

    def _key(self) -> Tuple:
        return tuple(c._key() for c in self.coefficients)

    def to_json(self) -> List[Any]:
        return [c.to_json() for c in self.coefficients]

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            monomial = "" if i == 0 else (self.field.name if i == 1 else f"{self.field.name}^{i}")
            if not monomial:
                terms.append(f"{c}")
            elif c == self.field.base.one():
                terms.append(monomial)
            else:
                terms.append(f"({c})*{monomial}")
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------- helpers


def trace_to_base(a: FieldElement) -> FieldElement:
    """Trace of `a` down to the prime field (Q or F_p)"""
    while isinstance(a, ExtensionFieldElement):
        a = a.field.relative_trace(a)
    return a


def _is_irreducible(base: Field, coefficients: Tuple[FieldElement, ...]) -> bool:
    degree = len(coefficients) - 1
    if degree == 1:
        return True
    if isinstance(base, RationalField):
        z = sympy.Symbol("z")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * z**i for i, c in enumerate(coefficients))
        return sympy.Poly(expr, z, domain=sympy.QQ).is_irreducible
    if isinstance(base, PrimeField):
        return gf_irreducible_p([int(c) for c in reversed(coefficients)], base.p, ZZ)
    # towers: only degrees 2 and 3, where irreducible means no root
    if degree == 2 and base.characteristic != 2:
        c0, c1 = coefficients[0], coefficients[1]
        discriminant = c1 * c1 - c0 * 4
        return not discriminant.is_square()
    if degree == 3 and base.is_finite:
        for r in base.elements():
            if (coefficients[0] + r * (coefficients[1] + r * (coefficients[2] + r))).is_zero():
                return False
        return True
    raise NotImplementedError(f"Irreducibility of degree {degree} over {base} is not supported")
