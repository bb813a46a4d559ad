"""
Length-2 Witt vectors over F_p, i.e. Z/p^2 written in base-p digits

(a0, a1) stands for a0 + p*a1 with 0 <= a0, a1 < p. The reduction
(a0, a1) -> a0 is the ring map onto F_p and p*W2 = {(0, a1)}.
"""
from typing import Any, List, Sequence, Tuple

from .fields import PrimeField, PrimeFieldElement
from .polynomials import Polynomial
from ..utils.errors import ModulusMismatchError


class WittLength2:
    __slots__ = ("a0", "a1", "field")

    def __init__(self, a0: Any, a1: Any, field: PrimeField):
        self.field = field
        self.a0: PrimeFieldElement = field.convert(a0)
        self.a1: PrimeFieldElement = field.convert(a1)

    @property
    def p(self) -> int:
        return self.field.p

    @classmethod
    def from_integer(cls, n: int, field: PrimeField) -> "WittLength2":
        n %= field.p**2
        return cls(n % field.p, n // field.p, field)

    def to_integer(self) -> int:
        return self.a0.value + self.p * self.a1.value

    def _check(self, other: "WittLength2") -> None:
        if not isinstance(other, WittLength2) or other.p != self.p:
            raise ModulusMismatchError(f"W2(F_{self.p}) combined with {other!r}")

    def __add__(self, other: "WittLength2") -> "WittLength2":
        self._check(other)
        return WittLength2.from_integer(self.to_integer() + other.to_integer(), self.field)

    def __sub__(self, other: "WittLength2") -> "WittLength2":
        self._check(other)
        return WittLength2.from_integer(self.to_integer() - other.to_integer(), self.field)

    def __neg__(self) -> "WittLength2":
        return WittLength2.from_integer(-self.to_integer(), self.field)

    def __mul__(self, other: "WittLength2") -> "WittLength2":
        self._check(other)
        return WittLength2.from_integer(self.to_integer() * other.to_integer(), self.field)

    def __pow__(self, exponent: int) -> "WittLength2":
        return WittLength2.from_integer(pow(self.to_integer(), exponent, self.p**2), self.field)

    def reduce(self) -> PrimeFieldElement:
        return self.a0

    def is_zero(self) -> bool:
        return self.to_integer() == 0

    def divide_by_p(self) -> PrimeFieldElement:
        """x/p for x in p*W2"""
        if not self.a0.is_zero():
            raise ValueError(f"{self!r} is not divisible by p")
        return self.a1

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, WittLength2) and other.p == self.p and other.to_integer() == self.to_integer()

    def __hash__(self) -> int:
        return hash((self.p, self.to_integer()))

    def __repr__(self) -> str:
        return f"({self.a0.value}, {self.a1.value})"


class LiftedPolynomial:
    """Polynomial in x with W2(F_p) coefficients, constant term first"""

    __slots__ = ("field", "coefficients")

    def __init__(self, coefficients: Sequence[WittLength2], field: PrimeField):
        coefficients = list(coefficients)
        while coefficients and coefficients[-1].is_zero():
            coefficients.pop()
        self.field = field
        self.coefficients: Tuple[WittLength2, ...] = tuple(coefficients)

    @classmethod
    def lift(cls, poly: Polynomial) -> "LiftedPolynomial":
        """Digit lift: each coefficient c in [0, p) becomes (c, 0)"""
        field = poly.field
        return cls([WittLength2(c, 0, field) for c in poly.coefficients], field)

    def _coefficient(self, i: int) -> WittLength2:
        if i < len(self.coefficients):
            return self.coefficients[i]
        return WittLength2(0, 0, self.field)

    def __add__(self, other: "LiftedPolynomial") -> "LiftedPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return LiftedPolynomial([self._coefficient(i) + other._coefficient(i) for i in range(n)], self.field)

    def __sub__(self, other: "LiftedPolynomial") -> "LiftedPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return LiftedPolynomial([self._coefficient(i) - other._coefficient(i) for i in range(n)], self.field)

    def __mul__(self, other: "LiftedPolynomial") -> "LiftedPolynomial":
        if not self.coefficients or not other.coefficients:
            return LiftedPolynomial([], self.field)
        product: List[WittLength2] = [WittLength2(0, 0, self.field)] * (
            len(self.coefficients) + len(other.coefficients) - 1
        )
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] = product[i + j] + a * b
        return LiftedPolynomial(product, self.field)

    def __pow__(self, exponent: int) -> "LiftedPolynomial":
        result = LiftedPolynomial([WittLength2(1, 0, self.field)], self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def substitute_power(self, n: int) -> "LiftedPolynomial":
        """g(x^n)"""
        coefficients = [WittLength2(0, 0, self.field)] * (n * max(len(self.coefficients) - 1, 0) + 1)
        for i, c in enumerate(self.coefficients):
            coefficients[n * i] = c
        return LiftedPolynomial(coefficients, self.field)

    def reduce(self) -> Polynomial:
        return Polynomial([c.reduce() for c in self.coefficients], self.field)

    def divide_by_p(self) -> Polynomial:
        return Polynomial([c.divide_by_p() for c in self.coefficients], self.field)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, LiftedPolynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return " + ".join(f"{c}*x^{i}" for i, c in enumerate(self.coefficients) if not c.is_zero()) or "0"
