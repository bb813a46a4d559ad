"""
Reduction of second-kind differentials to the basis x^i dx/y of H^1_dR

omega = a dx + c dx/y is split into its part invariant under y -> -y and
the anti-invariant part. Poles are removed one order at a time by
subtracting exact forms d(s/pi^k) and d(r y), where

    d(r y) = (r' f + r f'/2) dx/y,

and the polynomial part of c is lowered to degree < 2g with d(x^k y).
Every subtracted primitive is accumulated into a witness W with

    omega - Σ c_i x^i dx/y = dW,

which is checked exactly before the class is returned.
"""
from dataclasses import dataclass
from typing import Any, List, Tuple

from loguru import logger

from ..algebra.factoring import factor
from ..algebra.fields import FieldElement
from ..algebra.polynomials import Polynomial, RationalFunction
from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..utils.errors import CharPObstructionError, NotSecondKindError, VerificationError
from .differentials import RationalDifferential, canonical_basis


@dataclass(frozen=True)
class DeRhamClass:
    """Coordinates in the basis x^i dx/y, 0 <= i < 2g"""

    curve: CurveModel
    coordinates: Tuple[FieldElement, ...]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coordinates)

    def __add__(self, other: "DeRhamClass") -> "DeRhamClass":
        return DeRhamClass(self.curve, tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    def representative(self) -> RationalDifferential:
        total = RationalDifferential.of(self.curve, 0)
        for c, basis in zip(self.coordinates, canonical_basis(self.curve)):
            total = total + basis * c
        return total

    def to_json(self) -> List[Any]:
        return [c.to_json() for c in self.coordinates]


@dataclass(frozen=True)
class Reduction:
    de_rham_class: DeRhamClass
    witness: FunctionFieldElement

    @property
    def coordinates(self) -> Tuple[FieldElement, ...]:
        return self.de_rham_class.coordinates


def _invert_integer(n: int, field, what: str) -> FieldElement:
    p = field.characteristic
    if p and n % p == 0:
        raise CharPObstructionError(f"Reduction needs division by {n} in characteristic {p} ({what})", {"divisor": n})
    return field.convert(n).inverse()


def _principal_part(h: RationalFunction, pi: Polynomial, multiplicity: int) -> Polynomial:
    """n mod pi where h = n / (pi^multiplicity D), reduced against D"""
    cofactor = h.den.exact_div(pi**multiplicity)
    return ((h.num % pi) * cofactor.inverse_mod(pi)) % pi


def _highest_pole(h: RationalFunction) -> Tuple[Polynomial, int]:
    factors = factor(h.den)
    return max(factors, key=lambda item: item[1])


def _integrate_invariant(a: RationalFunction) -> RationalFunction:
    """A with A' = a; raises NotSecondKindError on a simple pole"""
    field = a.field
    primitive = RationalFunction.constant(0, field)
    while a.den.degree > 0:
        pi, m = _highest_pole(a)
        if m == 1:
            raise NotSecondKindError(f"a dx has a simple pole at {pi}", {"center": pi.to_json()})
        n = _principal_part(a, pi, m)
        s = (-n * _invert_integer(m - 1, field, "pole order") * pi.derivative().inverse_mod(pi)) % pi
        step = RationalFunction(s, pi ** (m - 1))
        logger.debug(f"Invariant part: removing order {m} pole at {pi}")
        a = a - step.derivative()
        primitive = primitive + step

    polynomial = a.num
    for n, coefficient in enumerate(polynomial.coefficients):
        if not coefficient.is_zero():
            primitive = primitive + Polynomial.monomial(coefficient * _invert_integer(n + 1, field, "x^n dx"), n + 1, field)
    return primitive


def _anti_invariant_operator(r: RationalFunction, f: RationalFunction) -> RationalFunction:
    """r' f + r f'/2, so that d(r y) = L(r) dx/y"""
    return r.derivative() * f + r * f.derivative() / 2


def _reduce_anti_invariant(c: RationalFunction, curve: CurveModel) -> Tuple[Polynomial, RationalFunction]:
    """(remainder of degree < 2g, r) with c = remainder + L(r)"""
    field = curve.field
    f_poly = curve.f
    f = RationalFunction.coerce(f_poly, field)
    g = curve.genus
    primitive = RationalFunction.constant(0, field)

    while c.den.degree > 0:
        pi, m = _highest_pole(c)
        n = _principal_part(c, pi, m)
        derivative_inverse = pi.derivative().inverse_mod(pi)
        if (f_poly % pi).is_zero():
            cofactor = f_poly.exact_div(pi)
            k = m
            scale = -_invert_integer(2 * m - 1, field, "Weierstrass pole") * 2
            s = (n * scale * derivative_inverse * cofactor.inverse_mod(pi)) % pi
        else:
            if m == 1:
                raise NotSecondKindError(f"c dx/y has a simple pole at {pi}", {"center": pi.to_json()})
            k = m - 1
            scale = -_invert_integer(m - 1, field, "pole order")
            s = (n * scale * derivative_inverse * f_poly.inverse_mod(pi)) % pi
        step = RationalFunction(s, pi**k)
        logger.debug(f"Anti-invariant part: removing order {m} pole at {pi}")
        c = c - _anti_invariant_operator(step, f)
        primitive = primitive + step

    remainder = c.num
    lead_f = f_poly.leading
    while remainder.degree >= 2 * g:
        k = remainder.degree - 2 * g
        alpha = remainder.leading * 2 * _invert_integer(2 * k + 2 * g + 1, field, "x^k y") / lead_f
        monomial = RationalFunction.coerce(Polynomial.monomial(alpha, k, field), field)
        remainder = remainder - _anti_invariant_operator(monomial, f).num
        primitive = primitive + monomial
    return remainder, primitive


def reduce_with_witness(omega: RationalDifferential) -> Reduction:
    """Class of a second-kind differential together with the primitive of the difference"""
    curve = omega.curve
    field = curve.field
    g = omega.coefficient

    witness_a = _integrate_invariant(g.a) if not g.a.is_zero() else RationalFunction.constant(0, field)
    if curve.is_hyperelliptic and not g.b.is_zero():
        c = g.b * curve.f
        remainder, r = _reduce_anti_invariant(c, curve)
    else:
        remainder, r = Polynomial.zero(field), RationalFunction.constant(0, field)

    coordinates = tuple(remainder.coefficient(i) for i in range(2 * curve.genus))
    de_rham_class = DeRhamClass(curve, coordinates)
    witness = FunctionFieldElement(curve, witness_a, r)

    difference = omega - de_rham_class.representative() - RationalDifferential.exact(witness)
    if not difference.is_zero():
        raise VerificationError(
            "Reduction witness does not account for the difference",
            {"omega": omega.to_json(), "residual": difference.to_json()},
        )
    return Reduction(de_rham_class, witness)


def reduce_to_basis(omega: RationalDifferential) -> DeRhamClass:
    return reduce_with_witness(omega).de_rham_class
