"""
The Cartier operator and its inverse on differentials in characteristic p
"""
from typing import List

from ..algebra.polynomials import Polynomial, RationalFunction
from ..curves.function_field import FunctionFieldElement
from ..utils.errors import UnsupportedCharacteristicError
from .differentials import RationalDifferential


def _require_characteristic_p(omega: RationalDifferential) -> int:
    p = omega.curve.characteristic
    if p == 0:
        raise UnsupportedCharacteristicError("The Cartier operator needs characteristic p")
    return p


def p_power_components(h: RationalFunction, p: int) -> List[RationalFunction]:
    """u_0, ..., u_{p-1} in k(x) with h = Σ u_i^p x^i"""
    field = h.field
    if h.is_zero():
        return [RationalFunction.constant(0, field)] * p
    # h = N D^{p-1} / D^p
    numerator = h.num * h.den ** (p - 1)
    buckets: List[List] = [[] for _ in range(p)]
    for j, c in enumerate(numerator.coefficients):
        i, k = j % p, j // p
        bucket = buckets[i]
        bucket.extend([field.zero()] * (k + 1 - len(bucket)))
        bucket[k] = c.p_th_root()
    return [RationalFunction(Polynomial(bucket, field), h.den) for bucket in buckets]


def _top_component(h: RationalFunction, p: int) -> RationalFunction:
    return p_power_components(h, p)[p - 1]


def cartier(omega: RationalDifferential) -> RationalDifferential:
    """C(g dx) = u_{p-1} dx for g = Σ u_i^p x^i"""
    p = _require_characteristic_p(omega)
    curve = omega.curve
    g = omega.coefficient
    a_part = _top_component(g.a, p)
    if g.b.is_zero():
        return RationalDifferential(FunctionFieldElement(curve, a_part))
    # b y = (b f^{-(p-1)/2}) y^p
    f = RationalFunction.coerce(curve.f, curve.field)
    b_part = _top_component(g.b * f ** (-((p - 1) // 2)), p)
    return RationalDifferential(FunctionFieldElement(curve, a_part, b_part))


def cartier_inverse(omega: RationalDifferential) -> RationalDifferential:
    """C^{-1}(g dx) = g^p x^{p-1} dx"""
    p = _require_characteristic_p(omega)
    x = FunctionFieldElement.x(omega.curve)
    return RationalDifferential(omega.coefficient**p * x ** (p - 1))
