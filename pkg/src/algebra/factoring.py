"""
Factorization over Q and F_p through sympy, and square roots in number fields
"""
from fractions import Fraction
from typing import List, Optional, Tuple

import sympy
from loguru import logger
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from .fields import ExtensionField, ExtensionFieldElement, PrimeField, RationalField
from .polynomials import Polynomial

_X = sympy.Symbol("x")
_Y = sympy.Symbol("Y")


def _to_sympy_rational(c) -> sympy.Rational:
    return sympy.Rational(c.numerator, c.denominator)


def _from_sympy_rational(c) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def to_sympy_expr(poly: Polynomial, symbol: sympy.Symbol = _X) -> sympy.Expr:
    """Polynomial over Q as a sympy expression"""
    return sum((_to_sympy_rational(c) * symbol**i for i, c in enumerate(poly.coefficients)), sympy.Integer(0))


def _sort_key(item: Tuple[Polynomial, int]) -> Tuple:
    poly, multiplicity = item
    return (poly.degree, tuple(str(c.to_json()) for c in poly.coefficients), multiplicity)


def factor(poly: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Monic irreducible factors with multiplicities, in a deterministic order"""
    field = poly.field
    if poly.degree < 1:
        return []

    factors: List[Tuple[Polynomial, int]] = []
    if isinstance(field, RationalField):
        _, sympy_factors = sympy.Poly(to_sympy_expr(poly), _X, domain=sympy.QQ).factor_list()
        for sympy_factor, multiplicity in sympy_factors:
            coefficients = [_from_sympy_rational(c) for c in reversed(sympy_factor.all_coeffs())]
            factors.append((Polynomial(coefficients, field).monic(), multiplicity))
    elif isinstance(field, PrimeField):
        _, gf_factors = gf_factor([int(c) for c in reversed(poly.coefficients)], field.p, ZZ)
        for coefficients, multiplicity in gf_factors:
            factors.append((Polynomial([int(c) for c in reversed(coefficients)], field).monic(), multiplicity))
    else:
        raise NotImplementedError(f"Factorization over {field} is not supported")

    factors.sort(key=_sort_key)
    return factors


def is_irreducible(poly: Polynomial) -> bool:
    if poly.degree < 1:
        return False
    factors = factor(poly)
    return len(factors) == 1 and factors[0][1] == 1


def number_field_sqrt(a: ExtensionFieldElement) -> Optional[ExtensionFieldElement]:
    """
    Square root in K = Q[z]/(m) via the norm of (Y - s z)^2 - a

    Irreducible factors of a squarefree norm over Q correspond to the
    irreducible factors of (Y - s z)^2 - a over K; a linear one gives the root.
    """
    field: ExtensionField = a.field
    if not isinstance(field.base, RationalField):
        raise NotImplementedError("Square roots are only implemented in simple extensions of Q")
    if a.is_zero():
        return a

    z = field.generator
    modulus_expr = sum(
        (_to_sympy_rational(c) * _X**i for i, c in enumerate(field.modulus)), sympy.Integer(0)
    )
    a_expr = sum((_to_sympy_rational(c) * _X**i for i, c in enumerate(a.coefficients)), sympy.Integer(0))

    for shift in range(8):
        norm = sympy.resultant(modulus_expr, sympy.expand((_Y - shift * _X) ** 2 - a_expr), _X)
        norm_poly = sympy.Poly(norm, _Y, domain=sympy.QQ)
        if not norm_poly.is_sqf:
            logger.debug(f"Norm not squarefree for shift {shift}; retrying")
            continue

        shifted = Polynomial([z * z * shift * shift - a, -z * (2 * shift), 1], field)
        _, norm_factors = norm_poly.factor_list()
        for norm_factor, _ in norm_factors:
            if norm_factor.degree() != field.degree:
                continue
            lifted = Polynomial(
                [field.convert(_from_sympy_rational(c)) for c in reversed(norm_factor.all_coeffs())], field
            )
            common = shifted.gcd(lifted)
            if common.degree == 1:
                root = -common.coefficient(0) - z * shift
                if root * root == a:
                    return root
        return None

    raise NotImplementedError("Could not find a squarefree norm for the square root computation")
