"""
Seeded random objects for property checks: scalars, polynomials, function
field elements, differentials, closed (0, 1) adeles and lift perturbations
"""
from fractions import Fraction
from typing import Any, List, Optional

import numpy as np

from ..adeles.adele import Adele
from ..algebra.fields import ExtensionField, Field, FieldElement, PrimeField
from ..algebra.polynomials import Polynomial, RationalFunction
from ..config.settings import settings
from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..curves.places import random_rational_places
from ..derham.differentials import RationalDifferential, canonical_basis
from ..local.laurent import LaurentSeries


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)


def random_scalar(field: Field, rng: np.random.Generator, nonzero: bool = False) -> FieldElement:
    while True:
        if isinstance(field, PrimeField):
            value = field.convert(int(rng.integers(0, field.p)))
        elif isinstance(field, ExtensionField):
            value = field.from_coefficients([random_scalar(field.base, rng) for _ in range(field.degree)])
        else:
            value = field.convert(Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 4))))
        if not (nonzero and value.is_zero()):
            return value


def random_polynomial(field: Field, degree: int, rng: np.random.Generator, monic: bool = False) -> Polynomial:
    coefficients: List[Any] = [random_scalar(field, rng) for _ in range(degree)]
    coefficients.append(field.one() if monic else random_scalar(field, rng, nonzero=True))
    return Polynomial(coefficients, field)


def random_rational_function(
    field: Field, rng: np.random.Generator, num_degree: int = 2, den_degree: int = 1
) -> RationalFunction:
    num = random_polynomial(field, int(rng.integers(0, num_degree + 1)), rng)
    den = random_polynomial(field, int(rng.integers(0, den_degree + 1)), rng, monic=True)
    return RationalFunction(num, den)


def random_element(curve: CurveModel, rng: np.random.Generator) -> FunctionFieldElement:
    """a + b*y with small random a, b (b = 0 on the projective line)"""
    a = random_rational_function(curve.field, rng)
    if not curve.is_hyperelliptic:
        return FunctionFieldElement(curve, a)
    return FunctionFieldElement(curve, a, random_rational_function(curve.field, rng, num_degree=1))


def random_nonzero_element(curve: CurveModel, rng: np.random.Generator) -> FunctionFieldElement:
    while True:
        g = random_element(curve, rng)
        if not g.is_zero():
            return g


def random_differential(curve: CurveModel, rng: np.random.Generator) -> RationalDifferential:
    return RationalDifferential.of(curve, random_element(curve, rng))


def random_second_kind(curve: CurveModel, rng: np.random.Generator) -> RationalDifferential:
    """Random combination of the basis x^i dx/y plus an exact form"""
    omega = RationalDifferential.exact(random_element(curve, rng))
    for basis in canonical_basis(curve):
        omega = omega + basis * random_scalar(curve.field, rng)
    return omega


def random_closed_01(curve: CurveModel, rng: np.random.Generator, n_places: int = 3, precision: Optional[int] = None) -> Adele:
    """
    Closed adele of bidegree (0, 1): a constant default and constant
    components at `n_places` random rational places
    """
    precision = settings.WORKING_PRECISION if precision is None else precision
    field = curve.field
    exceptions = {}
    for place in random_rational_places(curve, n_places, rng):
        exceptions[place.id] = LaurentSeries.constant(random_scalar(field, rng), place.residue_field, precision, place)
    default = FunctionFieldElement(curve, random_scalar(field, rng))
    return Adele(curve, (0, 1), default=default, exceptions=exceptions)


def random_perturbation(field: PrimeField, rng: np.random.Generator, degree: int = 2) -> Polynomial:
    """Polynomial delta for a Frobenius lift x -> x^p + p*delta"""
    return Polynomial([random_scalar(field, rng) for _ in range(degree + 1)], field)
