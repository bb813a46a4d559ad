"""
Closed points of the curve, their residue fields, uniformizers and valuations,
and the reduced chains (gen), (x), (gen, x) indexing adelic components
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, List, Optional, Union

import numpy as np
from loguru import logger

from ..algebra.factoring import factor, is_irreducible
from ..algebra.fields import ExtensionField, Field, FieldElement
from ..algebra.polynomials import Polynomial, RationalFunction
from ..config.settings import settings
from ..utils.errors import InvalidSpecError, ReducibleError
from .function_field import FunctionFieldElement
from .model import CurveModel

AT_INFINITY = "inf"

Center = Union[Polynomial, str]


class Branch(str, Enum):
    UNBRANCHED = "unbranched"  # places of the projective line
    SPLIT = "split"
    RAMIFIED = "ramified"
    INERT = "inert"


@dataclass(frozen=True, eq=False)
class Place:
    """
    A closed point of the curve

    `theta` is the class of x in the residue field of the centre and `root`
    the value of y at the place (None on the projective line, at infinity and
    at ramified places, where y vanishes or has a pole).
    """

    curve: CurveModel
    id: str
    center: Optional[Polynomial]
    branch: Branch
    residue_degree: int
    ramification_index: int
    residue_field: Field
    theta: Optional[FieldElement]
    root: Optional[FieldElement]
    uniformizer: FunctionFieldElement

    @property
    def is_at_infinity(self) -> bool:
        return self.center is None

    @property
    def is_rational(self) -> bool:
        return self.residue_degree == 1

    @property
    def center_field(self) -> Field:
        """Residue field of the point of the projective line below this place"""
        if self.branch == Branch.INERT:
            return self.residue_field.base
        return self.residue_field

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Place) and other.id == self.id and other.curve == self.curve

    def __hash__(self) -> int:
        return hash(self.id)

    def __repr__(self) -> str:
        return f"Place({self.id}, {self.branch.value}, deg {self.residue_degree})"


class ChainKind(str, Enum):
    GEN = "gen"
    POINT = "point"
    GEN_POINT = "gen_point"


@dataclass(frozen=True)
class Chain:
    kind: ChainKind
    place: Optional[Place] = None

    def __post_init__(self):
        if (self.kind == ChainKind.GEN) != (self.place is None):
            raise ValueError("Only the generic chain has no place")

    @classmethod
    def gen(cls) -> "Chain":
        return cls(ChainKind.GEN)

    @classmethod
    def point(cls, place: Place) -> "Chain":
        return cls(ChainKind.POINT, place)

    @classmethod
    def gen_point(cls, place: Place) -> "Chain":
        return cls(ChainKind.GEN_POINT, place)

    @property
    def length(self) -> int:
        return 1 if self.kind == ChainKind.GEN_POINT else 0

    def __repr__(self) -> str:
        if self.kind == ChainKind.GEN:
            return "(gen)"
        if self.kind == ChainKind.POINT:
            return f"({self.place.id})"
        return f"(gen,{self.place.id})"


# ---------------------------------------------------------------- enumeration


def _center_label(center: Polynomial) -> str:
    return repr(center).replace(" ", "")


def _residue_field_of_center(center: Polynomial) -> tuple:
    """(K, theta) with K = k[x]/(center) and theta the class of x"""
    field = center.field
    if center.degree == 1:
        return field, -center.coefficient(0)
    if center.degree > settings.MAX_EXTENSION_DEGREE:
        raise InvalidSpecError(f"Centre {center} exceeds the extension degree cap")
    residue_field = ExtensionField(field, center.coefficients, name="z")
    return residue_field, residue_field.generator


def places_over(curve: CurveModel, center: Center) -> List[Place]:
    """All places of k(X) above the place `center` of k(x), in a fixed order"""
    field = curve.field
    x = FunctionFieldElement.x(curve)

    if center == AT_INFINITY:
        if not curve.is_hyperelliptic:
            uniformizer = FunctionFieldElement(curve, RationalFunction.x(field).inverse())
            return [Place(curve, AT_INFINITY, None, Branch.UNBRANCHED, 1, 1, field, None, None, uniformizer)]
        g = curve.genus
        uniformizer = x**g / FunctionFieldElement.y(curve)
        return [Place(curve, AT_INFINITY, None, Branch.RAMIFIED, 1, 2, field, None, None, uniformizer)]

    if not isinstance(center, Polynomial) or center.field != field:
        raise InvalidSpecError(f"Centre must be a polynomial over {field} or {AT_INFINITY!r}")
    if center.leading != field.one() or not is_irreducible(center):
        raise ReducibleError(f"Centre {center} is not monic irreducible", {"center": center.to_json()})

    residue_field, theta = _residue_field_of_center(center)
    label = _center_label(center)
    uniformizer = FunctionFieldElement(curve, center)

    if not curve.is_hyperelliptic:
        return [Place(curve, label, center, Branch.UNBRANCHED, center.degree, 1, residue_field, theta, None, uniformizer)]

    f_theta = curve.f(theta)
    if f_theta.is_zero():
        logger.debug(f"Place over {label} is ramified")
        return [
            Place(
                curve, label, center, Branch.RAMIFIED, center.degree, 2,
                residue_field, theta, None, FunctionFieldElement.y(curve),
            )
        ]

    root = residue_field.sqrt(f_theta)
    if root is not None:
        logger.debug(f"Places over {label} split with y = +-{root}")
        return [
            Place(curve, f"{label}#{i}", center, Branch.SPLIT, center.degree, 1, residue_field, theta, r, uniformizer)
            for i, r in enumerate((root, -root))
        ]

    quadratic = ExtensionField(residue_field, [-f_theta, 0, 1], name="w")
    logger.debug(f"Place over {label} is inert")
    return [
        Place(
            curve, label, center, Branch.INERT, 2 * center.degree, 1,
            quadratic, quadratic.convert(theta), quadratic.generator, uniformizer,
        )
    ]


def infinite_place(curve: CurveModel) -> Place:
    return places_over(curve, AT_INFINITY)[0]


def ramified_places(curve: CurveModel) -> List[Place]:
    """Finite places where y vanishes: one above each irreducible factor of f"""
    if not curve.is_hyperelliptic:
        return []
    return [place for pi, _ in factor(curve.f) for place in places_over(curve, pi)]


def rational_places(curve: CurveModel) -> List[Place]:
    """Every degree-one place over a finite base field, infinity last"""
    field = curve.field
    if not field.is_finite:
        raise InvalidSpecError("Rational places can only be listed over a finite field")
    places: List[Place] = []
    for c in field.elements():
        for place in places_over(curve, Polynomial([-c, 1], field)):
            if place.is_rational:
                places.append(place)
    places.append(infinite_place(curve))
    return places


def random_rational_places(curve: CurveModel, n: int, rng: np.random.Generator) -> List[Place]:
    """n distinct finite places of degree one, drawn with `rng`"""
    field = curve.field
    if field.is_finite:
        pool = [place for place in rational_places(curve) if not place.is_at_infinity]
        if n > len(pool):
            raise InvalidSpecError(f"Only {len(pool)} rational places are available")
        picked = rng.choice(len(pool), size=n, replace=False)
        return [pool[int(i)] for i in sorted(picked)]

    places: List[Place] = []
    seen = set()
    while len(places) < n:
        if len(seen) == 41:
            raise InvalidSpecError(f"Fewer than {n} rational places with |x| <= 20")
        c = int(rng.integers(-20, 21))
        if c in seen:
            continue
        seen.add(c)
        for place in places_over(curve, Polynomial([-c, 1], field)):
            if place.is_rational and len(places) < n:
                places.append(place)
    return places


# ---------------------------------------------------------------- valuations


def _rational_valuation(h: RationalFunction, place: Place) -> int:
    if place.is_at_infinity:
        return h.valuation_at_infinity()
    return h.valuation_at(place.center)


def _valuation_of_y(place: Place) -> int:
    if place.is_at_infinity:
        return -place.curve.f.degree
    return 1 if place.branch == Branch.RAMIFIED else 0


def order_at(g: Any, place: Place) -> Union[int, float]:
    """Normalized discrete valuation; math.inf for zero"""
    curve = place.curve
    if not isinstance(g, FunctionFieldElement):
        g = FunctionFieldElement(curve, g)
    if g.is_zero():
        return math.inf

    e = place.ramification_index
    if g.b.is_zero():
        return e * _rational_valuation(g.a, place)
    if g.a.is_zero():
        return e * _rational_valuation(g.b, place) + _valuation_of_y(place)

    if place.branch != Branch.SPLIT:
        # the place is the only one above its centre, so N(g) = g * conj(g) has twice its order
        return e * _rational_valuation(g.norm(), place) // 2

    va = _rational_valuation(g.a, place)
    vb = _rational_valuation(g.b, place)
    if va != vb:
        return min(va, vb)
    upper = _rational_valuation(g.norm(), place) - va
    from ..local.expansion import expand

    series = expand(g, place, upper + 1)
    valuation = series.valuation()
    return valuation if valuation is not None else upper


def ramification_index(place: Place) -> int:
    return place.ramification_index


def candidate_places(curve: CurveModel, elements: Iterable[Any]) -> List[Place]:
    """
    Places where one of `elements` may have a pole: the places above the
    factors of every denominator, plus the place(s) at infinity
    """
    centers: List[Polynomial] = []
    for element in elements:
        for h in _rational_parts(curve, element):
            for pi, _ in factor(h.den):
                if pi not in centers:
                    centers.append(pi)
    centers.sort(key=lambda pi: (pi.degree, _center_label(pi)))

    places: List[Place] = []
    for pi in centers:
        places.extend(places_over(curve, pi))
    places.extend(places_over(curve, AT_INFINITY))
    return places


def _rational_parts(curve: CurveModel, element: Any) -> List[RationalFunction]:
    if isinstance(element, FunctionFieldElement):
        return [element.a, element.b]
    if isinstance(element, (RationalFunction, Polynomial)):
        return [RationalFunction.coerce(element, curve.field)]
    coefficient = getattr(element, "coefficient", None)
    if isinstance(coefficient, FunctionFieldElement):
        # differentials g dx
        return [coefficient.a, coefficient.b]
    return [RationalFunction.coerce(element, curve.field)]
