"""
Representable adeles on a curve

An adele of bidegree (p, q) has a component for every reduced chain: (gen)
and (x) when q = 0, (gen, x) when q = 1. Components are functions (p = 0)
or differentials (p = 1). Only eventually rational adeles are stored: a
rational `default` gives the component at every chain not listed in
`exceptions`, which maps place ids to Laurent series. Differential series
are stored as h with omega = h dt.

In bidegree (p, 0) the (x) components are integral. An adele built from
rational data with poles instead lists those places as `punctures`: it
lives on the curve with the punctures removed, and cannot be integrated.
"""
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from ..config.settings import settings
from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..curves.places import Place, candidate_places, order_at
from ..derham.differentials import RationalDifferential, pole_places
from ..local.expansion import expand, expand_differential
from ..local.laurent import LaurentSeries
from ..utils.errors import FieldMismatchError, NotIntegralError

Rational = Union[FunctionFieldElement, RationalDifferential]
Bidegree = Tuple[int, int]


def zero_rational(curve: CurveModel, form_degree: int) -> Rational:
    if form_degree == 0:
        return FunctionFieldElement(curve, 0)
    return RationalDifferential.of(curve, 0)


def expand_rational(element: Rational, place: Place, precision: int) -> LaurentSeries:
    if isinstance(element, RationalDifferential):
        return expand_differential(element, place, precision)
    return expand(element, place, precision)


def d_rational(element: FunctionFieldElement) -> RationalDifferential:
    return RationalDifferential.exact(element)


def rational_poles(element: Rational) -> List[Place]:
    if isinstance(element, RationalDifferential):
        return pole_places(element)
    if element.is_zero():
        return []
    return [place for place in candidate_places(element.curve, [element]) if order_at(element, place) < 0]


def multiply_rational(a: Rational, b: Rational) -> Rational:
    if isinstance(a, RationalDifferential) and isinstance(b, RationalDifferential):
        raise ValueError("Product of two differentials on a curve is zero")
    if isinstance(b, RationalDifferential):
        return b * a
    return a * b


class Adele:
    """Eventually rational adele of bidegree (form_degree, cech_degree)"""

    __slots__ = ("curve", "form_degree", "cech_degree", "generic", "default", "exceptions", "places", "punctures")

    def __init__(
        self,
        curve: CurveModel,
        bidegree: Bidegree,
        default: Optional[Rational] = None,
        exceptions: Optional[Dict[str, LaurentSeries]] = None,
        generic: Optional[Rational] = None,
        punctures: Iterable[str] = (),
        *,
        check: bool = True,
    ):
        form_degree, cech_degree = bidegree
        if form_degree not in (0, 1) or cech_degree not in (0, 1):
            raise ValueError(f"Unsupported bidegree {bidegree}")
        self.curve = curve
        self.form_degree = form_degree
        self.cech_degree = cech_degree
        self.default = default if default is not None else zero_rational(curve, form_degree)
        if cech_degree == 0:
            self.generic = generic if generic is not None else zero_rational(curve, form_degree)
        else:
            if generic is not None:
                raise ValueError("Adeles of Cech degree one have no generic component")
            self.generic = None
        self.exceptions: Dict[str, LaurentSeries] = dict(sorted((exceptions or {}).items()))
        self.places: Dict[str, Place] = {}
        for place_id, series in self.exceptions.items():
            if series.place is None or series.place.id != place_id:
                raise FieldMismatchError(f"Exception series at {place_id} is not tagged with its place")
            self.places[place_id] = series.place
        self.punctures: FrozenSet[str] = frozenset(punctures)
        if check and cech_degree == 0:
            self._check_integral()

    def _check_integral(self) -> None:
        for place_id, series in self.exceptions.items():
            valuation = series.valuation()
            if place_id not in self.punctures and valuation is not None and valuation < 0:
                raise NotIntegralError(
                    f"Component at ({place_id}) has a pole of order {-valuation}",
                    {"place": place_id, "bidegree": list(self.bidegree)},
                )
        for place in rational_poles(self.default):
            if place.id not in self.exceptions and place.id not in self.punctures:
                raise NotIntegralError(
                    f"Default {self.default} has a pole at {place.id} and no component there",
                    {"place": place.id, "bidegree": list(self.bidegree)},
                )

    @property
    def bidegree(self) -> Bidegree:
        return (self.form_degree, self.cech_degree)

    @property
    def total_degree(self) -> int:
        return self.form_degree + self.cech_degree

    def component(self, place: Place, precision: Optional[int] = None) -> LaurentSeries:
        """Component at the chain (x) for q = 0, or (gen, x) for q = 1"""
        if place.id in self.exceptions:
            return self.exceptions[place.id]
        return expand_rational(self.default, place, settings.WORKING_PRECISION if precision is None else precision)

    def generic_at(self, place: Place, precision: Optional[int] = None) -> LaurentSeries:
        """Image of the generic component in the completion at (gen, x)"""
        return expand_rational(self.generic, place, settings.WORKING_PRECISION if precision is None else precision)

    def exception_places(self) -> Iterable[Place]:
        return self.places.values()

    # ------------------------------------------------------------ linear structure

    def _check(self, other: "Adele") -> None:
        if not isinstance(other, Adele) or other.bidegree != self.bidegree or other.curve != self.curve:
            raise FieldMismatchError(f"Cannot combine adeles of bidegree {self.bidegree} and {other!r}")

    def _combine(self, other: "Adele", sign: int) -> "Adele":
        self._check(other)
        exceptions: Dict[str, LaurentSeries] = {}
        places = {**self.places, **other.places}
        for place_id, place in places.items():
            mine = self.exceptions.get(place_id)
            theirs = other.exceptions.get(place_id)
            precision = (mine or theirs).precision
            if mine is None:
                mine = self.component(place, precision)
            if theirs is None:
                theirs = other.component(place, precision)
            exceptions[place_id] = mine + theirs * sign
        generic = None
        if self.cech_degree == 0:
            generic = self.generic + other.generic * sign
        default = self.default + other.default * sign
        punctures = self.punctures | other.punctures
        return Adele(self.curve, self.bidegree, default, exceptions, generic, punctures, check=False)

    def __add__(self, other: "Adele") -> "Adele":
        return self._combine(other, 1)

    def __sub__(self, other: "Adele") -> "Adele":
        return self._combine(other, -1)

    def __neg__(self) -> "Adele":
        return self.scale(-1)

    def scale(self, c: Any) -> "Adele":
        exceptions = {place_id: series * c for place_id, series in self.exceptions.items()}
        generic = self.generic * c if self.generic is not None else None
        return Adele(self.curve, self.bidegree, self.default * c, exceptions, generic, self.punctures, check=False)

    def is_zero(self) -> bool:
        """Zero at every chain, exception series within their precision"""
        if self.generic is not None and not self.generic.is_zero():
            return False
        if not self.default.is_zero():
            return False
        return all(series.is_zero() for series in self.exceptions.values())

    def is_whole(self) -> bool:
        """True when the adele lives on the whole curve"""
        return not self.punctures

    def __repr__(self) -> str:
        return f"Adele{self.bidegree}(default={self.default}, exceptions={list(self.exceptions)})"


class MixedAdele:
    """Element of the total complex: one Adele per bidegree, missing ones are zero"""

    __slots__ = ("curve", "components")

    def __init__(self, curve: CurveModel, components: Optional[Iterable[Adele]] = None):
        self.curve = curve
        self.components: Dict[Bidegree, Adele] = {}
        for adele in components or ():
            if adele.bidegree in self.components:
                self.components[adele.bidegree] = self.components[adele.bidegree] + adele
            else:
                self.components[adele.bidegree] = adele

    def __getitem__(self, bidegree: Bidegree) -> Adele:
        if bidegree in self.components:
            return self.components[bidegree]
        return Adele(self.curve, bidegree)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({adele.total_degree for adele in self.components.values()}))

    def is_homogeneous(self, degree: int) -> bool:
        return all(adele.total_degree == degree for adele in self.components.values())

    def _combine(self, other: "MixedAdele", sign: int) -> "MixedAdele":
        if not isinstance(other, MixedAdele):
            return NotImplemented
        keys = sorted(set(self.components) | set(other.components))
        return MixedAdele(self.curve, [self[k] + other[k].scale(sign) for k in keys])

    def __add__(self, other: "MixedAdele") -> "MixedAdele":
        return self._combine(other, 1)

    def __sub__(self, other: "MixedAdele") -> "MixedAdele":
        return self._combine(other, -1)

    def __neg__(self) -> "MixedAdele":
        return self.scale(-1)

    def scale(self, c: Any) -> "MixedAdele":
        return MixedAdele(self.curve, [adele.scale(c) for adele in self.components.values()])

    def is_zero(self) -> bool:
        return all(adele.is_zero() for adele in self.components.values())

    def __repr__(self) -> str:
        return f"MixedAdele({list(self.components.values())})"


# ---------------------------------------------------------------- constructors


def rational_adele(element: Rational) -> Adele:
    """Diagonal image of a rational function or differential in bidegree (p, 0)"""
    form_degree = 1 if isinstance(element, RationalDifferential) else 0
    punctures = [place.id for place in rational_poles(element)]
    return Adele(element.curve, (form_degree, 0), default=element, generic=element, punctures=punctures, check=False)


def unit_adele(curve: CurveModel) -> MixedAdele:
    return MixedAdele(curve, [rational_adele(FunctionFieldElement(curve, 1))])


def mixed(*adeles: Adele) -> MixedAdele:
    if not adeles:
        raise ValueError("mixed() needs at least one component")
    return MixedAdele(adeles[0].curve, adeles)


def adele_equal(a: MixedAdele, b: MixedAdele) -> bool:
    return (a - b).is_zero()


# ---------------------------------------------------------------- serialization


def _rational_json(element: Optional[Rational]) -> Any:
    return None if element is None else element.to_json()


def serialize_adele(adele: Union[Adele, MixedAdele]) -> Dict[str, Any]:
    """Canonical document: rational parts as coefficient vectors, exceptions sorted by place id"""
    if isinstance(adele, MixedAdele):
        return {"components": [serialize_adele(adele.components[k]) for k in sorted(adele.components)]}
    return {
        "bidegree": list(adele.bidegree),
        "generic": _rational_json(adele.generic),
        "default": _rational_json(adele.default),
        "punctures": sorted(adele.punctures),
        "exceptions": [
            {
                "place": place_id,
                "min_exponent": series.min_exponent,
                "precision": series.precision,
                "coefficients": [
                    series.coefficient(i).to_json() for i in range(series.min_exponent, series.precision)
                ],
            }
            for place_id, series in adele.exceptions.items()
        ],
    }
