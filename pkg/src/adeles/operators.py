"""
D', D'', the total differential, the cup product and integration of adeles

Sign conventions: D' = (-1)^q d on A^{p,q}; (D''u)_(gen,x) = u_(gen) - u_(x);
the cup product of A^{p1,q1} and A^{p2,q2} carries (-1)^{p1 q2}.
"""
from typing import Dict, Optional

from loguru import logger

from ..algebra.fields import FieldElement
from ..config.settings import settings
from ..derham.differentials import RationalDifferential, pole_places
from ..local.expansion import residue, residue_at
from ..local.laurent import LaurentSeries
from ..utils.errors import NotIntegralError
from .adele import Adele, MixedAdele, d_rational, multiply_rational


def _d_prime_component(u: Adele) -> Optional[Adele]:
    if u.form_degree == 1:
        return None
    sign = -1 if u.cech_degree == 1 else 1
    exceptions = {place_id: series.derivative() * sign for place_id, series in u.exceptions.items()}
    generic = d_rational(u.generic) if u.cech_degree == 0 else None
    default = d_rational(u.default) * sign
    return Adele(u.curve, (1, u.cech_degree), default, exceptions, generic, u.punctures, check=False)


def _d_double_prime_component(u: Adele) -> Optional[Adele]:
    if u.cech_degree == 1:
        return None
    exceptions = {
        place_id: u.generic_at(u.places[place_id], series.precision) - series
        for place_id, series in u.exceptions.items()
    }
    return Adele(u.curve, (u.form_degree, 1), u.generic - u.default, exceptions, punctures=u.punctures)


def d_prime(a: MixedAdele) -> MixedAdele:
    return MixedAdele(a.curve, [c for c in map(_d_prime_component, a.components.values()) if c is not None])


def d_double_prime(a: MixedAdele) -> MixedAdele:
    return MixedAdele(a.curve, [c for c in map(_d_double_prime_component, a.components.values()) if c is not None])


def total_differential(a: MixedAdele) -> MixedAdele:
    """D = D' + D''"""
    return d_prime(a) + d_double_prime(a)


def is_cocycle(a: MixedAdele) -> bool:
    return total_differential(a).is_zero()


# ---------------------------------------------------------------- cup product


def _shared_precision(*series: Optional[LaurentSeries]) -> int:
    known = [s.precision for s in series if s is not None]
    return max(known) if known else settings.WORKING_PRECISION


def _cup_components(a: Adele, b: Adele) -> Optional[Adele]:
    if a.form_degree + b.form_degree > 1 or a.cech_degree + b.cech_degree > 1:
        return None
    sign = -1 if a.form_degree * b.cech_degree % 2 else 1
    bidegree = (a.form_degree + b.form_degree, a.cech_degree + b.cech_degree)
    punctures = a.punctures | b.punctures
    exceptions: Dict[str, LaurentSeries] = {}

    if b.cech_degree == 1:
        # (gen) face of a against the (gen, x) component of b
        for place_id, series in b.exceptions.items():
            place = b.places[place_id]
            exceptions[place_id] = a.generic_at(place, series.precision + settings.PRECISION_MARGIN) * series * sign
        default = multiply_rational(a.generic, b.default) * sign
        return Adele(a.curve, bidegree, default, exceptions, punctures=punctures)

    places = {**a.places, **b.places}
    for place_id, place in places.items():
        precision = _shared_precision(a.exceptions.get(place_id), b.exceptions.get(place_id))
        exceptions[place_id] = a.component(place, precision) * b.component(place, precision) * sign
    default = multiply_rational(a.default, b.default) * sign
    if a.cech_degree == 1:
        # (gen, x) component of a against the (x) face of b
        return Adele(a.curve, bidegree, default, exceptions, punctures=punctures)
    generic = multiply_rational(a.generic, b.generic) * sign
    return Adele(a.curve, bidegree, default, exceptions, generic, punctures, check=False)


def cup(a: MixedAdele, b: MixedAdele) -> MixedAdele:
    products = []
    for left in a.components.values():
        for right in b.components.values():
            product = _cup_components(left, right)
            if product is not None:
                products.append(product)
    return MixedAdele(a.curve, products)


# ---------------------------------------------------------------- integration


def integrate(a: MixedAdele) -> FieldElement:
    """Σ over places of the residue of the (gen, x) component of the (1, 1) part"""
    for bidegree, component in a.components.items():
        if bidegree != (1, 1) and not component.is_zero():
            raise ValueError(f"Only bidegree (1, 1) adeles can be integrated, got a nonzero {bidegree} part")
        if not component.is_whole():
            raise NotIntegralError(
                "Adeles with punctures cannot be integrated",
                {"bidegree": list(bidegree), "punctures": sorted(component.punctures)},
            )
    adele = a[(1, 1)]
    total = a.curve.field.zero()
    for series in adele.exceptions.values():
        total = total + residue(series)
    default: RationalDifferential = adele.default
    for place in pole_places(default):
        if place.id not in adele.exceptions:
            total = total + residue_at(default, place)
    logger.debug(f"Integral over {len(adele.exceptions)} exceptional chains: {total}")
    return total
