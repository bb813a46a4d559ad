"""
Expansion of function field elements and differentials at a place, and residues

At each place we fix local coordinates X(t), Y(t) with x = X and y = Y:
  projective line, finite place pi:  pi(X) = t, X(0) = theta
  projective line, infinity:         X = 1/t
  split / inert place over pi:       pi(X) = t, Y^2 = f(X), Y(0) = root
  ramified finite place:             f(X) = t^2, X(0) = theta, Y = t
  hyperelliptic infinity (t = x^g/y): s = t^2 f*(s), X = 1/s, Y = X^g/t
where f* is the reversed polynomial of f. Power series roots are found by
Newton or fixed-point iteration at a fixed working precision.
"""
from functools import lru_cache
from typing import Any, Callable, List, Optional, Tuple

from loguru import logger

from ..algebra.fields import FieldElement, trace_to_base
from ..algebra.polynomials import Polynomial, RationalFunction
from ..config.settings import settings
from ..curves.function_field import FunctionFieldElement
from ..curves.places import Branch, Place, candidate_places
from ..utils.errors import HenselFailureError, InsufficientPrecisionError
from .laurent import LaurentSeries

Coordinates = Tuple[LaurentSeries, Optional[LaurentSeries]]


def _iterate_to_fixed_point(step: Callable[[LaurentSeries], LaurentSeries], start: LaurentSeries, what: str) -> LaurentSeries:
    current = start
    for _ in range(start.precision + 8):
        following = step(current)
        if following == current:
            return current
        current = following
    raise HenselFailureError(f"Iteration for {what} did not stabilize", {"precision": start.precision})


def _root_of_center(place: Place, precision: int) -> LaurentSeries:
    """X with pi(X) = t and X(0) = theta"""
    field = place.residue_field
    t = LaurentSeries.monomial(1, 1, field, precision, place)
    center = place.center
    if center.degree == 1:
        return t + place.theta
    derivative = center.derivative()

    def step(X: LaurentSeries) -> LaurentSeries:
        return X - (center(X) - t) / derivative(X)

    return _iterate_to_fixed_point(step, LaurentSeries.constant(place.theta, field, precision, place), "x")


@lru_cache(maxsize=512)
def local_coordinates(place: Place, precision: int) -> Coordinates:
    """(X, Y) at working precision `precision`; Y is None on the projective line"""
    curve = place.curve
    field = place.residue_field
    t = LaurentSeries.monomial(1, 1, field, precision, place)
    logger.debug(f"Local coordinates at {place.id} to O(t^{precision})")

    if not curve.is_hyperelliptic:
        if place.is_at_infinity:
            return LaurentSeries.monomial(1, -1, field, precision, place), None
        return _root_of_center(place, precision), None

    f = curve.f
    if place.is_at_infinity:
        reversed_f = Polynomial(list(reversed(f.coefficients)), curve.field)
        t2 = t * t

        def step(s: LaurentSeries) -> LaurentSeries:
            return t2 * reversed_f(s)

        s = _iterate_to_fixed_point(step, LaurentSeries.zero(field, precision, place), "1/x")
        X = s.inverse()
        return X, X**curve.genus / t

    if place.branch == Branch.RAMIFIED:
        t2 = t * t
        derivative = f.derivative()

        def step(X: LaurentSeries) -> LaurentSeries:
            return X - (f(X) - t2) / derivative(X)

        X = _iterate_to_fixed_point(step, LaurentSeries.constant(place.theta, field, precision, place), "x")
        return X, t

    X = _root_of_center(place, precision)
    fX = f(X)

    def step(Y: LaurentSeries) -> LaurentSeries:
        return (Y + fX / Y) / 2

    Y = _iterate_to_fixed_point(step, LaurentSeries.constant(place.root, field, precision, place), "y")
    return X, Y


# ---------------------------------------------------------------- expansion


def _as_element(g: Any, place: Place) -> FunctionFieldElement:
    if isinstance(g, FunctionFieldElement):
        return g
    return FunctionFieldElement(place.curve, g)


def _evaluate_rational(h: RationalFunction, X: LaurentSeries) -> LaurentSeries:
    if h.is_polynomial():
        return h.num(X)
    return h.num(X) / h.den(X)


def _evaluate(g: FunctionFieldElement, place: Place, working: int) -> LaurentSeries:
    X, Y = local_coordinates(place, working)
    series = _evaluate_rational(g.a, X)
    if not g.b.is_zero():
        series = series + _evaluate_rational(g.b, X) * Y
    return series


def _degree_slack(g: FunctionFieldElement, place: Place) -> int:
    # rough count of the absolute precision lost to poles and divisions
    parts: List[Polynomial] = [g.a.num, g.a.den, g.b.num, g.b.den]
    slack = sum(max(p.degree, 0) for p in parts) * place.ramification_index
    if place.curve.is_hyperelliptic and not g.b.is_zero():
        slack += place.curve.f.degree
    return slack


def _with_retries(compute: Callable[[int], LaurentSeries], precision: int, slack: int, what: str) -> LaurentSeries:
    base = max(settings.WORKING_PRECISION, precision + settings.PRECISION_MARGIN + slack)
    last_precision = None
    for attempt in range(settings.PRECISION_RETRIES):
        working = base + settings.PRECISION_MARGIN * (2**attempt - 1)
        try:
            series = compute(working)
        except InsufficientPrecisionError:
            logger.debug(f"{what}: working precision {working} too small")
            continue
        if series.precision >= precision:
            return series.truncate(precision)
        last_precision = series.precision
        logger.debug(f"{what}: reached O(t^{series.precision}) at working precision {working}, need {precision}")
    raise InsufficientPrecisionError(
        f"Could not reach O(t^{precision}) for {what}", {"requested": precision, "reached": last_precision}
    )


def expand(g: Any, place: Place, precision: int) -> LaurentSeries:
    """Laurent expansion of g in the uniformizer of `place`, known to O(t^precision)"""
    g = _as_element(g, place)
    if g.is_zero():
        return LaurentSeries.zero(place.residue_field, precision, place)
    return _with_retries(lambda w: _evaluate(g, place, w), precision, _degree_slack(g, place), f"expand at {place.id}")


def _differential_coefficient(omega: Any, place: Place) -> FunctionFieldElement:
    """g for omega = g dx; accepts a differential or its coefficient"""
    coefficient = getattr(omega, "coefficient", omega)
    return _as_element(coefficient, place)


def expand_differential(omega: Any, place: Place, precision: int) -> LaurentSeries:
    """h with omega = h(t) dt, i.e. g(X(t)) X'(t) for omega = g dx"""
    g = _differential_coefficient(omega, place)
    if g.is_zero():
        return LaurentSeries.zero(place.residue_field, precision, place)

    def compute(working: int) -> LaurentSeries:
        X, _ = local_coordinates(place, working)
        return _evaluate(g, place, working) * X.derivative()

    return _with_retries(compute, precision, _degree_slack(g, place) + 2, f"expand d at {place.id}")


# ---------------------------------------------------------------- residues


def residue(series: LaurentSeries) -> FieldElement:
    """Traced coefficient of t^-1 of h, for h dt"""
    return trace_to_base(series.coefficient(-1))


def local_residue_coefficient(omega: Any, place: Place) -> FieldElement:
    """Coefficient of t^-1 dt in the residue field, before taking the trace"""
    return expand_differential(omega, place, 0).coefficient(-1)


def residue_at(omega: Any, place: Place) -> FieldElement:
    return trace_to_base(local_residue_coefficient(omega, place))


def sum_of_residues(omega: Any, curve: Any = None) -> FieldElement:
    """Σ of traced residues over every place where omega can have a pole"""
    if curve is None:
        curve = _curve_of(omega)
    total = curve.field.zero()
    for place in candidate_places(curve, [omega]):
        total = total + residue_at(omega, place)
    return total


def _curve_of(omega: Any):
    coefficient = getattr(omega, "coefficient", omega)
    if isinstance(coefficient, FunctionFieldElement):
        return coefficient.curve
    return getattr(omega, "curve")
