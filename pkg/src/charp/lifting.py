"""
Frobenius liftings modulo p^2

A lift is stored through its corrections

    F*(x~) = x~^p + p*delta,    F*(y~) = y~^p + p*epsilon,

with delta and epsilon in k(X) read modulo p. On y^2 = f the lifted curve
equation holds exactly modulo p^2 if and only if

    2 y^p epsilon = w + delta f'(x)^p,

where w = (f~(x^p) - f~(x)^p)/p reduced mod p is the Frobenius defect of f~.

The generic lift x -> x^p has epsilon = w/(2y^p), which has poles at the
ramified places. A complete family carries a local lift at each of them.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from ..algebra.fields import PrimeField
from ..algebra.polynomials import Polynomial
from ..algebra.witt import LiftedPolynomial, WittLength2
from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..curves.places import Branch, Place, order_at, ramified_places, random_rational_places
from ..utils.errors import HenselFailureError, InvalidSpecError, UnsupportedCharacteristicError, VerificationError
from ..utils.sampling import make_rng, random_perturbation


class Coordinate(str, Enum):
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class LiftedCurve:
    """A curve over F_p together with a lift f~ of f to W2(F_p) = Z/p^2"""

    curve: CurveModel
    coefficients: Tuple[WittLength2, ...] = ()

    def __post_init__(self):
        field = self.curve.field
        if not isinstance(field, PrimeField):
            raise UnsupportedCharacteristicError("Frobenius lifts need the base field F_p")
        if field.p == 2:
            raise UnsupportedCharacteristicError("Frobenius lifts need p odd")
        if self.curve.is_hyperelliptic and self.lifted_f.reduce() != self.curve.f:
            raise InvalidSpecError("Lifted coefficients do not reduce to f", {"f": self.curve.f.to_json()})

    @classmethod
    def canonical(cls, curve: CurveModel) -> "LiftedCurve":
        """Digit lift of f: every coefficient c in [0, p) is read as an integer mod p^2"""
        if not isinstance(curve.field, PrimeField):
            raise UnsupportedCharacteristicError("Frobenius lifts need the base field F_p")
        if not curve.is_hyperelliptic:
            return cls(curve)
        return cls(curve, LiftedPolynomial.lift(curve.f).coefficients)

    @property
    def p(self) -> int:
        return self.curve.characteristic

    @property
    def lifted_f(self) -> LiftedPolynomial:
        return LiftedPolynomial(self.coefficients, self.curve.field)

    def to_json(self) -> Dict[str, Any]:
        return {"p": self.p, "f": [c.to_integer() for c in self.coefficients]}


def frobenius_defect(lifted: LiftedCurve) -> Polynomial:
    """w = (f~(x^p) - f~(x)^p) / p, reduced mod p"""
    field = lifted.curve.field
    if not lifted.curve.is_hyperelliptic:
        return Polynomial.zero(field)
    f = lifted.lifted_f
    return (f.substitute_power(lifted.p) - f**lifted.p).divide_by_p()


# ---------------------------------------------------------------- lifts


@dataclass(frozen=True)
class FrobeniusLift:
    """
    A lift of the Frobenius on the local ring at `place`, or on the function
    field when `place` is None; `epsilon` is None on the projective line
    """

    lifted_curve: LiftedCurve
    delta: FunctionFieldElement
    epsilon: Optional[FunctionFieldElement] = None
    place: Optional[Place] = None
    seed: Optional[int] = None

    @property
    def is_generic(self) -> bool:
        return self.place is None

    @property
    def scope(self) -> str:
        return "generic" if self.place is None else self.place.id

    @property
    def curve(self) -> CurveModel:
        return self.lifted_curve.curve

    def correction(self, coordinate: Coordinate) -> FunctionFieldElement:
        if Coordinate(coordinate) == Coordinate.X:
            return self.delta
        if self.epsilon is None:
            raise InvalidSpecError("y is not a coordinate on the projective line")
        return self.epsilon

    def image(self, coordinate: Coordinate) -> str:
        name = Coordinate(coordinate).value
        correction = self.correction(coordinate)
        if correction.is_zero():
            return f"{name}^{self.lifted_curve.p}"
        return f"{name}^{self.lifted_curve.p} + {self.lifted_curve.p}*({correction})"

    def satisfies_curve_equation(self) -> bool:
        curve = self.curve
        if not curve.is_hyperelliptic:
            return True
        p = self.lifted_curve.p
        w = FunctionFieldElement(curve, frobenius_defect(self.lifted_curve))
        f_prime = FunctionFieldElement(curve, curve.f.derivative())
        y_p = FunctionFieldElement.y(curve) ** p
        return y_p * self.epsilon * 2 == w + self.delta * f_prime**p

    def is_regular_at(self, place: Place) -> bool:
        corrections = [self.delta] if self.epsilon is None else [self.delta, self.epsilon]
        return all(order_at(c, place) >= 0 for c in corrections)

    def is_regular(self) -> bool:
        """Corrections lie in the local ring at the place"""
        if self.place is None:
            return True
        return self.is_regular_at(self.place)

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"scope": self.scope, "delta": self.delta.to_json()}
        if self.epsilon is not None:
            document["epsilon"] = self.epsilon.to_json()
        if self.seed is not None:
            document["seed"] = self.seed
        return document


def _verified(lift: FrobeniusLift) -> FrobeniusLift:
    if not lift.is_regular():
        raise HenselFailureError(
            f"Lift at {lift.scope} leaves the local ring", {"lift": lift.to_json()}
        )
    if not lift.satisfies_curve_equation():
        raise VerificationError(f"Lift at {lift.scope} violates the curve equation mod p^2", {"lift": lift.to_json()})
    return lift


def _check_place(place: Place) -> None:
    if place.is_at_infinity or not place.is_rational:
        raise HenselFailureError(
            f"Local lifts are only built at finite rational places, not {place.id}", {"place": place.id}
        )


def lift_frobenius(
    lifted: LiftedCurve,
    place: Optional[Place] = None,
    seed: Optional[int] = None,
    delta: Any = None,
) -> FrobeniusLift:
    """
    Generic lift (x -> x^p) when `place` is None; otherwise a lift on the
    local ring at a finite rational place

    At a split place x -> x^p + p*delta with `delta` (or a seeded random
    polynomial) and epsilon solved from the curve equation, y being a unit.
    At a ramified place an explicit `delta` must make epsilon regular; without
    one, epsilon is the random polynomial and delta is solved instead, f'(x)
    being a unit there.
    """
    curve = lifted.curve
    p = lifted.p
    w = FunctionFieldElement(curve, frobenius_defect(lifted))
    y_p = FunctionFieldElement.y(curve) ** p if curve.is_hyperelliptic else None

    if place is None:
        zero = FunctionFieldElement(curve, 0)
        epsilon = w / (y_p * 2) if curve.is_hyperelliptic else None
        return _verified(FrobeniusLift(lifted, zero, epsilon))

    _check_place(place)
    explicit = delta is not None
    if explicit:
        perturbation = FunctionFieldElement(curve, delta) if not isinstance(delta, FunctionFieldElement) else delta
    else:
        perturbation = FunctionFieldElement(curve, random_perturbation(curve.field, make_rng(seed)))

    if not curve.is_hyperelliptic:
        return _verified(FrobeniusLift(lifted, perturbation, None, place, seed))

    f_prime_p = FunctionFieldElement(curve, curve.f.derivative()) ** p
    if place.branch == Branch.RAMIFIED and not explicit:
        epsilon = perturbation
        solved = (y_p * epsilon * 2 - w) / f_prime_p
        logger.debug(f"Ramified lift at {place.id}: delta solved from epsilon")
        return _verified(FrobeniusLift(lifted, solved, epsilon, place, seed))

    epsilon = (w + perturbation * f_prime_p) / (y_p * 2)
    return _verified(FrobeniusLift(lifted, perturbation, epsilon, place, seed))


def ramified_lift(lifted: LiftedCurve, place: Place) -> FrobeniusLift:
    """
    The lift with epsilon = 0 and delta = -w/f'^p at a finite ramified place

    f' is a unit at such a place, so both corrections are regular there.
    """
    curve = lifted.curve
    if place.is_at_infinity or place.branch != Branch.RAMIFIED:
        raise InvalidSpecError(f"{place.id} is not a finite ramified place", {"place": place.id})
    w = FunctionFieldElement(curve, frobenius_defect(lifted))
    f_prime_p = FunctionFieldElement(curve, curve.f.derivative()) ** lifted.p
    zero = FunctionFieldElement(curve, 0)
    return _verified(FrobeniusLift(lifted, -w / f_prime_p, zero, place))


def compute_u(
    lift: FrobeniusLift, coordinate: Coordinate = Coordinate.X, reference: Optional[FrobeniusLift] = None
) -> FunctionFieldElement:
    """
    u = (F*(a~) - F_ref*(a~)) / p for a coordinate a, where F_ref is
    `reference` or the plain p-th power map when it is None
    """
    u = lift.correction(coordinate)
    if reference is not None:
        u = u - reference.correction(coordinate)
    return u


# ---------------------------------------------------------------- families


@dataclass(frozen=True)
class LiftFamily:
    """The generic lift together with local lifts at finitely many places"""

    lifted_curve: LiftedCurve
    generic: FrobeniusLift
    local: Tuple[FrobeniusLift, ...] = ()
    seed: Optional[int] = None

    @property
    def curve(self) -> CurveModel:
        return self.lifted_curve.curve

    @property
    def places(self) -> Tuple[Place, ...]:
        return tuple(lift.place for lift in self.local)

    def at(self, place: Place) -> FrobeniusLift:
        for lift in self.local:
            if lift.place == place:
                return lift
        return self.generic

    def missing_places(self) -> List[Place]:
        """Finite places where the generic lift has poles and no local lift is given"""
        covered = {place.id for place in self.places}
        return [
            place
            for place in ramified_places(self.curve)
            if place.id not in covered and not self.generic.is_regular_at(place)
        ]

    @property
    def is_complete(self) -> bool:
        return not self.missing_places()

    def to_json(self) -> Dict[str, Any]:
        return {
            "curve": self.lifted_curve.to_json(),
            "seed": self.seed,
            "generic": self.generic.to_json(),
            "local": [lift.to_json() for lift in self.local],
        }


def canonical_family(lifted: LiftedCurve) -> LiftFamily:
    """The generic lift alone; complete only where it is regular at every ramified place"""
    return LiftFamily(lifted, lift_frobenius(lifted))


def complete_family(family: LiftFamily) -> LiftFamily:
    """Add the lift of ramified_lift() at every place the family is missing"""
    missing = family.missing_places()
    if not missing:
        return family
    logger.debug(f"Completing lift family at {[place.id for place in missing]}")
    local = list(family.local) + [ramified_lift(family.lifted_curve, place) for place in missing]
    local.sort(key=lambda lift: lift.place.id)
    return LiftFamily(family.lifted_curve, family.generic, tuple(local), family.seed)


def random_lift_family(lifted: LiftedCurve, seed: int, n_places: int = 2) -> LiftFamily:
    """
    Generic lift plus seeded random local lifts at `n_places` finite rational
    places, completed at the remaining ramified places
    """
    rng = make_rng(seed)
    places = random_rational_places(lifted.curve, n_places, rng)
    local = []
    for place in sorted(places, key=lambda place: place.id):
        child_seed = int(rng.integers(0, 2**31 - 1))
        local.append(lift_frobenius(lifted, place, seed=child_seed))
    family = complete_family(LiftFamily(lifted, lift_frobenius(lifted), tuple(local), seed))
    logger.info(f"Lift family (seed {seed}) at {[lift.scope for lift in family.local]}")
    return family
