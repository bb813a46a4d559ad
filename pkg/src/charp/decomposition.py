"""
The decomposition map in characteristic p

From a family of Frobenius lifts (the generic one and local ones at finitely
many places) we build, on the generator dx' of the Frobenius twist,

    f(dx')  in A^{1,0}: x^{p-1} dx + d(delta) at each chain,
    h(dx')  in A^{0,1}: delta_gen - delta_x at (gen, x),

extended by g dx' -> g^p (...). psi^0 = F* and psi^1 = f + h; the checks below
compare psi^1 with C^{-1} through explicit coboundary witnesses.

These adeles are punctured at the poles of their rational data. The
difference of psi for two complete families is D of an integral adele, and
only that difference is ever integrated.
"""
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..adeles.adele import Adele, MixedAdele, adele_equal, mixed, rational_adele, rational_poles, serialize_adele
from ..adeles.cohomology import basis_cocycles, is_coboundary_witness, pairing
from ..adeles.operators import d_double_prime, d_prime, is_cocycle, total_differential
from ..config.settings import settings
from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..derham.cartier import cartier_inverse
from ..derham.differentials import RationalDifferential
from ..local.expansion import expand, expand_differential
from ..utils.errors import InvalidSpecError, NotIntegralError, VerificationError
from ..utils.report import Check, to_jsonable
from .lifting import Coordinate, FrobeniusLift, LiftFamily, compute_u


def _coordinate(curve: CurveModel, coordinate: Coordinate) -> FunctionFieldElement:
    if Coordinate(coordinate) == Coordinate.X:
        return FunctionFieldElement.x(curve)
    return FunctionFieldElement.y(curve)


def _twist(family: LiftFamily, g: Any) -> FunctionFieldElement:
    """g^p, the action of g in O_X' on F_* of the adeles"""
    if g is None:
        return FunctionFieldElement(family.curve, 1)
    if not isinstance(g, FunctionFieldElement):
        g = FunctionFieldElement(family.curve, g)
    return g ** family.lifted_curve.p


def _punctures(*elements: Any) -> List[str]:
    ids: List[str] = []
    for element in elements:
        ids.extend(place.id for place in rational_poles(element) if place.id not in ids)
    return ids


def _differential_image(lift: FrobeniusLift, coordinate: Coordinate, twist: FunctionFieldElement) -> RationalDifferential:
    """d(F*(a~))/p = a^{p-1} da + d(u)"""
    a = _coordinate(lift.curve, coordinate)
    p = lift.lifted_curve.p
    image = RationalDifferential.exact(a) * a ** (p - 1) + RationalDifferential.exact(lift.correction(coordinate))
    return image * twist


def maps_f_h(
    family: LiftFamily,
    coordinate: Coordinate = Coordinate.X,
    g: Any = None,
    precision: Optional[int] = None,
) -> Tuple[Adele, Adele]:
    """f(g da') in A^{1,0} and h(g da') in A^{0,1} for a coordinate a"""
    precision = settings.WORKING_PRECISION if precision is None else precision
    curve = family.curve
    twist = _twist(family, g)

    generic_f = _differential_image(family.generic, coordinate, twist)
    f_points = {
        lift.place.id: expand_differential(_differential_image(lift, coordinate, twist), lift.place, precision)
        for lift in family.local
    }
    punctures = _punctures(generic_f, twist)
    f = Adele(curve, (1, 0), default=generic_f, exceptions=f_points, generic=generic_f, punctures=punctures)

    h_chains = {
        lift.place.id: expand(compute_u(family.generic, coordinate, reference=lift) * twist, lift.place, precision)
        for lift in family.local
    }
    h = Adele(curve, (0, 1), exceptions=h_chains, punctures=punctures)
    return f, h


def psi_of_exact(
    family: LiftFamily,
    coordinate: Coordinate = Coordinate.X,
    g: Any = None,
    precision: Optional[int] = None,
) -> MixedAdele:
    """psi(g da') = f + h, checked to be a cocycle"""
    f, h = maps_f_h(family, coordinate, g, precision)
    result = mixed(f, h)
    if not is_cocycle(result):
        raise VerificationError(
            "f + h is not closed",
            {"family": family.to_json(), "coordinate": Coordinate(coordinate).value},
        )
    return result


def psi(family: LiftFamily, i: int, omega: Any, precision: Optional[int] = None) -> MixedAdele:
    """psi^0(a) = a^p in A^{0,0}; psi^1(g dx') = f(g dx') + h(g dx')"""
    curve = family.curve
    if i == 0:
        a = omega if isinstance(omega, FunctionFieldElement) else FunctionFieldElement(curve, omega)
        return MixedAdele(curve, [rational_adele(a ** family.lifted_curve.p)])
    if i == 1:
        if not isinstance(omega, RationalDifferential):
            raise TypeError(f"psi^1 needs a differential, got {type(omega).__name__}")
        return psi_of_exact(family, Coordinate.X, omega.coefficient, precision)
    raise ValueError(f"psi is defined in degrees 0 and 1 on a curve, not {i}")


def u_adele(
    family: LiftFamily,
    coordinate: Coordinate = Coordinate.X,
    g: Any = None,
    precision: Optional[int] = None,
) -> MixedAdele:
    """g^p u in A^{0,0}, u being the correction of each lift; D of it is psi(g da') - g^p a^{p-1} da"""
    precision = settings.WORKING_PRECISION if precision is None else precision
    curve = family.curve
    twist = _twist(family, g)
    generic = family.generic.correction(coordinate) * twist
    exceptions = {
        lift.place.id: expand(lift.correction(coordinate) * twist, lift.place, precision) for lift in family.local
    }
    punctures = _punctures(generic, twist)
    return mixed(Adele(curve, (0, 0), default=generic, exceptions=exceptions, generic=generic, punctures=punctures))


def lift_gap_witness(
    family_a: LiftFamily,
    family_b: LiftFamily,
    coordinate: Coordinate = Coordinate.X,
    g: Any = None,
    precision: Optional[int] = None,
) -> MixedAdele:
    """
    v in A^{0,0} with psi_A(g da') - psi_B(g da') = D v

    At each chain v is g^p times the difference of the two corrections in
    use there. It is built unpunctured, so NotIntegralError means the
    families differ at a place where g^p (u_A - u_B) has a pole.
    """
    precision = settings.WORKING_PRECISION if precision is None else precision
    curve = family_a.curve
    twist = _twist(family_a, g)
    generic = compute_u(family_a.generic, coordinate, reference=family_b.generic) * twist
    places = {place.id: place for place in family_a.places + family_b.places}
    exceptions = {
        place_id: expand(
            compute_u(family_a.at(place), coordinate, reference=family_b.at(place)) * twist, place, precision
        )
        for place_id, place in sorted(places.items())
    }
    return mixed(Adele(curve, (0, 0), default=generic, exceptions=exceptions, generic=generic))


def cartier_inverse_representative(omega: RationalDifferential) -> MixedAdele:
    return mixed(rational_adele(cartier_inverse(omega)))


# ---------------------------------------------------------------- checks


def verify_f_h_closure(family: LiftFamily, coordinate: Coordinate = Coordinate.X, precision: Optional[int] = None) -> Check:
    """D''f = -D'h, with D'f and D''h zero for degree reasons"""
    f, h = maps_f_h(family, coordinate, precision=precision)
    vanishing = d_prime(mixed(f)).is_zero() and d_double_prime(mixed(h)).is_zero()
    residual = d_double_prime(mixed(f)) + d_prime(mixed(h))
    passed = vanishing and residual.is_zero()
    detail: Dict[str, Any] = {"coordinate": Coordinate(coordinate).value, "places": [p.id for p in family.places]}
    if not passed:
        detail["residual"] = serialize_adele(residual)
    return Check.of(f"f_h_closure[{Coordinate(coordinate).value}]", passed, detail)


def verify_psi_identity(family: LiftFamily, coordinate: Coordinate = Coordinate.X) -> Check:
    """psi(da') - a^{p-1} da = D(u)"""
    curve = family.curve
    a = _coordinate(curve, coordinate)
    p = family.lifted_curve.p
    difference = psi_of_exact(family, coordinate) - mixed(rational_adele(RationalDifferential.exact(a) * a ** (p - 1)))
    witness = u_adele(family, coordinate)
    passed = is_coboundary_witness(difference, witness)
    return Check.of(f"psi_identity[{Coordinate(coordinate).value}]", passed, witness=serialize_adele(witness))


def verify_linearity(family: LiftFamily, samples: Sequence[FunctionFieldElement]) -> Check:
    """
    psi(g1 dx' + g2 dx') = psi(g1 dx') + psi(g2 dx') and, on y^2 = f,
    psi(g dy') computed from the y-corrections equals psi(g (f'/2y) dx')
    """
    curve = family.curve
    dx = RationalDifferential.dx(curve)
    failures: List[Dict[str, Any]] = []
    for index, g in enumerate(samples):
        g2 = samples[(index + 1) % len(samples)]
        together = psi(family, 1, dx * (g + g2))
        apart = psi(family, 1, dx * g) + psi(family, 1, dx * g2)
        if not adele_equal(together, apart):
            failures.append({"sample": index, "kind": "additivity", "g": g.to_json()})
        if curve.is_hyperelliptic:
            direct = psi_of_exact(family, Coordinate.Y, g)
            via_dx = psi(family, 1, RationalDifferential.exact(FunctionFieldElement.y(curve)) * g)
            if not adele_equal(direct, via_dx):
                failures.append({"sample": index, "kind": "dy", "g": g.to_json()})
    return Check.of("linearity", not failures, {"samples": len(samples), "failures": failures})


def verify_h0(family: LiftFamily, samples: Sequence[FunctionFieldElement]) -> Check:
    """psi^0(a) is the closed adele a^p"""
    p = family.lifted_curve.p
    failures = []
    for index, a in enumerate(samples):
        image = psi(family, 0, a)
        if not (is_cocycle(image) and adele_equal(image, mixed(rational_adele(a**p)))):
            failures.append({"sample": index, "a": a.to_json()})
    return Check.of("h0", not failures, {"samples": len(samples), "failures": failures})


def verify_quasi_iso(
    family_a: LiftFamily,
    family_b: LiftFamily,
    forms: Sequence[RationalDifferential],
    precision: Optional[int] = None,
) -> List[Check]:
    """
    For every form: psi_A is closed, psi_A - C^{-1} is D of an explicit
    witness, and psi_A - psi_B is D of an integral adele v, so that it pairs
    to zero with every basis cocycle

    Both families must be complete. Any failure raises VerificationError
    carrying the counterexample.
    """
    if family_a.lifted_curve != family_b.lifted_curve:
        raise InvalidSpecError("Lift families live over different lifted curves")
    for key, family in (("family_a", family_a), ("family_b", family_b)):
        missing = family.missing_places()
        if missing:
            raise InvalidSpecError(
                f"{key} has no lift at {[place.id for place in missing]}", {key: family.to_json()}
            )
    curve = family_a.curve
    cocycles = basis_cocycles(curve, precision)
    checks: List[Check] = []

    for index, omega in enumerate(forms):
        psi_a = psi(family_a, 1, omega, precision)
        psi_b = psi(family_b, 1, omega, precision)
        checks.append(Check.of(f"form[{index}].cocycle", True, {"omega": omega.to_json()}))

        witness = u_adele(family_a, Coordinate.X, omega.coefficient, precision)
        difference = psi_a - cartier_inverse_representative(omega)
        if not is_coboundary_witness(difference, witness):
            raise VerificationError(
                "psi - C^{-1} is not D of the lift witness",
                {"omega": omega.to_json(), "family": family_a.to_json(), "difference": serialize_adele(difference)},
            )
        checks.append(Check.of(f"form[{index}].coboundary", True, witness=serialize_adele(witness)))

        counterexample = {"omega": omega.to_json(), "family_a": family_a.to_json(), "family_b": family_b.to_json()}
        try:
            gap_witness = lift_gap_witness(family_a, family_b, Coordinate.X, omega.coefficient, precision)
        except NotIntegralError as e:
            raise VerificationError(f"The families differ at a pole of the form: {e.message}", counterexample) from e
        if not is_coboundary_witness(psi_a - psi_b, gap_witness):
            raise VerificationError("psi_A - psi_B is not D of the gap witness", counterexample)
        gap = total_differential(gap_witness)
        deltas = [pairing(gap, beta, check=False) for beta in cocycles]
        if any(not value.is_zero() for value in deltas):
            raise VerificationError(
                "Pairings depend on the choice of lifts", {**counterexample, "differences": to_jsonable(deltas)}
            )
        checks.append(
            Check.of(
                f"form[{index}].lift_independence",
                True,
                {"basis_size": len(cocycles)},
                witness=serialize_adele(gap_witness),
            )
        )
        logger.debug(f"Quasi-isomorphism checks passed for form {index}")
    return checks
