"""
Cohomology of the adele complex: cocycles of second-kind differentials,
the residue pairing and coboundary witnesses in bidegree (0, 1)
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.fields import FieldElement
from ..config.settings import settings
from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..curves.places import Place
from ..derham.differentials import (
    DifferentialKind,
    RationalDifferential,
    canonical_basis,
    classify,
    hodge_dimension,
    order_of_differential,
    pole_places,
)
from ..local.expansion import expand_differential
from ..local.laurent import LaurentSeries
from ..utils.errors import (
    CharPObstructionError,
    NotClosedError,
    NotFirstKindError,
    NotSecondKindError,
    UnsupportedCharacteristicError,
    VerificationError,
)
from .adele import Adele, MixedAdele, serialize_adele
from .operators import cup, integrate, is_cocycle, total_differential


# ---------------------------------------------------------------- cocycles


def split_obstruction(series: LaurentSeries) -> Tuple[LaurentSeries, LaurentSeries]:
    """
    series = exact + obstruction, where the obstruction collects the terms
    t^i dt with i >= 0 and i = -1 mod p, which have no primitive in
    characteristic p

    Raises CharPObstructionError when such a term has a pole.
    """
    p = series.field.characteristic
    blocked = {i: c for i, c in series.coefficients.items() if p and i != -1 and (i + 1) % p == 0}
    polar = sorted(i for i in blocked if i < 0)
    if polar:
        place_id = getattr(series.place, "id", None)
        raise CharPObstructionError(
            f"t^{polar[0]} dt has no local primitive in characteristic {p}",
            {"exponent": polar[0], "place": place_id},
        )
    exact = series._like({i: c for i, c in series.coefficients.items() if i not in blocked}, series.precision)
    return exact, series._like(blocked, series.precision)


def local_primitive(omega: RationalDifferential, place: Place, precision: int, constant: Any = 0) -> LaurentSeries:
    """a with da = omega near `place`, known to O(t^(precision + 1))"""
    exact, obstruction = split_obstruction(expand_differential(omega, place, precision))
    if not obstruction.is_zero():
        raise CharPObstructionError(
            f"{omega} has no local primitive at {place.id}",
            {"omega": omega.to_json(), "place": place.id, "exponent": obstruction.valuation()},
        )
    return exact.antiderivative(constant)


def _primitive_and_remainder(
    omega: RationalDifferential, place: Place, precision: int, constant: Any = 0
) -> Tuple[LaurentSeries, LaurentSeries]:
    """Primitive of the exact part of omega at `place` and the integral remainder"""
    exact, obstruction = split_obstruction(expand_differential(omega, place, precision))
    primitive = exact.antiderivative(constant)
    return primitive, obstruction.truncate(primitive.precision - 1)


def _pole_boost(omega: RationalDifferential) -> int:
    """Largest pole order of omega"""
    return max((-order_of_differential(omega, place) for place in pole_places(omega)), default=0)


def cocycle_from_second_kind(
    omega: RationalDifferential,
    constants: Optional[Dict[str, Any]] = None,
    extra_places: Sequence[Place] = (),
    precision: Optional[int] = None,
) -> MixedAdele:
    """
    Degree-one cocycle with (gen) component omega

    The (1, 0) part is omega at (gen) and at every point except the poles
    (and `extra_places`); the (0, 1) part carries the local primitive of
    omega at those places. In characteristic p the terms t^i dt with i >= 0
    and i = -1 mod p have no primitive and stay in the (1, 0) part, which is
    then integral there. `constants` shifts the primitive at
    a place id by a constant.
    """
    if classify(omega) == DifferentialKind.NEITHER:
        raise NotSecondKindError(f"{omega} has a nonzero residue", {"omega": omega.to_json()})
    curve = omega.curve
    constants = constants or {}
    precision = settings.WORKING_PRECISION if precision is None else precision

    places: List[Place] = list(pole_places(omega))
    places.extend(place for place in extra_places if place not in places)

    remainders: Dict[str, LaurentSeries] = {}
    primitives: Dict[str, LaurentSeries] = {}
    for place in places:
        primitive, remainder = _primitive_and_remainder(omega, place, precision, constants.get(place.id, 0))
        primitives[place.id] = primitive
        remainders[place.id] = remainder

    alpha = MixedAdele(
        curve,
        [
            Adele(curve, (1, 0), default=omega, exceptions=remainders, generic=omega),
            Adele(curve, (0, 1), exceptions=primitives),
        ],
    )
    if not is_cocycle(alpha):
        raise VerificationError("Constructed adele is not closed", {"omega": omega.to_json()})
    return alpha


def first_kind_variant(omega: RationalDifferential) -> MixedAdele:
    """The cocycle with (0, 1) part zero, for omega regular everywhere"""
    if classify(omega) != DifferentialKind.FIRST_KIND:
        raise NotFirstKindError(f"{omega} has poles", {"omega": omega.to_json()})
    return MixedAdele(omega.curve, [Adele(omega.curve, (1, 0), default=omega, generic=omega)])


def primitive_witness(omega: RationalDifferential, places: Sequence[Place], precision: Optional[int] = None) -> MixedAdele:
    """
    b in A^{0,0} with cocycle(omega, extra_places=places) - cocycle(omega) = D b

    b vanishes at (gen) and is minus the local primitive at each place.
    """
    precision = settings.WORKING_PRECISION if precision is None else precision
    exceptions = {place.id: -_primitive_and_remainder(omega, place, precision)[0] for place in places}
    return MixedAdele(omega.curve, [Adele(omega.curve, (0, 0), exceptions=exceptions)])


def is_coboundary_witness(difference: MixedAdele, witness: MixedAdele) -> bool:
    return (difference - total_differential(witness)).is_zero()


# ---------------------------------------------------------------- pairing


def pairing(alpha: MixedAdele, beta: MixedAdele, check: bool = True) -> FieldElement:
    """<alpha, beta> = integral of alpha cup beta"""
    for name, a in (("alpha", alpha), ("beta", beta)):
        if not a.is_homogeneous(1):
            raise ValueError(f"{name} must have total degree one")
        if check and not is_cocycle(a):
            raise NotClosedError(f"{name} is not a cocycle", {name: serialize_adele(a)})
    return integrate(cup(alpha, beta))


def basis_cocycles(curve: CurveModel, precision: Optional[int] = None) -> List[MixedAdele]:
    precision = settings.WORKING_PRECISION if precision is None else precision
    cocycles = []
    for omega in canonical_basis(curve):
        cocycles.append(cocycle_from_second_kind(omega, precision=precision + _pole_boost(omega)))
    return cocycles


def gram_matrix(curve: CurveModel, precision: Optional[int] = None) -> List[List[FieldElement]]:
    """Pairings of the cocycles of x^i dx/y, 0 <= i < 2g"""
    cocycles = basis_cocycles(curve, precision)
    return [[pairing(a, b, check=False) for b in cocycles] for a in cocycles]


def pairing_vector(omega: RationalDifferential, precision: Optional[int] = None) -> List[FieldElement]:
    """<cocycle(omega), basis cocycle_j> for every j"""
    precision = settings.WORKING_PRECISION if precision is None else precision
    alpha = cocycle_from_second_kind(omega, precision=precision + _pole_boost(omega))
    return [pairing(alpha, b, check=False) for b in basis_cocycles(omega.curve, precision)]


def pair_differentials(
    omega1: RationalDifferential, omega2: RationalDifferential, precision: Optional[int] = None
) -> FieldElement:
    precision = settings.WORKING_PRECISION if precision is None else precision
    alpha = cocycle_from_second_kind(omega1, precision=precision + _pole_boost(omega1))
    beta = cocycle_from_second_kind(omega2, precision=precision + _pole_boost(omega2))
    return pairing(alpha, beta)


# ---------------------------------------------------------------- H^{0,1}


def try_coboundary_01(beta: Adele) -> Optional[MixedAdele]:
    """
    b in A^{0,0} with D b = beta for a closed beta of bidegree (0, 1)

    Closedness means d(beta) = 0 at every chain, so each component is a
    constant c_x; then b vanishes at (gen) and equals -c_x at (x). Returns
    None if some component is not constant.
    """
    curve = beta.curve
    if curve.characteristic != 0:
        raise UnsupportedCharacteristicError("Coboundary witnesses in bidegree (0, 1) need characteristic 0")
    if beta.bidegree != (0, 1):
        raise ValueError(f"Expected bidegree (0, 1), got {beta.bidegree}")
    wrapped = MixedAdele(curve, [beta])
    if not is_cocycle(wrapped):
        raise NotClosedError("Adele of bidegree (0, 1) is not closed", {"beta": serialize_adele(beta)})

    default = beta.default
    if not (default.is_rational() and default.a.is_constant()):
        return None
    exceptions: Dict[str, LaurentSeries] = {}
    for place_id, series in beta.exceptions.items():
        if any(i != 0 for i in series.coefficients):
            return None
        exceptions[place_id] = -series

    witness = MixedAdele(curve, [Adele(curve, (0, 0), default=-default, exceptions=exceptions)])
    if not is_coboundary_witness(wrapped, witness):
        raise VerificationError("Coboundary witness failed its check", {"beta": serialize_adele(beta)})
    return witness


# ---------------------------------------------------------------- Hodge split


@dataclass
class HodgeDecompositionCheck:
    """Outcome of the H^{1,0} + H^{0,1} versus H^1 comparison on a curve"""

    genus: int
    samples: int
    witnesses_found: int
    self_pairing: Optional[FieldElement] = None
    dual_pairing: Optional[FieldElement] = None
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def dim_h10(self) -> int:
        return self.genus

    @property
    def dim_h01(self) -> Optional[int]:
        """0 once every sampled closed (0, 1) adele is a coboundary"""
        return 0 if not self.failures else None

    @property
    def dim_h1(self) -> int:
        return 2 * self.genus

    @property
    def decomposition_fails(self) -> bool:
        return self.dim_h01 is not None and self.dim_h10 + self.dim_h01 < self.dim_h1


def hodge_decomposition_check(curve: CurveModel, samples: Sequence[Adele]) -> HodgeDecompositionCheck:
    """
    Coboundary witnesses for sampled closed (0, 1) adeles, the isotropy of
    H^{1,0} and a cocycle beta with <alpha, beta> = 1 for alpha = dx/y
    """
    check = HodgeDecompositionCheck(genus=curve.genus, samples=len(samples), witnesses_found=0)
    for index, beta in enumerate(samples):
        witness = try_coboundary_01(beta)
        if witness is None:
            check.failures.append({"sample": index, "beta": serialize_adele(beta)})
        else:
            check.witnesses_found += 1

    if hodge_dimension(curve) == 0:
        return check
    cocycles = basis_cocycles(curve)
    alpha = cocycles[0]
    check.self_pairing = pairing(alpha, alpha, check=False)
    for beta in cocycles[1:]:
        value = pairing(alpha, beta, check=False)
        if not value.is_zero():
            normalized = beta.scale(value.inverse())
            check.dual_pairing = pairing(alpha, normalized, check=False)
            break
    logger.info(
        f"H^(0,1) sweep: {check.witnesses_found}/{check.samples} witnesses; "
        f"<alpha, alpha> = {check.self_pairing}, <alpha, beta> = {check.dual_pairing}"
    )
    return check
