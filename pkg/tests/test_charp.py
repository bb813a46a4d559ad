"""
Frobenius lifts modulo p^2 and the decomposition map in characteristic p
"""
import pytest

from src.adeles.adele import adele_equal, mixed, rational_adele
from src.adeles.operators import is_cocycle
from src.algebra.fields import PrimeField
from src.algebra.polynomials import Polynomial
from src.algebra.witt import WittLength2
from src.charp.decomposition import (
    lift_gap_witness,
    maps_f_h,
    psi,
    verify_f_h_closure,
    verify_h0,
    verify_linearity,
    verify_psi_identity,
    verify_quasi_iso,
)
from src.charp.lifting import (
    Coordinate,
    LiftedCurve,
    LiftFamily,
    canonical_family,
    complete_family,
    compute_u,
    frobenius_defect,
    lift_frobenius,
    ramified_lift,
    random_lift_family,
)
from src.curves.function_field import FunctionFieldElement
from src.curves.model import CurveModel
from src.curves.places import Branch, infinite_place, places_over, ramified_places, rational_places
from src.derham.differentials import RationalDifferential, canonical_basis
from src.utils.errors import (
    HenselFailureError,
    InvalidSpecError,
    NotIntegralError,
    UnsupportedCharacteristicError,
)


def place_at(curve, c):
    return places_over(curve, Polynomial([-c, 1], curve.field))[0]


# ---------------------------------------------------------------- lifted curves


def test_digit_lift(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    assert lifted.to_json() == {"p": 5, "f": [0, 4, 0, 1]}
    assert lifted.lifted_f.reduce() == elliptic_f5.f
    assert not frobenius_defect(lifted).is_zero()


def test_lift_must_reduce_to_f(elliptic_f5):
    F5 = elliptic_f5.field
    wrong = tuple(WittLength2(c, 0, F5) for c in (0, 3, 0, 1))
    with pytest.raises(InvalidSpecError):
        LiftedCurve(elliptic_f5, wrong)


def test_unsupported_characteristics(elliptic_q):
    with pytest.raises(UnsupportedCharacteristicError):
        LiftedCurve.canonical(elliptic_q)
    with pytest.raises(UnsupportedCharacteristicError):
        LiftedCurve.canonical(CurveModel.projective_line(PrimeField(2)))


# ---------------------------------------------------------------- lifts


def test_generic_lift_on_projective_line(p1_f3):
    lift = lift_frobenius(LiftedCurve.canonical(p1_f3))
    assert lift.is_generic
    assert compute_u(lift).is_zero()
    assert lift.image(Coordinate.X) == "x^3"
    with pytest.raises(InvalidSpecError):
        lift.correction(Coordinate.Y)


def test_generic_lift_on_elliptic_curve(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    lift = lift_frobenius(lifted)
    y = FunctionFieldElement.y(elliptic_f5)
    w = FunctionFieldElement(elliptic_f5, frobenius_defect(lifted))
    assert compute_u(lift, Coordinate.Y) == w / (2 * y ** 5)
    assert lift.satisfies_curve_equation()


def test_compute_u_against_a_reference(p1_f3):
    lifted = LiftedCurve.canonical(p1_f3)
    x = FunctionFieldElement.x(p1_f3)
    local = lift_frobenius(lifted, place_at(p1_f3, 0), delta=x)
    generic = lift_frobenius(lifted)
    assert compute_u(local) == x
    assert compute_u(generic, reference=local) == -x
    assert compute_u(local, reference=local).is_zero()


def test_explicit_delta_shows_in_the_image(p1_f3):
    lifted = LiftedCurve.canonical(p1_f3)
    x = FunctionFieldElement.x(p1_f3)
    lift = lift_frobenius(lifted, place_at(p1_f3, 0), delta=x)
    assert lift.image(Coordinate.X) == "x^3 + 3*(x)"


def test_local_lifts_satisfy_the_curve_equation(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    for place in rational_places(elliptic_f5)[:-1]:
        lift = lift_frobenius(lifted, place, seed=11)
        assert lift.satisfies_curve_equation(), place
        assert lift.is_regular(), place


def test_ramified_lift_solves_for_delta(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    place = place_at(elliptic_f5, 0)
    assert place.branch == Branch.RAMIFIED
    lift = lift_frobenius(lifted, place, seed=3)
    f_prime = FunctionFieldElement(elliptic_f5, elliptic_f5.f.derivative())
    w = FunctionFieldElement(elliptic_f5, frobenius_defect(lifted))
    y = FunctionFieldElement.y(elliptic_f5)
    assert lift.delta * f_prime ** 5 == 2 * y ** 5 * lift.epsilon - w


def test_ramified_lift_keeps_y_fixed(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    for place in ramified_places(elliptic_f5):
        lift = ramified_lift(lifted, place)
        assert lift.epsilon.is_zero()
        assert lift.satisfies_curve_equation()
        assert lift.is_regular()
    with pytest.raises(InvalidSpecError):
        ramified_lift(lifted, place_at(elliptic_f5, 2))


def test_generic_lift_has_poles_at_two_ramified_places(elliptic_f5):
    # w = x^5 (1 + 4x^2 + 2x^4 + 3x^6 + x^8) vanishes to order 5 at x = 0 only
    lifted = LiftedCurve.canonical(elliptic_f5)
    family = canonical_family(lifted)
    missing = {place.id for place in family.missing_places()}
    assert missing == {place_at(elliptic_f5, 1).id, place_at(elliptic_f5, 4).id}
    assert not family.is_complete
    completed = complete_family(family)
    assert completed.is_complete
    assert [place.id for place in completed.places] == sorted(missing)
    assert canonical_family(LiftedCurve.canonical(CurveModel.projective_line(PrimeField(3)))).is_complete


def test_lifts_only_at_finite_rational_places(p1_f3):
    lifted = LiftedCurve.canonical(p1_f3)
    with pytest.raises(HenselFailureError):
        lift_frobenius(lifted, infinite_place(p1_f3))
    with pytest.raises(HenselFailureError):
        lift_frobenius(lifted, places_over(p1_f3, Polynomial([1, 0, 1], p1_f3.field))[0])


def test_irregular_delta_rejected(p1_f3):
    x = FunctionFieldElement.x(p1_f3)
    with pytest.raises(HenselFailureError):
        lift_frobenius(LiftedCurve.canonical(p1_f3), place_at(p1_f3, 0), delta=1 / x)


def test_families_are_reproducible(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    first = random_lift_family(lifted, seed=5)
    again = random_lift_family(lifted, seed=5)
    assert first.to_json() == again.to_json()
    assert len(first.places) >= 2
    assert first.is_complete
    place = first.places[0]
    assert first.at(place).place == place
    assert first.at(infinite_place(elliptic_f5)).is_generic


# ---------------------------------------------------------------- decomposition


@pytest.fixture
def family_f5(elliptic_f5):
    return random_lift_family(LiftedCurve.canonical(elliptic_f5), seed=2)


def test_canonical_family_has_no_h(p1_f3):
    f, h = maps_f_h(canonical_family(LiftedCurve.canonical(p1_f3)))
    x = FunctionFieldElement.x(p1_f3)
    assert h.is_zero()
    assert f.generic == RationalDifferential.dx(p1_f3) * x ** 2


@pytest.mark.parametrize("coordinate", [Coordinate.X, Coordinate.Y])
def test_f_h_closure_and_psi_identity(family_f5, coordinate):
    assert verify_f_h_closure(family_f5, coordinate).passed
    assert verify_psi_identity(family_f5, coordinate).passed


def test_f_h_closure_on_projective_line(p1_f3):
    family = random_lift_family(LiftedCurve.canonical(p1_f3), seed=9)
    check = verify_f_h_closure(family)
    assert check.status == "pass"
    assert check.detail["places"] == [place.id for place in family.places]


def test_psi_in_degree_zero(family_f5, elliptic_f5):
    x = FunctionFieldElement.x(elliptic_f5)
    image = psi(family_f5, 0, x)
    assert is_cocycle(image)
    assert adele_equal(image, mixed(rational_adele(x ** 5)))


def test_psi_degrees(family_f5, elliptic_f5):
    with pytest.raises(ValueError):
        psi(family_f5, 2, RationalDifferential.dx(elliptic_f5))
    with pytest.raises(TypeError):
        psi(family_f5, 1, FunctionFieldElement.x(elliptic_f5))


def test_linearity_and_h0(family_f5, elliptic_f5):
    x = FunctionFieldElement.x(elliptic_f5)
    y = FunctionFieldElement.y(elliptic_f5)
    samples = [x + 1, y / (x + 2)]
    assert verify_linearity(family_f5, samples).passed
    assert verify_h0(family_f5, samples).passed


def test_quasi_isomorphism(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    family_a = random_lift_family(lifted, seed=4)
    family_b = random_lift_family(lifted, seed=8)
    forms = [RationalDifferential.dx(elliptic_f5)] + canonical_basis(elliptic_f5)
    checks = verify_quasi_iso(family_a, family_b, forms)
    assert len(checks) == 3 * len(forms)
    assert all(check.passed for check in checks)


def family_of(lifted, *lifts):
    return complete_family(LiftFamily(lifted, lift_frobenius(lifted), tuple(sorted(lifts, key=lambda l: l.place.id))))


def test_quasi_isomorphism_with_a_ramified_lift_place(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    minus_one = place_at(elliptic_f5, 4)
    assert minus_one.branch == Branch.RAMIFIED
    split_at_3, split_at_2 = place_at(elliptic_f5, 3), place_at(elliptic_f5, 2)
    family_a = family_of(lifted, lift_frobenius(lifted, minus_one, seed=1), lift_frobenius(lifted, split_at_3, seed=2))
    family_b = family_of(lifted, lift_frobenius(lifted, split_at_3, seed=3), lift_frobenius(lifted, split_at_2, seed=4))
    x = FunctionFieldElement.x(elliptic_f5)
    dx = RationalDifferential.dx(elliptic_f5)
    forms = [dx, dx * x] + canonical_basis(elliptic_f5)
    checks = verify_quasi_iso(family_a, family_b, forms)
    assert len(checks) == 3 * len(forms)
    assert all(check.passed for check in checks)


def test_gap_witness_is_integral_only_for_complete_families(elliptic_f5):
    lifted = LiftedCurve.canonical(elliptic_f5)
    minus_one = place_at(elliptic_f5, 4)
    y = FunctionFieldElement.y(elliptic_f5)
    bare = LiftFamily(lifted, lift_frobenius(lifted), (lift_frobenius(lifted, minus_one, seed=1),))
    reference = canonical_family(lifted)
    # 1/y has a pole at the ramified place where only one family has a local lift
    with pytest.raises(NotIntegralError):
        lift_gap_witness(bare, reference, g=1 / y)
    witness = lift_gap_witness(complete_family(bare), complete_family(reference), g=1 / y)
    assert witness[(0, 0)].is_whole()
    with pytest.raises(InvalidSpecError):
        verify_quasi_iso(bare, complete_family(reference), canonical_basis(elliptic_f5))


def test_quasi_isomorphism_needs_one_lifted_curve(elliptic_f5):
    F5 = elliptic_f5.field
    canonical = LiftedCurve.canonical(elliptic_f5)
    # same f mod p, different lift mod p^2
    shifted = LiftedCurve(elliptic_f5, tuple(WittLength2(a0, a1, F5) for a0, a1 in ((0, 0), (4, 1), (0, 0), (1, 0))))
    forms = [RationalDifferential.dx(elliptic_f5)]
    with pytest.raises(InvalidSpecError):
        verify_quasi_iso(canonical_family(canonical), canonical_family(shifted), forms)
