"""
Adele arithmetic, the differentials D' and D'', cup product and integration
"""
import pytest

from src.adeles.adele import (
    Adele,
    MixedAdele,
    adele_equal,
    mixed,
    rational_adele,
    serialize_adele,
    unit_adele,
)
from src.adeles.cohomology import cocycle_from_second_kind
from src.adeles.operators import cup, d_double_prime, d_prime, integrate, is_cocycle, total_differential
from src.algebra.fields import QQ
from src.algebra.polynomials import Polynomial
from src.curves.function_field import FunctionFieldElement
from src.curves.places import infinite_place, places_over
from src.derham.differentials import RationalDifferential, canonical_basis
from src.local.laurent import LaurentSeries
from src.utils.errors import FieldMismatchError, NotIntegralError


@pytest.fixture
def origin(p1_q):
    (place,) = places_over(p1_q, Polynomial([0, 1], QQ))
    return place


def local(coefficients, place, precision=8):
    return LaurentSeries(coefficients, precision, place.residue_field, place)


def test_construction_rules(p1_q, origin):
    with pytest.raises(ValueError):
        Adele(p1_q, (2, 0))
    with pytest.raises(ValueError):
        Adele(p1_q, (0, 1), generic=FunctionFieldElement(p1_q, 1))
    with pytest.raises(FieldMismatchError):
        Adele(p1_q, (0, 0), exceptions={"elsewhere": local({0: 1}, origin)})
    with pytest.raises(ValueError):
        mixed()


def test_rational_adeles_are_diagonal(p1_q, origin):
    x = FunctionFieldElement.x(p1_q)
    a = rational_adele(x)
    assert a.punctures == {infinite_place(p1_q).id}
    assert a.component(origin, 4).coefficient(1) == 1
    assert d_double_prime(mixed(a)).is_zero()
    assert not d_prime(mixed(a)).is_zero()
    assert is_cocycle(unit_adele(p1_q))


def test_linear_structure(p1_q, origin):
    x = FunctionFieldElement.x(p1_q)
    punctures = [origin.id, infinite_place(p1_q).id]
    exceptions = {origin.id: local({-1: 1, 2: 3}, origin)}
    a = Adele(p1_q, (0, 0), default=x, exceptions=exceptions, generic=x, punctures=punctures)
    assert (a - a).is_zero()
    assert (a + a).punctures == set(punctures)
    assert adele_equal(mixed(a + a), mixed(a.scale(2)))
    assert (a + (-a)).is_zero()


def test_total_differential_squares_to_zero(elliptic_q):
    curve = elliptic_q
    place = infinite_place(curve)
    x = FunctionFieldElement.x(curve)
    b = Adele(curve, (0, 0), default=x, exceptions={place.id: local({0: 2, 1: 1, 3: 5}, place)}, generic=1 / x)
    once = total_differential(mixed(b))
    assert not once.is_zero()
    assert total_differential(once).is_zero()


def test_second_kind_cocycle_is_closed(elliptic_q):
    alpha = cocycle_from_second_kind(canonical_basis(elliptic_q)[1])
    assert is_cocycle(alpha)
    assert alpha.degrees == (1,)


def test_unit_is_neutral_for_cup(elliptic_q):
    alpha = cocycle_from_second_kind(canonical_basis(elliptic_q)[1])
    assert adele_equal(cup(unit_adele(elliptic_q), alpha), alpha)


def test_integration_sums_residues(p1_q, origin):
    dx_over_x = RationalDifferential.of(p1_q, 1 / FunctionFieldElement.x(p1_q))
    assert integrate(mixed(Adele(p1_q, (1, 1), default=dx_over_x))) == 0
    patched = Adele(p1_q, (1, 1), default=dx_over_x, exceptions={origin.id: local({-1: 2}, origin)})
    assert integrate(mixed(patched)) == 1


def test_point_components_must_be_integral(p1_q, origin):
    x = FunctionFieldElement.x(p1_q)
    # t^-1 dt at the origin would give integral(D a) = -1
    with pytest.raises(NotIntegralError):
        Adele(p1_q, (1, 0), exceptions={origin.id: local({-1: 1}, origin)})
    with pytest.raises(NotIntegralError):
        Adele(p1_q, (0, 0), default=1 / x, generic=1 / x)
    regular = Adele(p1_q, (0, 0), default=1 / x, exceptions={origin.id: local({0: 1}, origin)}, generic=1 / x)
    assert regular.is_whole()
    # (gen, x) components are unrestricted
    assert not Adele(p1_q, (1, 1), exceptions={origin.id: local({-1: 1}, origin)}).is_zero()


def test_punctured_adeles_cannot_be_integrated(p1_q, origin):
    a = Adele(p1_q, (1, 0), exceptions={origin.id: local({-2: 1}, origin)}, punctures=[origin.id])
    exact = total_differential(mixed(a))
    with pytest.raises(NotIntegralError):
        integrate(exact)


def test_integration_needs_bidegree_one_one(p1_q):
    with pytest.raises(ValueError):
        integrate(unit_adele(p1_q))


def test_serialization_is_canonical(p1_q, origin):
    x = FunctionFieldElement.x(p1_q)
    punctures = [origin.id, infinite_place(p1_q).id]
    exceptions = {origin.id: local({-1: 1, 1: 2}, origin, 3)}
    a = Adele(p1_q, (0, 0), default=x, exceptions=exceptions, generic=x, punctures=punctures)
    document = serialize_adele(a)
    assert document["bidegree"] == [0, 0]
    assert document["punctures"] == sorted(punctures)
    assert document["exceptions"] == [
        {"place": origin.id, "min_exponent": -1, "precision": 3, "coefficients": ["1", "0", "2", "0"]}
    ]
    assert serialize_adele(MixedAdele(p1_q, [a]))["components"] == [document]
