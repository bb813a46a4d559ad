"""
Seeded random checks of the algebraic identities the adele complex rests on
"""
import pytest

from src.adeles.adele import Adele, mixed, rational_poles
from src.adeles.cohomology import basis_cocycles, cocycle_from_second_kind, pair_differentials, pairing
from src.adeles.operators import cup, integrate, is_cocycle, total_differential
from src.curves.places import infinite_place, random_rational_places
from src.derham.cartier import cartier
from src.derham.differentials import RationalDifferential, pole_places
from src.local.expansion import expand, sum_of_residues
from src.local.laurent import LaurentSeries
from src.utils.sampling import (
    make_rng,
    random_differential,
    random_element,
    random_nonzero_element,
    random_scalar,
    random_second_kind,
)

SEEDS = [0, 1, 2]
PRECISION = 10


def random_series(place, rng, lowest=0, terms=4):
    field = place.residue_field
    return LaurentSeries({lowest + i: random_scalar(field, rng) for i in range(terms)}, PRECISION, field, place)


def random_point_adele(curve, form_degree, rng):
    """Integral adele of bidegree (form_degree, 0), with a component at every pole of its default"""
    sample = random_element if form_degree == 0 else random_differential
    default, generic = sample(curve, rng), sample(curve, rng)
    places = {place.id: place for place in rational_poles(default) + random_rational_places(curve, 2, rng)}
    exceptions = {place_id: random_series(place, rng) for place_id, place in places.items()}
    return Adele(curve, (form_degree, 0), default=default, exceptions=exceptions, generic=generic)


def random_chain_adele(curve, form_degree, rng):
    sample = random_element if form_degree == 0 else random_differential
    exceptions = {place.id: random_series(place, rng, lowest=-2) for place in random_rational_places(curve, 2, rng)}
    return Adele(curve, (form_degree, 1), default=sample(curve, rng), exceptions=exceptions)


def random_degree_zero(curve, rng):
    return mixed(random_point_adele(curve, 0, rng))


def random_degree_one(curve, rng):
    return mixed(random_point_adele(curve, 1, rng), random_chain_adele(curve, 0, rng))


# ---------------------------------------------------------------- the complex


@pytest.mark.parametrize("seed", SEEDS)
def test_total_differential_squares_to_zero_on_random_adeles(elliptic_q, seed):
    rng = make_rng(seed)
    for a in (random_degree_zero(elliptic_q, rng), random_degree_one(elliptic_q, rng)):
        assert total_differential(total_differential(a)).is_zero()


@pytest.mark.parametrize("seed", SEEDS)
def test_exact_adeles_integrate_to_zero(elliptic_q, elliptic_f5, seed):
    rng = make_rng(seed)
    for curve in (elliptic_q, elliptic_f5):
        assert integrate(total_differential(random_degree_one(curve, rng))) == 0


@pytest.mark.parametrize("seed", SEEDS)
def test_cup_product_satisfies_leibniz(elliptic_q, seed):
    rng = make_rng(seed)
    zero_a, zero_b = random_degree_zero(elliptic_q, rng), random_degree_zero(elliptic_q, rng)
    one = random_degree_one(elliptic_q, rng)
    for a, b, degree_a in ((zero_a, zero_b, 0), (zero_a, one, 0), (one, zero_b, 1)):
        left = total_differential(cup(a, b))
        right = cup(total_differential(a), b) + cup(a, total_differential(b)).scale((-1) ** degree_a)
        assert (left - right).is_zero(), (a, b)


# ---------------------------------------------------------------- the pairing


@pytest.mark.parametrize("seed", SEEDS)
def test_pairing_is_unchanged_by_coboundaries(elliptic_q, seed):
    rng = make_rng(seed)
    alpha, beta = basis_cocycles(elliptic_q)
    shifted = alpha + total_differential(random_degree_zero(elliptic_q, rng))
    assert is_cocycle(shifted)
    assert pairing(shifted, beta) == pairing(alpha, beta)
    assert pairing(beta, shifted) == pairing(beta, alpha)


@pytest.mark.parametrize("seed", SEEDS)
def test_pairing_is_skew_symmetric(elliptic_q, seed):
    rng = make_rng(seed)
    omega, eta = random_second_kind(elliptic_q, rng), random_second_kind(elliptic_q, rng)
    assert pair_differentials(omega, eta) == -pair_differentials(eta, omega)
    assert pair_differentials(omega, omega) == 0


@pytest.mark.parametrize("seed", SEEDS)
def test_primitive_constants_do_not_change_the_class(elliptic_q, seed):
    rng = make_rng(seed)
    omega = random_second_kind(elliptic_q, rng)
    constants = {place.id: random_scalar(place.residue_field, rng) for place in pole_places(omega)}
    plain = cocycle_from_second_kind(omega, precision=24)
    shifted = cocycle_from_second_kind(omega, constants=constants, precision=24)
    for beta in basis_cocycles(elliptic_q):
        assert pairing(shifted, beta) == pairing(plain, beta)


# ---------------------------------------------------------------- local data


@pytest.mark.parametrize("seed", SEEDS)
def test_residue_theorem_on_random_forms(elliptic_q, genus2_q, elliptic_f5, seed):
    rng = make_rng(seed)
    for curve in (elliptic_q, genus2_q, elliptic_f5):
        omega = random_differential(curve, rng)
        assert sum_of_residues(omega) == 0, omega


@pytest.mark.parametrize("seed", SEEDS)
def test_expansion_is_a_ring_homomorphism(elliptic_q, elliptic_f5, seed):
    rng = make_rng(seed)
    for curve in (elliptic_q, elliptic_f5):
        g, h = random_nonzero_element(curve, rng), random_nonzero_element(curve, rng)
        for place in random_rational_places(curve, 2, rng) + [infinite_place(curve)]:
            G, H = expand(g, place, 8), expand(h, place, 8)
            assert expand(g * h, place, 8).agrees_with(G * H), place
            assert expand(g + h, place, 8).agrees_with(G + H), place


@pytest.mark.parametrize("curve_name", ["p1_f3", "elliptic_f5", "elliptic_f7"])
@pytest.mark.parametrize("seed", SEEDS)
def test_cartier_of_logarithmic_power(request, curve_name, seed):
    curve = request.getfixturevalue(curve_name)
    p = curve.field.characteristic
    g = random_nonzero_element(curve, make_rng(seed))
    dg = RationalDifferential.exact(g)
    assert cartier(dg * g ** (p - 1)) == dg
