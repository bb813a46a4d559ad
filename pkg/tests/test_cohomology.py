"""
Cocycles of second-kind differentials, the residue pairing and H^{0,1}
"""
from fractions import Fraction

import pytest

from src.adeles.adele import Adele, mixed
from src.adeles.cohomology import (
    cocycle_from_second_kind,
    first_kind_variant,
    gram_matrix,
    hodge_decomposition_check,
    is_coboundary_witness,
    local_primitive,
    pair_differentials,
    pairing,
    pairing_vector,
    primitive_witness,
    split_obstruction,
    try_coboundary_01,
)
from src.adeles.operators import is_cocycle
from src.algebra.fields import QQ
from src.algebra.polynomials import Polynomial
from src.curves.function_field import FunctionFieldElement
from src.curves.places import places_over
from src.derham.differentials import RationalDifferential, canonical_basis
from src.local.laurent import LaurentSeries
from src.utils.errors import (
    CharPObstructionError,
    NotClosedError,
    NotFirstKindError,
    NotSecondKindError,
    UnsupportedCharacteristicError,
)
from src.utils.sampling import make_rng, random_closed_01


def test_gram_matrix_of_elliptic_curve(elliptic_q):
    """<dx/y, x dx/y> = 4 on y^2 = x^3 - x"""
    assert gram_matrix(elliptic_q) == [[0, 4], [-4, 0]]


def test_gram_matrix_of_genus_two_curve(genus2_q):
    gram = gram_matrix(genus2_q)
    for i in range(4):
        for j in range(4):
            assert gram[i][j] == -gram[j][i]
    # H^{1,0} is isotropic
    assert all(gram[i][j] == 0 for i in range(2) for j in range(2))
    assert all(any(not gram[i][j].is_zero() for j in range(2, 4)) for i in range(2))


def test_pairing_vector_follows_reduction(elliptic_q):
    """x^2 dx/y is (1/3) dx/y in cohomology"""
    x = FunctionFieldElement.x(elliptic_q)
    y = FunctionFieldElement.y(elliptic_q)
    omega = RationalDifferential.of(elliptic_q, x ** 2 / y)
    assert pairing_vector(omega) == [0, Fraction(4, 3)]


def test_pairing_ignores_exact_forms(elliptic_q):
    x = FunctionFieldElement.x(elliptic_q)
    y = FunctionFieldElement.y(elliptic_q)
    omega = canonical_basis(elliptic_q)[1]
    shifted = omega + RationalDifferential.exact(y / x)
    basis = canonical_basis(elliptic_q)[0]
    assert pair_differentials(shifted, basis) == pair_differentials(omega, basis) == -4


def test_first_kind_variant_is_cohomologous(elliptic_q):
    dx_over_y, x_dx_over_y = canonical_basis(elliptic_q)
    beta = cocycle_from_second_kind(x_dx_over_y)
    assert pairing(first_kind_variant(dx_over_y), beta) == 4
    with pytest.raises(NotFirstKindError):
        first_kind_variant(x_dx_over_y)


def test_third_kind_has_no_cocycle(p1_q):
    with pytest.raises(NotSecondKindError):
        cocycle_from_second_kind(RationalDifferential.of(p1_q, 1 / FunctionFieldElement.x(p1_q)))


def test_extra_places_change_the_cocycle_by_a_coboundary(elliptic_q):
    omega = canonical_basis(elliptic_q)[1]
    places = places_over(elliptic_q, Polynomial([0, 1], QQ))
    moved = cocycle_from_second_kind(omega, extra_places=places)
    witness = primitive_witness(omega, places)
    assert is_coboundary_witness(moved - cocycle_from_second_kind(omega), witness)


def test_local_primitive_rejects_the_obstruction(p1_f3):
    (origin,) = places_over(p1_f3, Polynomial([0, 1], p1_f3.field))
    x = FunctionFieldElement.x(p1_f3)
    assert local_primitive(RationalDifferential.of(p1_f3, 1 + x), origin, 6).precision == 7
    # x^2 dx = d(x^3 / 3) has no primitive in characteristic 3
    with pytest.raises(CharPObstructionError):
        local_primitive(RationalDifferential.of(p1_f3, x ** 2), origin, 6)


def test_split_obstruction(p1_f3):
    (origin,) = places_over(p1_f3, Polynomial([0, 1], p1_f3.field))
    field = p1_f3.field
    exact, obstruction = split_obstruction(LaurentSeries({-2: 1, 1: 1, 2: 2, 5: 1}, 8, field, origin))
    assert exact == LaurentSeries({-2: 1, 1: 1}, 8, field, origin)
    assert obstruction == LaurentSeries({2: 2, 5: 1}, 8, field, origin)
    with pytest.raises(CharPObstructionError):
        split_obstruction(LaurentSeries({-4: 1}, 8, field, origin))


def test_polar_obstruction_blocks_the_cocycle(p1_f3):
    x = FunctionFieldElement.x(p1_f3)
    with pytest.raises(CharPObstructionError):
        cocycle_from_second_kind(RationalDifferential.of(p1_f3, 1 / x ** 4))


def test_integral_obstruction_stays_in_the_point_component(elliptic_f5):
    omega = canonical_basis(elliptic_f5)[1]
    alpha = cocycle_from_second_kind(omega, precision=12)
    remainder = alpha[(1, 0)].exceptions["inf"]
    assert all(i >= 0 and (i + 1) % 5 == 0 for i in remainder.coefficients)
    assert alpha[(0, 1)].exceptions["inf"].precision == 13
    assert is_cocycle(alpha)


def test_pairing_rejects_open_adeles(elliptic_q):
    dx_over_y, x_dx_over_y = canonical_basis(elliptic_q)
    broken = mixed(Adele(elliptic_q, (1, 0), default=dx_over_y, generic=x_dx_over_y))
    with pytest.raises(NotClosedError):
        pairing(broken, cocycle_from_second_kind(dx_over_y))


def test_closed_01_adeles_are_coboundaries(elliptic_q):
    rng = make_rng(7)
    for _ in range(3):
        beta = random_closed_01(elliptic_q, rng, 2)
        assert try_coboundary_01(beta) is not None


def test_coboundary_witness_needs_closed_input(elliptic_q):
    (origin,) = places_over(elliptic_q, Polynomial([0, 1], QQ))
    series = LaurentSeries({0: 1, 1: 1}, 6, QQ, origin)
    with pytest.raises(NotClosedError):
        try_coboundary_01(Adele(elliptic_q, (0, 1), exceptions={origin.id: series}))


def test_coboundary_witness_needs_characteristic_zero(elliptic_f5):
    with pytest.raises(UnsupportedCharacteristicError):
        try_coboundary_01(Adele(elliptic_f5, (0, 1)))


def test_naive_hodge_decomposition_fails(elliptic_q):
    rng = make_rng(1)
    samples = [random_closed_01(elliptic_q, rng, 2) for _ in range(2)]
    outcome = hodge_decomposition_check(elliptic_q, samples)
    assert outcome.witnesses_found == 2
    assert outcome.dim_h01 == 0
    assert outcome.self_pairing == 0
    assert outcome.dual_pairing == 1
    assert outcome.decomposition_fails
