"""
The Cartier operator and its inverse
"""
import pytest

from src.algebra.polynomials import RationalFunction
from src.curves.function_field import FunctionFieldElement
from src.derham.cartier import cartier, cartier_inverse, p_power_components
from src.derham.differentials import RationalDifferential, canonical_basis
from src.utils.errors import UnsupportedCharacteristicError


def test_p_power_components(p1_f3):
    field = p1_f3.field
    x = RationalFunction.x(field)
    h = x ** 5 + 2 * x ** 3 + x / (x + 1) ** 3
    components = p_power_components(h, 3)
    rebuilt = sum((u ** 3 * x ** i for i, u in enumerate(components)), RationalFunction.constant(0, field))
    assert rebuilt == h


def test_cartier_on_projective_line(p1_f3):
    x = FunctionFieldElement.x(p1_f3)
    dx = RationalDifferential.dx(p1_f3)
    assert cartier(dx).is_zero()
    assert cartier(x ** 2 * dx) == dx
    assert cartier(dx * (1 / x)) == dx * (1 / x)


def test_cartier_kills_exact_forms(p1_f3, elliptic_f5):
    for curve in (p1_f3, elliptic_f5):
        x = FunctionFieldElement.x(curve)
        for g in (x ** 4 + 1 / x, x / (x + 1) ** 2):
            assert cartier(RationalDifferential.exact(g)).is_zero()
    y = FunctionFieldElement.y(elliptic_f5)
    assert cartier(RationalDifferential.exact(y / (FunctionFieldElement.x(elliptic_f5) - 2))).is_zero()


def test_cartier_of_holomorphic_form(elliptic_f5):
    """y^2 = x^3 - x over F_5 is ordinary: C(dx/y) = 3 dx/y"""
    omega = canonical_basis(elliptic_f5)[0]
    assert cartier(omega) == omega * 3


def test_cartier_undoes_its_inverse(elliptic_f5):
    x = FunctionFieldElement.x(elliptic_f5)
    y = FunctionFieldElement.y(elliptic_f5)
    for g in (x, y / (x + 1), x ** 2 * y + 3):
        omega = RationalDifferential.of(elliptic_f5, g)
        assert cartier(cartier_inverse(omega)) == omega


def test_cartier_inverse_formula(p1_f3):
    x = FunctionFieldElement.x(p1_f3)
    omega = RationalDifferential.of(p1_f3, x + 1)
    assert cartier_inverse(omega) == RationalDifferential.of(p1_f3, (x + 1) ** 3 * x ** 2)


def test_characteristic_zero_rejected(elliptic_q):
    with pytest.raises(UnsupportedCharacteristicError):
        cartier(canonical_basis(elliptic_q)[0])
    with pytest.raises(UnsupportedCharacteristicError):
        cartier_inverse(canonical_basis(elliptic_q)[0])
