"""
Witt vectors of length two and polynomials over them
"""
import pytest

from src.algebra.fields import PrimeField
from src.algebra.polynomials import Polynomial
from src.algebra.witt import LiftedPolynomial, WittLength2
from src.utils.errors import ModulusMismatchError

F3 = PrimeField(3)
F5 = PrimeField(5)


def test_arithmetic_is_mod_p_squared():
    a, b = WittLength2.from_integer(7, F3), WittLength2.from_integer(5, F3)
    assert (a + b).to_integer() == 3
    assert (a * b).to_integer() == 35 % 9
    assert (a - b).to_integer() == 2
    assert (-a).to_integer() == 2
    assert (a ** 3).to_integer() == pow(7, 3, 9)


def test_digits_and_reduction():
    w = WittLength2.from_integer(13, F5)
    assert (w.a0.value, w.a1.value) == (3, 2)
    assert w.reduce() == 3


def test_divide_by_p():
    assert WittLength2(0, 4, F5).divide_by_p() == 4
    with pytest.raises(ValueError):
        WittLength2(1, 0, F5).divide_by_p()


def test_moduli_must_match():
    with pytest.raises(ModulusMismatchError):
        WittLength2(1, 0, F3) + WittLength2(1, 0, F5)


def test_frobenius_defect_of_x_cubed_minus_x():
    """Digit lift of x^3 - x over F_3 is x^3 + 2x"""
    f = LiftedPolynomial.lift(Polynomial([0, -1, 0, 1], F3))
    difference = f.substitute_power(3) - f ** 3
    assert difference.reduce().is_zero()
    defect = difference.divide_by_p()
    # (x^3 + 2x)^3 = x^9 + 6x^7 + 12x^5 + 8x^3 mod 9
    assert defect == Polynomial([0, 0, 0, 1, 0, 2, 0, 1], F3)


def test_lift_reduces_back():
    g = Polynomial([2, 0, 1, 4], F5)
    assert LiftedPolynomial.lift(g).reduce() == g
