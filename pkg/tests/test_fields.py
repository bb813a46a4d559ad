"""
Scalar fields: Q, F_p and extension towers
"""
from fractions import Fraction

import pytest

from src.algebra.fields import QQ, ExtensionField, PrimeField, trace_to_base
from src.utils.errors import DivisionByZeroError, FieldMismatchError, ReducibleError


def test_rational_arithmetic():
    a, b = QQ(Fraction(1, 2)), QQ(3)
    assert a + b == QQ(Fraction(7, 2))
    assert a * b == Fraction(3, 2)
    assert (b / a) == 6
    assert QQ.sqrt(QQ(Fraction(9, 4))) == Fraction(3, 2)
    assert QQ.sqrt(QQ(2)) is None


def test_prime_field_reduces_and_inverts():
    F7 = PrimeField(7)
    assert F7(10) == 3
    assert F7(3).inverse() == 5
    assert F7(Fraction(1, 2)) == 4
    with pytest.raises(DivisionByZeroError):
        F7(0).inverse()
    with pytest.raises(DivisionByZeroError):
        F7(Fraction(1, 7))


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(9)


def test_prime_field_square_roots():
    F5 = PrimeField(5)
    assert F5.sqrt(F5(4)) ** 2 == 4
    assert F5.sqrt(F5(2)) is None


def test_mixing_fields_fails():
    with pytest.raises(FieldMismatchError):
        PrimeField(5)(1) + PrimeField(7)(1)
    assert PrimeField(5)(1) != PrimeField(7)(1)


def test_extension_of_f3():
    """F_9 = F_3[z]/(z^2 + 1)"""
    F3 = PrimeField(3)
    F9 = ExtensionField(F3, [1, 0, 1])
    z = F9.generator
    assert z * z == -1
    assert F9.order == 9
    assert len(list(F9.elements())) == 9
    assert (z + 1).inverse() * (z + 1) == 1
    assert trace_to_base(z) == 0
    assert trace_to_base(F9(2)) == 1


def test_frobenius_inverse_on_extension():
    F9 = ExtensionField(PrimeField(3), [1, 0, 1])
    a = F9.generator + 2
    assert a.p_th_root() ** 3 == a


def test_sqrt_in_finite_extension():
    F9 = ExtensionField(PrimeField(3), [1, 0, 1])
    # every element of F_3 is a square in F_9
    assert F9.sqrt(F9(2)) ** 2 == 2


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleError):
        ExtensionField(PrimeField(5), [-1, 0, 1])
    with pytest.raises(ReducibleError):
        ExtensionField(QQ, [-4, 0, 1])


def test_number_field_trace():
    K = ExtensionField(QQ, [-2, 0, 1], name="r")
    r = K.generator
    assert r * r == 2
    assert trace_to_base(r + 3) == 6
    with pytest.raises(FieldMismatchError):
        r.p_th_root()
