"""
Truncated Laurent series
"""
import pytest

from src.algebra.fields import QQ, PrimeField
from src.local.laurent import LaurentSeries
from src.utils.errors import (
    CharPObstructionError,
    FieldMismatchError,
    InsufficientPrecisionError,
    NonzeroResidueError,
)


def series(coefficients, precision, field=QQ):
    return LaurentSeries(coefficients, precision, field)


def test_coefficients_past_precision_are_dropped():
    s = series({0: 1, 5: 2}, 3)
    assert s.coefficients == {0: QQ(1)}
    with pytest.raises(InsufficientPrecisionError):
        s.coefficient(3)


def test_product_precision():
    # (t^-1 + O(t^3)) * (1 + t + O(t^4)) is known to O(t^3)
    product = series({-1: 1}, 3) * series({0: 1, 1: 1}, 4)
    assert product.precision == 3
    assert product.coefficient(-1) == 1
    assert product.coefficient(0) == 1


def test_geometric_inverse():
    inverse = series({0: 1, 1: -1}, 6).inverse()
    assert all(inverse.coefficient(i) == 1 for i in range(6))
    assert (series({1: 2}, 5).inverse()).valuation() == -1


def test_inverse_of_vanishing_series():
    with pytest.raises(InsufficientPrecisionError):
        series({}, 4).inverse()


def test_powers_and_division():
    s = series({0: 1, 1: 1}, 5)
    assert (s ** 2).coefficient(1) == 2
    assert ((s ** 2) / s).agrees_with(s)


def test_derivative_and_antiderivative():
    s = series({-2: 3, 0: 1, 2: 5}, 6)
    back = s.antiderivative().derivative()
    assert back.agrees_with(s)


def test_antiderivative_rejects_residue():
    with pytest.raises(NonzeroResidueError):
        series({-1: 1}, 4).antiderivative()


def test_antiderivative_obstruction_in_characteristic_p():
    F3 = PrimeField(3)
    with pytest.raises(CharPObstructionError):
        series({2: 1}, 5, F3).antiderivative()
    assert series({0: 1, 1: 1}, 2, F3).antiderivative().coefficient(2) == 2


def test_series_at_different_places_do_not_mix():
    a = LaurentSeries({0: 1}, 3, QQ, place="a")
    b = LaurentSeries({0: 1}, 3, QQ, place="b")
    with pytest.raises(FieldMismatchError):
        a + b
