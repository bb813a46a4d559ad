"""
Shared curves for the test suite
"""
import pytest

from src.algebra.fields import QQ, PrimeField
from src.curves.model import CurveModel


@pytest.fixture
def p1_q():
    return CurveModel.projective_line(QQ)


@pytest.fixture
def elliptic_q():
    """y^2 = x^3 - x over Q"""
    return CurveModel.hyperelliptic(QQ, [0, -1, 0, 1])


@pytest.fixture
def genus2_q():
    """y^2 = x^5 + 1 over Q"""
    return CurveModel.hyperelliptic(QQ, [1, 0, 0, 0, 0, 1])


@pytest.fixture
def p1_f3():
    return CurveModel.projective_line(PrimeField(3))


@pytest.fixture
def elliptic_f5():
    return CurveModel.hyperelliptic(PrimeField(5), [0, -1, 0, 1])


@pytest.fixture
def elliptic_f7():
    return CurveModel.hyperelliptic(PrimeField(7), [0, -1, 0, 1])
