"""
pairing: the adelic residue pairing of two second-kind differentials, or
the Gram matrix of the basis cocycles
"""
from fractions import Fraction
from typing import List

import sympy

from ..adeles.cohomology import gram_matrix, pair_differentials
from ..algebra.fields import FieldElement
from ..config.run_config import RunConfig
from ..curves.model import CurveModel
from ..derham.reduction import reduce_to_basis
from ..utils.parsing import parse_differential
from ..utils.report import Report
from .base import Command


def _to_sympy(c: FieldElement) -> sympy.Rational:
    if c.field.characteristic:
        return sympy.Integer(int(c))
    return sympy.Rational(c.numerator, c.denominator)


def determinant(matrix: List[List[FieldElement]], field) -> FieldElement:
    if not matrix:
        return field.one()
    det = sympy.Matrix([[_to_sympy(c) for c in row] for row in matrix]).det()
    return field.convert(Fraction(int(det.p), int(det.q)))


class PairingCommand(Command):
    name = "pairing"

    def build(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        if config.gram:
            self._gram(report, curve, config)
        if config.omega is not None and config.omega2 is not None:
            self._pair(report, curve, config)

    def _gram(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        matrix = gram_matrix(curve, config.precision)
        report.add_result("gram", matrix)
        n, g = len(matrix), curve.genus
        self.check(
            report,
            "antisymmetric",
            lambda: all(matrix[i][j] == -matrix[j][i] for i in range(n) for j in range(n)),
        )
        self.check(
            report,
            "first_kind_isotropic",
            lambda: all(matrix[i][j].is_zero() for i in range(g) for j in range(g)),
        )
        det = determinant(matrix, curve.field)
        report.add_result("determinant", det)
        self.check(report, "nondegenerate", lambda: not det.is_zero())

    def _pair(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        omega1 = parse_differential(config.omega, curve)
        omega2 = parse_differential(config.omega2, curve)
        value = pair_differentials(omega1, omega2, config.precision)
        report.add_result("pairing", value)

        def descends():
            # <w1, w2> = c1^T G c2 on classes
            c1 = reduce_to_basis(omega1).coordinates
            c2 = reduce_to_basis(omega2).coordinates
            matrix = gram_matrix(curve, config.precision)
            expected = curve.field.zero()
            for i, a in enumerate(c1):
                for j, b in enumerate(c2):
                    expected = expected + a * matrix[i][j] * b
            return expected == value, {"via_classes": expected.to_json()}

        self.check(report, "descends_to_cohomology", descends)


pairing_command = PairingCommand()


def cmd_pairing(curve: CurveModel, config: RunConfig) -> Report:
    return pairing_command.run(curve, config)
