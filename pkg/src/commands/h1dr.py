"""
h1dr: genus, dimension of H^1_dR, the basis x^i dx/y and the Hodge dimension
"""
from ..config.run_config import RunConfig
from ..curves.model import CurveModel
from ..derham.differentials import DifferentialKind, canonical_basis, classify, first_kind_basis, hodge_dimension
from ..derham.reduction import reduce_to_basis
from ..utils.report import Report
from .base import Command


class H1DRCommand(Command):
    name = "h1dr"

    def build(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        basis = canonical_basis(curve)
        genus = curve.genus
        report.add_result("genus", genus)
        report.add_result("dim_h1_dr", len(basis))
        report.add_result("hodge_dimension", hodge_dimension(curve))
        report.add_result("basis", [repr(omega) for omega in basis])

        self.check(report, "dimension_is_2g", lambda: len(basis) == 2 * genus)
        self.check(report, "hodge_dimension_is_g", lambda: hodge_dimension(curve) == genus)
        self.check(
            report,
            "first_kind_basis",
            lambda: all(classify(omega) == DifferentialKind.FIRST_KIND for omega in first_kind_basis(curve)),
        )
        self.check(
            report,
            "second_kind_basis",
            lambda: all(classify(omega) != DifferentialKind.NEITHER for omega in basis),
        )
        for i, omega in enumerate(basis):
            self.check(report, f"reduces_to_unit_vector[{i}]", lambda omega=omega, i=i: self._is_unit_vector(omega, i))

    @staticmethod
    def _is_unit_vector(omega, i: int):
        coordinates = reduce_to_basis(omega).coordinates
        passed = all(c == c.field.one() if j == i else c.is_zero() for j, c in enumerate(coordinates))
        return passed, {"coordinates": [c.to_json() for c in coordinates]}


h1dr_command = H1DRCommand()


def cmd_h1dr(curve: CurveModel, config: RunConfig) -> Report:
    return h1dr_command.run(curve, config)
