"""
residues: local residues of a differential at its poles and their sum
"""
from ..config.run_config import RunConfig
from ..curves.model import CurveModel
from ..derham.differentials import classify, residues
from ..local.expansion import residue_at, sum_of_residues
from ..utils.parsing import parse_differential
from ..utils.report import Report
from .base import Command


class ResiduesCommand(Command):
    name = "residues"

    def build(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        omega = parse_differential(config.omega, curve)
        report.add_result("omega", repr(omega))
        report.add_result("kind", classify(omega).value)
        report.add_result(
            "residues",
            [
                {"place": place.id, "local": value, "traced": residue_at(omega, place)}
                for place, value in residues(omega)
            ],
        )
        total = sum_of_residues(omega, curve)
        report.add_result("sum", total)
        self.check(report, "residue_theorem", lambda: total.is_zero())


residues_command = ResiduesCommand()


def cmd_residues(curve: CurveModel, config: RunConfig) -> Report:
    return residues_command.run(curve, config)
