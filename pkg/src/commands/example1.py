"""
example1: closed (0, 1) adeles are coboundaries, yet H^{1,0} alone cannot
fill H^1, so the naive Hodge decomposition fails in characteristic 0
"""
from loguru import logger

from ..adeles.cohomology import hodge_decomposition_check
from ..config.run_config import RunConfig
from ..curves.model import CurveModel
from ..utils.errors import InvalidSpecError, UnsupportedCharacteristicError
from ..utils.report import Check, Report
from ..utils.sampling import make_rng, random_closed_01
from .base import Command

SAMPLE_PLACES = 2


class Example1Command(Command):
    name = "example1"

    def build(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        if curve.characteristic != 0:
            raise UnsupportedCharacteristicError("example1 needs a curve over Q")
        if curve.genus < 1:
            raise InvalidSpecError("example1 needs a curve of genus at least one", {"genus": curve.genus})

        rng = make_rng(config.seed)
        samples = [random_closed_01(curve, rng, SAMPLE_PLACES, config.precision) for _ in range(config.samples)]
        if not samples:
            logger.warning("example1 called with no samples; the H^(0,1) sweep is vacuous")
            report.add(Check.skipped("h01_witnesses", "no samples"))

        outcome = hodge_decomposition_check(curve, samples)
        report.add_result("samples", outcome.samples)
        report.add_result("witnesses_found", outcome.witnesses_found)
        report.add_result("dim_h10", outcome.dim_h10)
        report.add_result("dim_h01", outcome.dim_h01)
        report.add_result("dim_h1", outcome.dim_h1)
        report.add_result("self_pairing", outcome.self_pairing)
        report.add_result("dual_pairing", outcome.dual_pairing)

        if samples:
            self.check(
                report,
                "h01_witnesses",
                lambda: (outcome.witnesses_found == outcome.samples, {"failures": outcome.failures}),
            )
        self.check(report, "h10_isotropic", lambda: outcome.self_pairing is not None and outcome.self_pairing.is_zero())
        self.check(
            report,
            "dual_cocycle_found",
            lambda: outcome.dual_pairing is not None and outcome.dual_pairing == curve.field.one(),
        )
        self.check(report, "naive_decomposition_fails", lambda: outcome.decomposition_fails)


example1_command = Example1Command()


def cmd_example1(curve: CurveModel, config: RunConfig) -> Report:
    return example1_command.run(curve, config)
