"""
cartier: C and C^{-1} of a differential in characteristic p
"""
from ..config.run_config import RunConfig
from ..curves.model import CurveModel
from ..derham.cartier import cartier, cartier_inverse
from ..derham.differentials import RationalDifferential
from ..utils.errors import UnsupportedCharacteristicError
from ..utils.parsing import parse_differential
from ..utils.report import Report
from ..utils.sampling import make_rng, random_nonzero_element
from .base import Command


class CartierCommand(Command):
    name = "cartier"

    def build(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        p = curve.characteristic
        if p == 0:
            raise UnsupportedCharacteristicError("cartier needs a curve over F_p")
        omega = parse_differential(config.omega, curve)
        image = cartier(omega)
        preimage = cartier_inverse(omega)
        report.add_result("omega", repr(omega))
        report.add_result("cartier", repr(image))
        report.add_result("cartier_inverse", repr(preimage))

        self.check(report, "cartier_of_inverse_is_identity", lambda: cartier(preimage) == omega)

        g = random_nonzero_element(curve, make_rng(config.seed))
        dg = RationalDifferential.exact(g)
        self.check(
            report,
            "cartier_of_log_form",
            lambda: (cartier(dg * g ** (p - 1)) == dg, {"g": g.to_json()}),
        )
        self.check(report, "kills_exact_forms", lambda: cartier(dg).is_zero())


cartier_command = CartierCommand()


def cmd_cartier(curve: CurveModel, config: RunConfig) -> Report:
    return cartier_command.run(curve, config)
