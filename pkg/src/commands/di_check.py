"""
di-check: the adelic Deligne-Illusie suite in characteristic p
"""
from typing import Dict, List

from ..charp.decomposition import (
    maps_f_h,
    verify_f_h_closure,
    verify_h0,
    verify_linearity,
    verify_psi_identity,
    verify_quasi_iso,
)
from ..charp.lifting import Coordinate, LiftedCurve, LiftFamily, canonical_family, random_lift_family
from ..config.run_config import RunConfig
from ..curves.function_field import FunctionFieldElement
from ..curves.model import CurveModel
from ..curves.places import rational_places
from ..derham.differentials import RationalDifferential, canonical_basis
from ..utils.errors import UnsupportedCharacteristicError
from ..utils.report import Report
from ..utils.sampling import make_rng, random_nonzero_element
from .base import Command

LIFT_PLACES = 2
PROPERTY_SAMPLES = 4


def sample_forms(curve: CurveModel) -> List[RationalDifferential]:
    """dx, x dx and the basis x^i dx/y"""
    x = FunctionFieldElement.x(curve)
    dx = RationalDifferential.dx(curve)
    return [dx, dx * x] + canonical_basis(curve)


class DICheckCommand(Command):
    name = "di-check"

    def build(self, report: Report, curve: CurveModel, config: RunConfig) -> None:
        if curve.characteristic in (0, 2):
            raise UnsupportedCharacteristicError("di-check needs a curve over F_p with p odd")
        lifted = LiftedCurve.canonical(curve)
        finite = [place for place in rational_places(curve) if not place.is_at_infinity]
        n_places = min(LIFT_PLACES, len(finite))
        coordinates = [Coordinate.X, Coordinate.Y] if curve.is_hyperelliptic else [Coordinate.X]

        families: Dict[str, LiftFamily] = {}

        def build_families() -> bool:
            families["canonical"] = canonical_family(lifted)
            families["a"] = random_lift_family(lifted, config.seed, n_places)
            families["b"] = random_lift_family(lifted, config.seed + 1, n_places)
            return True

        self.check(report, "lift_families", build_families)
        if len(families) < 3:
            return
        report.add_result("lifted_curve", lifted.to_json())
        report.add_result("families", {key: family.to_json() for key, family in families.items()})

        self.check(report, "canonical_lift", lambda: self._canonical_is_frobenius(families["canonical"], coordinates))
        for key in ("a", "b"):
            family = families[key]
            for coordinate in coordinates:
                label = f"{key}.{{}}[{coordinate.value}]"
                self.check(
                    report,
                    label.format("f_h_closure"),
                    lambda: verify_f_h_closure(family, coordinate, config.precision),
                )
                self.check(report, label.format("psi_identity"), lambda: verify_psi_identity(family, coordinate))

        rng = make_rng(config.seed)
        samples = [random_nonzero_element(curve, rng) for _ in range(PROPERTY_SAMPLES)]
        family = families["a"]
        self.check(report, "linearity", lambda: verify_linearity(family, samples))
        self.check(report, "h0", lambda: verify_h0(family, samples))
        self.check(
            report,
            "quasi_iso",
            lambda: verify_quasi_iso(families["a"], families["b"], sample_forms(curve), config.precision),
        )

    @staticmethod
    def _canonical_is_frobenius(family: LiftFamily, coordinates: List[Coordinate]):
        """With only the generic lift, h = 0 and f(dx') = x^{p-1} dx"""
        curve = family.curve
        p = family.lifted_curve.p
        x = FunctionFieldElement.x(curve)
        expected = RationalDifferential.dx(curve) * x ** (p - 1)
        f, h = maps_f_h(family, Coordinate.X)
        passed = h.is_zero() and f.generic == expected and f.default == expected
        for coordinate in coordinates:
            passed = passed and verify_f_h_closure(family, coordinate).passed
        return passed, {"lifts": family.generic.to_json()}


di_check_command = DICheckCommand()


def cmd_di_check(curve: CurveModel, config: RunConfig) -> Report:
    return di_check_command.run(curve, config)
