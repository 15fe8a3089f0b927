__all__ = ["LieCheck"]


import math

import numpy as np

from core.report import RunReport, Table
from deformation.closed import mu_H_dot_closed, pulled_back
from deformation.lie import MIN_ORDER, ahlfors_residual, lie_check
from deformation.scenario import DeformationScenario
from geometry.differential import TangentField
from geometry.field import ComplexField
from scenarios.base import Base
from tags.quantity import Quantity
from tags.scenario import Scenario
from tags.sign import Sign


#: q = 0.4 gives a direction of sup-norm 0.1 on the disc
DEFAULT_DIRECTION = (0.4,)

#: bound on the conformal-factor drift of the target velocities
AHLFORS_TOL = 2e-3


class LieCheck(Base):
    """Compares every closed-form Lie derivative with Richardson finite
    differences along the configured deformation family."""

    scenario = Scenario.LIE_CHECK
    primary = "max_rel_error"

    def deformation(self) -> DeformationScenario:
        config = self.config
        nu_plus = self.direction(config.nu_plus)
        nu_minus = self.direction(config.nu_minus)
        nu_source = self.direction(config.nu_source)
        if nu_plus is None and nu_minus is None and nu_source is None:
            nu_plus = TangentField(DEFAULT_DIRECTION, self.grid)
        return DeformationScenario(self.pair(), nu_source, nu_plus, nu_minus, config.epsilons, config.solver_tol)

    def execute(self, report: RunReport) -> None:
        config = self.config
        scenario = self.deformation()
        signs = [
            sign
            for sign in Sign
            if scenario.nu_target(sign) is not None or scenario.nu_source is not None
        ]
        table = Table(("quantity", "sign", "rel_error", "order"))
        worst = 0.0
        for sign in signs:
            tag = "plus" if sign == Sign.PLUS else "minus"
            for quantity in Quantity:
                name = f"{quantity.name.lower()}_{tag}"
                result = lie_check(scenario, quantity, sign)
                worst = max(worst, result.rel_error)
                report.add_metric(f"rel_error_{name}", result.rel_error, config.check_tol)
                if math.isnan(result.order_estimate):
                    report.add_note(f"order_{name}", "below noise floor")
                else:
                    report.add_metric(f"order_{name}", result.order_estimate)
                    report.require(f"order_{name}_quadratic", result.order_estimate >= MIN_ORDER)
                table.append(quantity.name, sign.name, result.rel_error, result.order_estimate)

            F = scenario.pair.F(sign)
            nu_f = scenario.nu_source if scenario.nu_source is not None else ComplexField.zeros(self.grid)
            pulled = pulled_back(scenario.nu_target(sign), F)
            mu_F = scenario.pair.mu(sign).field
            through_lie = mu_H_dot_closed(nu_f, pulled, mu_F, through_lie=True)
            direct = mu_H_dot_closed(nu_f, pulled, mu_F, through_lie=False)
            gap = float(np.max(np.abs(through_lie.values - direct.values)))
            report.add_metric(f"mu_H_dot_consistency_{tag}", gap, 1e-12 * max(1.0, direct.sup()))
        report.add_metric("max_rel_error", worst)
        report.add_table("lie", table)

        for sign in Sign:
            tag = "plus" if sign == Sign.PLUS else "minus"
            nu = scenario.nu_target(sign)
            if nu is None:
                report.add_note(f"ahlfors_residual_{tag}", "no target direction")
                continue
            residual = ahlfors_residual(nu, config.epsilons, config.solver_tol)
            report.add_metric(f"ahlfors_residual_{tag}", residual, AHLFORS_TOL)
