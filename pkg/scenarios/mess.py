__all__ = ["MessForward", "MessRoundtrip"]


import numpy as np

from core.report import RunReport, Table
from mess.forward import chart_pullback, mess_forward
from mess.inverse import mess_pointwise_invert
from mess.point import MessImage
from scenarios.base import Base
from tags.scenario import Scenario


RECOVERY_TOL = 1e-6
RECOVERED_SHARE = 0.99


class MessForward(Base):
    """Maps the base cotangent point to the Beltrami coefficients of z_+-."""

    scenario = Scenario.MESS_FORWARD
    primary = "sup_mu_plus_target"

    def forward(self, report: RunReport) -> MessImage:
        image = mess_forward(self.point(), self.config.solver_tol)
        report.add_metric("sup_mu_plus_target", image.mu_plus_target.sup_norm, 1.0)
        report.add_metric("sup_mu_minus_target", image.mu_minus_target.sup_norm, 1.0)
        report.add_metric("chart_residual", image.chart.residual)
        report.require("traces_increasing", image.traces_increasing())

        traces = Table(("index", "trace_plus", "trace_minus"))
        for index, (plus, minus) in enumerate(zip(image.trace_plus, image.trace_minus)):
            traces.append(index, float(plus), float(minus))
        report.add_table("traces", traces)
        return image

    def execute(self, report: RunReport) -> None:
        self.forward(report)


class MessRoundtrip(MessForward):
    """Forward Mess map followed by the pointwise inversion of the composition
    rule, recovering (mu_z, z*(mu_F+)) node by node."""

    scenario = Scenario.MESS_ROUNDTRIP
    primary = "recovery_error"

    def execute(self, report: RunReport) -> None:
        image = self.forward(report)
        a, b = mess_pointwise_invert(image.mu_plus_target.field, image.mu_minus_target.field)
        expected_a = self.point().mu_base.values
        expected_b = chart_pullback(image.pair.mu_plus, image.chart)
        error = np.abs(a.values - expected_a) + np.abs(b.values - expected_b)
        mask = self.grid.interior_mask(3)
        share = float(np.mean(error[mask] <= RECOVERY_TOL))
        report.add_metric("recovery_error", float(np.max(error[mask])))
        report.add_metric("recovered_share", share)
        report.require("recovered", share >= RECOVERED_SHARE)
