__all__ = ["BuildSurface"]


import numpy as np

from core.report import RunReport, Table
from gauss_maps.energy import (
    anti_holomorphic_energy,
    energy_density_defect,
    gauss_map_composite_norm,
    harmonic_residual,
    hopf_differential,
    total_curvature_integral,
)
from scenarios.base import Base
from tags.scenario import Scenario
from tags.sign import Sign


class BuildSurface(Base):
    """Builds the induced Gauss maps F_+- and checks their Hopf differentials,
    the harmonic map equation and the energy density identity."""

    scenario = Scenario.BUILD_SURFACE
    primary = "anti_holomorphic_energy"

    def execute(self, report: RunReport) -> None:
        config = self.config
        pair = self.pair()
        grid = self.grid
        mask = grid.interior_mask(3)
        weight = pair.phi.exp_minus_phi.values[mask]
        Phi = pair.Phi.evaluate(grid.z)[mask]
        scale = np.sqrt(np.sum(weight * np.abs(Phi) ** 2))

        for sign in Sign:
            F = pair.F(sign)
            tag = "plus" if sign == Sign.PLUS else "minus"
            report.require(f"orientation_preserving_{tag}", F.is_orientation_preserving())
            hopf = hopf_differential(F).values[mask]
            defect = np.sqrt(np.sum(weight * np.abs(hopf - int(sign) * Phi) ** 2))
            if scale > 0.0:
                report.add_metric(f"hopf_error_{tag}", defect / scale, config.check_tol)
            else:
                report.add_metric(f"hopf_error_{tag}", defect, config.check_tol)
            report.add_metric(f"harmonic_residual_{tag}", harmonic_residual(F), config.check_tol)
            report.add_metric(f"energy_density_defect_{tag}", energy_density_defect(F, pair.phi), config.check_tol)

        measured, predicted = gauss_map_composite_norm(pair)
        gap = np.abs(measured.values - predicted.values)[mask]
        report.add_metric("composite_norm_error", float(np.max(gap)), config.check_tol)

        energy = anti_holomorphic_energy(pair.phi)
        report.add_metric("anti_holomorphic_energy", energy)
        report.add_metric("total_curvature", total_curvature_integral(pair.phi))
        report.add_metric("sup_mu_F", pair.mu_plus.sup_norm, 1.0)

        traces = Table(("theta", "arg_F_plus", "arg_F_minus"))
        for theta, a, b in zip(grid.theta_nodes, pair.F_plus.trace_angles, pair.F_minus.trace_angles):
            traces.append(float(theta), float(a), float(b))
        report.add_table("traces", traces)
