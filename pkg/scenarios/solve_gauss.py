__all__ = ["SolveGauss"]


import numpy as np

from core.report import RunReport, Table
from gauss.factor import curvature
from gauss.solver import solve_gauss
from gauss_maps.energy import anti_holomorphic_energy, total_curvature_integral
from scenarios.base import Base
from tags.scenario import Scenario


LIOUVILLE_TOL = 1e-9


class SolveGauss(Base):
    """Solves the Gauss equation and checks the curvature identity
    K = -1 + |Phi|^2 e^{-2 phi} on every ring below the boundary."""

    scenario = Scenario.SOLVE_GAUSS
    primary = "energy"

    def execute(self, report: RunReport) -> None:
        config = self.config
        phi = solve_gauss(self.Phi, self.grid, config.solver_tol)
        report.add_metric("residual", phi.residual_sup, 10.0 * config.solver_tol)
        report.add_note("iterations", phi.iterations)

        mask = self.grid.interior_mask(1)
        modulus = np.abs(self.Phi.evaluate(self.grid.z)) ** 2
        K = curvature(phi).values
        identity = np.abs(K + 1.0 - modulus * phi.exp_minus_phi.values**2)
        report.add_metric("curvature_identity", float(np.max(identity[mask])), config.check_tol)

        u = phi.u.values
        report.add_metric("phi_minus_psi", float(np.max(np.abs(u))))
        report.add_note("phi_equals_psi", bool(np.max(np.abs(u)) < LIOUVILLE_TOL))
        report.require("w_nonnegative", bool(np.min(u) >= -config.solver_tol))

        energy = anti_holomorphic_energy(phi)
        report.add_metric("energy", energy)
        report.add_metric("total_curvature", total_curvature_integral(phi))

        profile = Table(("r", "u", "K"))
        for index, radius in enumerate(self.grid.r_nodes):
            profile.append(float(radius), float(u[index, 0]), float(K[index, 0]))
        report.add_table("profile", profile)
