__all__ = ["Convergence", "CAUCHY_RATIO"]


from core.report import RunReport, Table
from gauss.solver import solve_gauss
from gauss_maps.energy import anti_holomorphic_energy
from geometry.grid import make_grid
from scenarios.base import Base
from tags.scenario import Scenario


#: largest allowed quotient of successive differences
CAUCHY_RATIO = 0.5


class Convergence(Base):
    """Solves the Gauss equation on grids with the configured radial counts
    and checks that each energy difference between successive levels is at
    most half the previous one."""

    scenario = Scenario.CONVERGENCE
    primary = "finest_difference"

    def execute(self, report: RunReport) -> None:
        config = self.config
        grid = self.grid
        energies = []
        for n_r in config.levels:
            level = make_grid(n_r, grid.n_theta, grid.R)
            phi = solve_gauss(self.Phi, level, config.solver_tol)
            energies.append(anti_holomorphic_energy(phi))
            self.logger.debug("level n_r=%d: energy %.12e", n_r, energies[-1])

        table = Table(("n_r", "energy", "difference", "ratio"))
        differences = [abs(b - a) for a, b in zip(energies, energies[1:])]
        for index, (n_r, energy) in enumerate(zip(config.levels, energies)):
            difference = differences[index - 1] if index > 0 else float("nan")
            ratio = float("nan")
            if index > 1 and differences[index - 2] > 0.0:
                ratio = difference / differences[index - 2]
            table.append(n_r, energy, difference, ratio)
        report.add_table("convergence", table)

        report.add_metric("finest_energy", energies[-1])
        if differences:
            report.add_metric("finest_difference", differences[-1])
            report.require(
                "cauchy_halving",
                all(later <= CAUCHY_RATIO * earlier for earlier, later in zip(differences, differences[1:])),
            )
