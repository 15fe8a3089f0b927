__all__ = ["SymplecticCheck", "PotentialCheck"]


from core.report import RunReport, Table
from deformation.closed import energy_first_variation
from deformation.lie import energy_fd
from scenarios.base import Base
from symplectic.basis import TangentBasis, random_unitary, remix_basis
from symplectic.verify import verify_kahler_potential, verify_symplectomorphism
from tags.scenario import Scenario
from tags.sign import Sign
from tags.weight import PullbackWeight


REMIX_SEED = 20240501
BASIS_INDEPENDENCE_TOL = 1e-8
ENERGY_FLOOR = 1e-8


class SymplecticCheck(Base):
    """Compares the canonical form with -Mess_+* omega_WP + Mess_-* omega_WP
    on a truncated monomial basis, with both pullback weights, and repeats
    the comparison on a re-mixed basis."""

    scenario = Scenario.SYMPLECTIC_CHECK
    primary = "discrepancy"

    def execute(self, report: RunReport) -> None:
        config = self.config
        pair = self.pair()
        basis = TangentBasis.monomials(config.basis_size, self.grid)

        result = verify_symplectomorphism(pair, basis, basis, config.check_tol, PullbackWeight.JACOBIAN)
        report.add_metric("discrepancy", result.discrepancy, config.check_tol)
        report.add_metric("max_entry_discrepancy", result.max_entry)

        sigma = verify_symplectomorphism(pair, basis, basis, config.check_tol, PullbackWeight.SIGMA)
        report.add_metric("discrepancy_sigma", sigma.discrepancy, config.check_tol)

        unitary = random_unitary(len(basis), REMIX_SEED)
        remixed = remix_basis(basis, unitary)
        shuffled = verify_symplectomorphism(pair, remixed, remixed, config.check_tol, PullbackWeight.SIGMA)
        report.add_metric(
            "basis_independence",
            abs(shuffled.discrepancy - sigma.discrepancy),
            BASIS_INDEPENDENCE_TOL,
        )

        table = Table(("row", "column", "omega_c", "mess_pullback"))
        labels = result.labels
        for j, row in enumerate(labels):
            for k, column in enumerate(labels):
                table.append(row, column, float(result.canonical[j, k]), float(result.pulled[j, k]))
        report.add_table("forms", table)


class PotentialCheck(Base):
    """Checks that the energy is a Kaehler potential on both sections and
    that its first variation matches full-pipeline finite differences."""

    scenario = Scenario.POTENTIAL_CHECK
    primary = "energy_first_variation_error"

    def execute(self, report: RunReport) -> None:
        config = self.config
        pair = self.pair()
        basis = TangentBasis.monomials(config.basis_size, self.grid)
        table = Table(("sign", "row", "column", "route_a_re", "route_a_im", "route_b_re", "route_b_im"))
        for sign in Sign:
            tag = "plus" if sign == Sign.PLUS else "minus"
            result = verify_kahler_potential(pair, basis, sign, config.check_tol)
            report.add_metric(f"potential_discrepancy_{tag}", result.discrepancy, config.check_tol)
            for j in range(result.route_a.shape[0]):
                for k in range(result.route_a.shape[1]):
                    a, b = result.route_a[j, k], result.route_b[j, k]
                    table.append(sign.name, j, k, float(a.real), float(a.imag), float(b.real), float(b.imag))
        report.add_table("potential", table)

        direction = basis[0]
        closed = energy_first_variation(direction, pair)
        measured = energy_fd(pair, direction, config.epsilons, config.solver_tol)
        scale = max(abs(closed), abs(measured))
        error = abs(closed - measured) / scale if scale > ENERGY_FLOOR else abs(closed - measured)
        report.add_metric("energy_first_variation_error", error, config.check_tol)
        report.add_note("energy_first_variation", f"{closed.real:.12e}{closed.imag:+.12e}j")
        report.add_note("energy_first_variation_fd", f"{measured.real:.12e}{measured.imag:+.12e}j")
