__all__ = ["mess_forward", "compose_coefficient", "chart_pullback"]


import numpy as np

from gauss.solver import solve_gauss
from gauss_maps.pair import build_pair
from geometry.field import ComplexField
from mess.point import CotangentPoint, MessImage
from quasiconformal.beltrami import BeltramiCoefficient
from quasiconformal.solver import QCMap, solve_beltrami
from tags.normalization import Normalization
from tags.sign import Sign
from utils.logger import get_logger


logger = get_logger(__name__)


def chart_pullback(mu_F: BeltramiCoefficient, chart: QCMap) -> np.ndarray:
    """Returns z*(mu_F) = mu_F(z(x)) conj(z_x) / z_x at the nodes of the chart."""
    slope = chart.dz.values
    return mu_F.at(chart.values.values) * np.conj(slope) / slope


def compose_coefficient(mu_chart: np.ndarray, pulled: np.ndarray) -> np.ndarray:
    """Coefficient (mu + M) / (1 + conj(mu) M) of F o z given mu of z and M = z*(mu_F)."""
    return (mu_chart + pulled) / (1.0 + np.conj(mu_chart) * pulled)


def mess_forward(p: CotangentPoint, tol: float = 1e-10) -> MessImage:
    """
    Maps (mu, Phi) to the Beltrami coefficients of z_+- = F_+- o z.

    The base chart z = w_mu is a three-point normalized Beltrami solve; the
    Gauss equation for Phi is solved on the z-disc, the induced Gauss maps
    F_+- are built there, and their coefficients are carried back through the
    chart by the composition rule.

    Args:
        p (CotangentPoint): The cotangent point.
        tol (float): Tolerance of every solve.

    Returns:
        MessImage: Target coefficients and boundary traces.

    Raises:
        NormTooLargeError: If a solve leaves the solver regime.
        NormViolationError: If a composed coefficient reaches modulus 1.
        ConvergenceError: Propagated from the solvers.
    """
    grid = p.grid
    chart = solve_beltrami(p.mu_base, Normalization.THREE_POINT, tol)
    pair = build_pair(solve_gauss(p.Phi, grid, tol), tol=tol)
    mu_chart = p.mu_base.values
    boundary = chart.boundary_trace
    targets, traces = {}, {}
    for sign in (Sign.PLUS, Sign.MINUS):
        pulled = chart_pullback(pair.mu(sign), chart)
        targets[sign] = BeltramiCoefficient(ComplexField(grid, compose_coefficient(mu_chart, pulled)))
        image, _, _ = pair.F(sign).evaluate(boundary)
        traces[sign] = np.unwrap(np.angle(image))
    logger.info(
        "Mess image of %r: sup targets (%.4g, %.4g)",
        p,
        targets[Sign.PLUS].sup_norm,
        targets[Sign.MINUS].sup_norm,
    )
    return MessImage(
        targets[Sign.PLUS],
        targets[Sign.MINUS],
        traces[Sign.PLUS],
        traces[Sign.MINUS],
        chart,
        pair,
    )
