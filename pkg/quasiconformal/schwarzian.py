__all__ = ["schwarzian", "bers_embedding", "exterior_density"]


import numpy as np

from geometry.field import ComplexField, Field
from geometry.grid import AnnulusGrid
from geometry.operators import d_z
from quasiconformal.beltrami import BeltramiCoefficient
from quasiconformal.solver import laurent_series, solve_beltrami
from tags.normalization import Normalization
from utils.errors import InvalidParameterError, NormTooLargeError, VanishingDerivativeError
from utils.logger import get_logger


logger = get_logger(__name__)


BERS_REGIME = 0.3


def _check_slope(slope: np.ndarray, floor: float) -> None:
    modulus = np.abs(slope)
    if np.min(modulus) < floor * np.max(modulus):
        raise VanishingDerivativeError(
            f"holomorphic derivative vanishes on the grid (min |f'| = {np.min(modulus):.3e})"
        )


def schwarzian(f: Field, floor: float = 1e-12) -> ComplexField:
    """
    Schwarzian derivative (f_zz / f_z)_z - (f_zz / f_z)^2 / 2 of holomorphic samples.

    Args:
        f (Field): Samples of a holomorphic function on a polar grid.
        floor (float): Relative threshold below which f_z counts as vanishing.

    Returns:
        ComplexField: The Schwarzian at every node.

    Raises:
        VanishingDerivativeError: If f_z vanishes somewhere on the grid.
    """
    first = d_z(f)
    _check_slope(first.values, floor)
    ratio = d_z(first) / first
    return d_z(ratio) - 0.5 * ratio * ratio


def exterior_density(grid: AnnulusGrid) -> np.ndarray:
    """Hyperbolic density 4 / (|z|^2 - 1)^2 of the exterior disc at the nodes."""
    return 4.0 / (np.abs(grid.z) ** 2 - 1.0) ** 2


def bers_embedding(
    mu: BeltramiCoefficient,
    exterior: AnnulusGrid,
    tol: float = 1e-10,
    floor: float = 1e-12,
) -> ComplexField:
    """
    Schwarzian of w^mu on exterior samples, with mu extended by zero outside the disc.

    Outside the truncated disc w^mu = z + sum_{n<0} c_n z^n is holomorphic, so
    the Schwarzian is computed from the derivatives of the series and is
    independent of the Moebius normalization.

    Args:
        mu (BeltramiCoefficient): Coefficient on a disc grid, sup-norm <= 0.3.
        exterior (AnnulusGrid): Samples beyond the truncation radius.
        tol (float): Beltrami solver tolerance.

    Returns:
        ComplexField: S(w^mu) on ``exterior``.

    Raises:
        NormTooLargeError: If sup |mu| > 0.3.
        ConvergenceError: If the Beltrami solve does not converge.
    """
    if mu.sup_norm > BERS_REGIME:
        raise NormTooLargeError(f"sup |mu| = {mu.sup_norm:.4g} exceeds the Bers regime {BERS_REGIME}")
    if exterior.r_in <= mu.grid.R:
        raise InvalidParameterError(
            f"exterior samples must lie beyond R = {mu.grid.R}, got r_in = {exterior.r_in}"
        )
    if mu.is_zero:
        return ComplexField.zeros(exterior)
    w = solve_beltrami(mu, Normalization.SERIES, tol)
    _, first, second, third = laurent_series(w.laurent, exterior.z)
    first = 1.0 + first
    _check_slope(first, floor)
    values = third / first - 1.5 * (second / first) ** 2
    logger.debug("Bers embedding: sup |S| = %.4e on %r", np.max(np.abs(values)), exterior)
    return ComplexField(exterior, values)
