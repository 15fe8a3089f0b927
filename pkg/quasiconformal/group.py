__all__ = [
    "group_law",
    "right_translation_pullback",
    "pullback_beltrami",
    "measured_coefficient",
    "compose_inverse",
]


from typing import Callable, Optional, Union

import numpy as np

from geometry.differential import TangentField
from geometry.field import ComplexField, Field, same_grid
from geometry.operators import d_z, d_zbar
from quasiconformal.beltrami import BeltramiCoefficient
from quasiconformal.solver import QCMap, solve_beltrami
from tags.normalization import Normalization
from utils.errors import InvalidParameterError, VanishingDerivativeError
from utils.logger import get_logger


logger = get_logger(__name__)


Pullable = Union[TangentField, BeltramiCoefficient, Callable[[np.ndarray], np.ndarray]]


def _solved(mu: BeltramiCoefficient, w_mu: Optional[QCMap], tol: float) -> QCMap:
    if w_mu is None:
        return solve_beltrami(mu, Normalization.THREE_POINT, tol)
    if w_mu.grid != mu.grid:
        raise InvalidParameterError(f"solved map lives on {w_mu.grid!r}, coefficient on {mu.grid!r}")
    return w_mu


def compose_inverse(w_mu: QCMap, targets: np.ndarray):
    """
    Locates the preimages x = w_mu^{-1}(y) and the holomorphic derivative there.

    Returns:
        Tuple[np.ndarray, np.ndarray]: The preimages and w_z evaluated at them.
    """
    x = w_mu.inverse(targets)
    _, w_z, _ = w_mu.evaluate(x)
    return x, w_z


def group_law(
    nu: BeltramiCoefficient,
    mu: BeltramiCoefficient,
    tol: float = 1e-10,
    w_mu: Optional[QCMap] = None,
) -> BeltramiCoefficient:
    """
    Beltrami coefficient lambda of w_nu o w_mu^{-1}.

    At y = w_mu(x) the coefficient is
    lambda(y) = (nu - mu) / (1 - nu conj(mu)) * w_z / conj(w_z), all evaluated at x.
    The preimages of the grid nodes are found by Newton inversion of w_mu;
    both coefficients are read off by interpolation and vanish outside the
    sampled disc.

    Args:
        nu (BeltramiCoefficient): Coefficient of the left factor.
        mu (BeltramiCoefficient): Coefficient of the inverted factor.
        tol (float): Solver tolerance used when ``w_mu`` is not supplied.
        w_mu (Optional[QCMap]): A three-point normalized solve of ``mu``.

    Returns:
        BeltramiCoefficient: lambda on the common grid.

    Raises:
        GridMismatchError: If the coefficients live on different grids.
        InverseInterpolationError: If w_mu cannot be inverted at some node.
    """
    grid = same_grid(nu.field, mu.field)
    if mu.is_zero:
        return BeltramiCoefficient(nu.field)
    w_mu = _solved(mu, w_mu, tol)
    x, w_z = compose_inverse(w_mu, grid.z)
    left, right = nu.at(x), mu.at(x)
    values = (left - right) / (1.0 - left * np.conj(right)) * w_z / np.conj(w_z)
    return BeltramiCoefficient(ComplexField(grid, values))


def right_translation_pullback(
    nu: TangentField,
    mu: BeltramiCoefficient,
    tol: float = 1e-10,
    w_mu: Optional[QCMap] = None,
) -> ComplexField:
    """
    Right translation R(nu, mu) = (nu / (1 - |mu|^2) * w_z / conj(w_z)) o w_mu^{-1}.

    This is the derivative of the group law in its left argument at nu = mu,
    so R(nu, 0) = nu and R is complex linear in nu. ``nu`` is evaluated from
    its closed form at the preimages.

    Raises:
        GridMismatchError: If ``nu`` and ``mu`` live on different grids.
        InverseInterpolationError: If w_mu cannot be inverted at some node.
    """
    grid = same_grid(nu.field, mu.field)
    if mu.is_zero:
        return nu.field
    w_mu = _solved(mu, w_mu, tol)
    x, w_z = compose_inverse(w_mu, grid.z)
    base = mu.at(x)
    values = nu.evaluate(x) / (1.0 - np.abs(base) ** 2) * w_z / np.conj(w_z)
    return ComplexField(grid, values)


def _evaluator(nu: Pullable) -> Callable[[np.ndarray], np.ndarray]:
    if isinstance(nu, TangentField):
        return nu.evaluate
    if isinstance(nu, BeltramiCoefficient):
        return nu.at
    if callable(nu):
        return nu
    raise InvalidParameterError(f"cannot pull back {type(nu).__name__}")


def pullback_beltrami(nu: Pullable, F: QCMap) -> ComplexField:
    """
    Pullback F*(nu) = nu(F) conj(F_z) / F_z of a Beltrami differential.

    Args:
        nu (Pullable): A tangent field (closed form), a sampled coefficient
            (interpolated, zero outside its disc) or a callable of the target point.
        F (QCMap): The map the differential is pulled back along.

    Returns:
        ComplexField: F*(nu) on the grid of F.
    """
    values = _evaluator(nu)(F.values.values)
    slope = F.dz.values
    return ComplexField(F.grid, values * np.conj(slope) / slope)


def measured_coefficient(values: Field, floor: float = 1e-12) -> ComplexField:
    """
    Beltrami coefficient d_zbar w / d_z w of grid samples of a map.

    Raises:
        VanishingDerivativeError: If |d_z w| drops below ``floor`` times its maximum.
    """
    w_z = d_z(values)
    modulus = np.abs(w_z.values)
    if np.min(modulus) <= floor * np.max(modulus):
        raise VanishingDerivativeError("d_z of the sampled map vanishes on the grid")
    return d_zbar(values) / w_z
