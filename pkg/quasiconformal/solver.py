__all__ = ["QCMap", "solve_beltrami", "SOLVER_REGIME"]


from typing import Optional, Tuple

import numpy as np
from scipy.spatial import cKDTree

from geometry.field import ComplexField
from geometry.grid import DiscGrid
from geometry.operators import d_z, d_zbar
from quasiconformal.beltrami import BeltramiCoefficient
from quasiconformal.conformal import RiemannMap
from quasiconformal.mobius import Mobius
from quasiconformal.transform import cauchy_transform
from tags.normalization import Normalization
from utils.errors import (
    ConvergenceError,
    InvalidParameterError,
    InverseInterpolationError,
    NormTooLargeError,
)
from utils.logger import get_logger


logger = get_logger(__name__)


SOLVER_REGIME = 0.5
THREE_POINT_SOURCES = (0.0, np.pi, 1.5 * np.pi)
THREE_POINT_TARGETS = (1.0, -1.0, -1.0j)


Triple = Tuple[np.ndarray, np.ndarray, np.ndarray]


class QCMap:
    """
    A solved quasiconformal map w with w_zbar = mu w_z.

    The map is stored as a holomorphic post-composition of the map
    z + g(z), where g is the Cauchy potential of the solver and is
    holomorphic outside the grid with g = O(1/z). For the three-point
    normalization the post-composition is a Moebius map of the disc after
    the inverse Riemann map of the image region; for the series
    normalization it is a Moebius map fixing the 2-jet at the origin.

    Derivatives are propagated by the chain rule, so the stored d_z and
    d_zbar samples satisfy the Beltrami equation to the tolerance of the
    fixed-point iteration on every ring but the last.
    """

    def __init__(
        self,
        mu: BeltramiCoefficient,
        normalization: Normalization,
        potential: np.ndarray,
        laurent: np.ndarray,
        outer: Mobius,
        riemann: Optional[RiemannMap],
        iterations: int,
    ) -> None:
        grid = mu.grid
        self.__mu = mu
        self.__normalization = normalization
        self.__laurent = laurent
        self.__outer = outer
        self.__riemann = riemann
        self.__iterations = iterations
        self.__g = ComplexField(grid, potential)
        self.__g_z = d_z(self.__g)
        self.__g_zbar = d_zbar(self.__g)
        inner = grid.z + potential
        value, slope = self._outer(inner)
        self.__values = ComplexField(grid, value)
        self.__dz = ComplexField(grid, slope * (1.0 + self.__g_z.values))
        self.__dzbar = ComplexField(grid, slope * self.__g_zbar.values)
        self.__tree = None
        rings = np.abs(self.__dzbar.values[:-1] - mu.values[:-1] * self.__dz.values[:-1])
        scale = np.max(np.abs(self.__dz.values[:-1]))
        self.__residual = float(np.max(rings) / scale)

    @property
    def mu(self) -> BeltramiCoefficient:
        """Returns the Beltrami coefficient of the map."""
        return self.__mu

    @property
    def grid(self) -> DiscGrid:
        """Returns the grid of the samples."""
        return self.__mu.grid

    @property
    def normalization(self) -> Normalization:
        """Returns the normalization tag."""
        return self.__normalization

    @property
    def values(self) -> ComplexField:
        """Returns w at the grid nodes."""
        return self.__values

    @property
    def dz(self) -> ComplexField:
        """Returns w_z at the grid nodes."""
        return self.__dz

    @property
    def dzbar(self) -> ComplexField:
        """Returns w_zbar at the grid nodes."""
        return self.__dzbar

    @property
    def boundary_trace(self) -> np.ndarray:
        """Returns w on the last ring |z| = R, one value per angular node."""
        return self.__values.values[-1, :].copy()

    @property
    def trace_angles(self) -> np.ndarray:
        """Returns the unwrapped arguments of the boundary trace."""
        return np.unwrap(np.angle(self.boundary_trace))

    @property
    def residual(self) -> float:
        """Returns sup |w_zbar - mu w_z| / sup |w_z| off the last ring."""
        return self.__residual

    @property
    def iterations(self) -> int:
        """Returns the number of fixed-point iterations used."""
        return self.__iterations

    @property
    def laurent(self) -> np.ndarray:
        """Returns c_{-1}, c_{-2}, ... of z + g(z) outside the grid."""
        return self.__laurent

    @property
    def outer(self) -> Mobius:
        """Returns the Moebius part of the post-composition."""
        return self.__outer

    def is_orientation_preserving(self) -> bool:
        """Returns whether |w_z| > |w_zbar| at every node."""
        return bool(np.all(np.abs(self.__dz.values) > np.abs(self.__dzbar.values)))

    def inner(self, points: np.ndarray) -> Triple:
        """Evaluates z + g(z) with its Wirtinger derivatives at arbitrary points."""
        points = np.asarray(points, dtype=complex)
        grid = self.grid
        inside = np.abs(points) <= grid.R
        g = np.zeros(points.shape, dtype=complex)
        g_z = np.zeros(points.shape, dtype=complex)
        g_zbar = np.zeros(points.shape, dtype=complex)
        if np.any(inside):
            g[inside] = self.__g.at(points[inside])
            g_z[inside] = self.__g_z.at(points[inside])
            g_zbar[inside] = self.__g_zbar.at(points[inside])
        outside = ~inside
        if np.any(outside) and self.__laurent.size:
            series, slope, _, _ = laurent_series(self.__laurent, points[outside])
            g[outside] = series
            g_z[outside] = slope
        return points + g, 1.0 + g_z, g_zbar

    def evaluate(self, points: np.ndarray) -> Triple:
        """
        Evaluates w, w_z and w_zbar at arbitrary points of the disc.

        Args:
            points (np.ndarray): Complex points with |z| < 1.

        Returns:
            Triple: Values and the two Wirtinger derivatives.
        """
        inner, inner_z, inner_zbar = self.inner(points)
        value, slope = self._outer(inner)
        return value, slope * inner_z, slope * inner_zbar

    def circle_values(self, angles: np.ndarray) -> np.ndarray:
        """Returns the boundary values w(e^{i sigma}) on the unit circle."""
        angles = np.asarray(angles, dtype=float)
        if self.__riemann is not None:
            return self.__outer(np.exp(1j * self.__riemann.preimage_angle(angles)))
        inner, _, _ = self.inner(np.exp(1j * angles))
        return self.__outer(inner)

    def inverse(self, targets: np.ndarray, tol: float = 1e-12, maxiter: int = 40) -> np.ndarray:
        """
        Solves w(x) = y for every target y by Newton's method.

        The iteration is seeded from the grid node whose image is nearest to
        the target and uses the real-linear update
        dx = (conj(w_z) e - w_zbar conj(e)) / (|w_z|^2 - |w_zbar|^2).

        Args:
            targets (np.ndarray): Complex points in the image of the disc.
            tol (float): Absolute tolerance on |w(x) - y|.
            maxiter (int): Newton step budget.

        Returns:
            np.ndarray: Preimages with the shape of ``targets``.

        Raises:
            InverseInterpolationError: If some target does not converge.
        """
        targets = np.asarray(targets, dtype=complex)
        flat = targets.ravel()
        if self.__tree is None:
            nodes = self.__values.flat
            self.__tree = cKDTree(np.column_stack([nodes.real, nodes.imag]))
        _, nearest = self.__tree.query(np.column_stack([flat.real, flat.imag]))
        x = self.grid.z.ravel()[nearest]
        error = np.full(flat.size, np.inf)
        for _ in range(maxiter):
            value, w_z, w_zbar = self.evaluate(x)
            e = flat - value
            error = np.abs(e)
            if np.all(error <= tol * np.maximum(1.0, np.abs(flat))):
                break
            step = (np.conj(w_z) * e - w_zbar * np.conj(e)) / (np.abs(w_z) ** 2 - np.abs(w_zbar) ** 2)
            x = x + step
            radius = np.abs(x)
            x = np.where(radius > 0.999, x * 0.999 / np.maximum(radius, 1e-300), x)
        failed = np.flatnonzero(~(error <= tol * np.maximum(1.0, np.abs(flat))))
        if failed.size:
            raise InverseInterpolationError("Newton inversion did not converge", failed)
        return x.reshape(targets.shape)

    def _outer(self, inner: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        if self.__riemann is None:
            return self.__outer(inner), self.__outer.derivative(inner)
        preimage, slope = self.__riemann.inverse(inner)
        return self.__outer(preimage), self.__outer.derivative(preimage) * slope

    def __repr__(self) -> str:
        return (
            f"QCMap({self.grid!r}, {self.__normalization.name}, "
            f"sup_mu={self.__mu.sup_norm:.4g}, residual={self.__residual:.3e})"
        )


def laurent_series(coefficients: np.ndarray, points: np.ndarray):
    """Evaluates sum_{n<0} c_n z^n and its first three derivatives."""
    modes = -np.arange(1, coefficients.size + 1)
    powers = np.power.outer(np.asarray(points, dtype=complex), modes.astype(float))
    inverse = 1.0 / np.asarray(points, dtype=complex)[..., None]
    series = powers @ coefficients
    first = (powers * inverse) @ (modes * coefficients)
    second = (powers * inverse**2) @ (modes * (modes - 1) * coefficients)
    third = (powers * inverse**3) @ (modes * (modes - 1) * (modes - 2) * coefficients)
    return series, first, second, third


def _fixed_point(mu: BeltramiCoefficient, tol: float, maxiter: int) -> Tuple[np.ndarray, int]:
    transform = cauchy_transform(mu.grid)
    coefficient = mu.values
    density = coefficient.astype(complex)
    change = np.inf
    for iteration in range(1, maxiter + 1):
        w_z = 1.0 + transform.beurling(density)
        updated = coefficient * w_z
        change = float(np.max(np.abs(updated - density)))
        density = updated
        if change <= 0.1 * tol * float(np.max(np.abs(w_z))):
            return transform.potential(density), iteration
    raise ConvergenceError("Beltrami fixed-point iteration exhausted its budget", change, maxiter)


def solve_beltrami(
    mu: BeltramiCoefficient,
    normalization: Normalization = Normalization.THREE_POINT,
    tol: float = 1e-10,
    maxiter: int = 500,
) -> QCMap:
    """
    Solves w_zbar = mu w_z on the disc grid of ``mu``.

    The density h = w_zbar solves h = mu (1 + T h) by Neumann iteration,
    w = z + P h, and the chosen normalization is applied by holomorphic
    post-composition.

    Args:
        mu (BeltramiCoefficient): Coefficient on a disc grid, zero outside it.
        normalization (Normalization): Three-point (disc onto disc fixing 1,
            -1, -i) or series (2-jet at the origin).
        tol (float): Relative residual tolerance of the iteration.
        maxiter (int): Iteration budget.

    Returns:
        QCMap: The solved map.

    Raises:
        NormTooLargeError: If sup |mu| exceeds the solver regime.
        ConvergenceError: If the iteration does not converge.
    """
    if not isinstance(mu.grid, DiscGrid):
        raise InvalidParameterError(f"Beltrami solves need a disc grid, got {mu.grid!r}")
    if tol <= 0.0:
        raise InvalidParameterError(f"tol must be positive, got {tol!r}")
    if mu.sup_norm > SOLVER_REGIME:
        raise NormTooLargeError(f"sup |mu| = {mu.sup_norm:.4g} exceeds the solver regime {SOLVER_REGIME}")
    grid = mu.grid
    if mu.is_zero:
        potential, iterations = np.zeros(grid.shape, dtype=complex), 0
    else:
        potential, iterations = _fixed_point(mu, tol, maxiter)
    laurent = cauchy_transform(grid).laurent(potential)
    riemann = None
    if normalization == Normalization.THREE_POINT:
        riemann = RiemannMap(laurent, points=max(4 * grid.n_theta, 512))
        sources = np.exp(1j * riemann.preimage_angle(np.array(THREE_POINT_SOURCES)))
        outer = Mobius.three_point(sources, THREE_POINT_TARGETS)
    else:
        g = ComplexField(grid, potential)
        g_z = d_z(g)
        origin = np.zeros(1, dtype=complex)
        outer = Mobius.series_normal(
            g.at(origin)[0], 1.0 + g_z.at(origin)[0], d_z(g_z).at(origin)[0]
        )
    qc_map = QCMap(mu, normalization, potential, laurent, outer, riemann, iterations)
    logger.debug(
        "Beltrami solve: sup_mu=%.4g iterations=%d residual=%.3e",
        mu.sup_norm,
        iterations,
        qc_map.residual,
    )
    if qc_map.residual > tol:
        logger.warning(
            "post-composed residual %.3e exceeds tol %.3e", qc_map.residual, tol
        )
    return qc_map
