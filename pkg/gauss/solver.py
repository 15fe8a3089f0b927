__all__ = ["solve_gauss", "gauss_residual"]


import numpy as np
from scipy import linalg
from scipy.sparse.linalg import LinearOperator, gmres

from gauss.factor import ConformalFactor
from geometry.differential import QuadDifferential, hyperbolic_density
from geometry.field import RealField
from geometry.grid import DiscGrid
from geometry.operators import d_r, d_theta
from utils.errors import InvalidParameterError, NewtonDivergenceError
from utils.logger import get_logger


logger = get_logger(__name__)


MAX_HALVINGS = 6


def _laplacian(values: np.ndarray, grid: DiscGrid) -> np.ndarray:
    radius = grid.r_nodes[:, None]
    return (
        d_r(values, grid, 2)
        + d_r(values, grid, 1) / radius
        + d_theta(values, grid, 2) / radius**2
    )


def _residual(u: np.ndarray, density: np.ndarray, modulus: np.ndarray, grid: DiscGrid) -> np.ndarray:
    # Delta psi / 2 = e^psi is used in closed form
    return (
        0.5 * _laplacian(u, grid)
        - density * np.expm1(u)
        + np.exp(-u) * modulus / density
    )


def gauss_residual(phi: ConformalFactor) -> RealField:
    """Returns Delta u / 2 - e^psi (e^u - 1) + e^{-phi} |Phi|^2 at every node."""
    grid = phi.grid
    density = hyperbolic_density(grid).values
    modulus = np.abs(phi.Phi.evaluate(grid.z)) ** 2
    return RealField(grid, _residual(phi.u.values, density, modulus, grid))


class _ModePreconditioner:
    """
    Inverse of the angular-mean Jacobian, one dense radial block per Fourier mode.

    The Jacobian Delta / 2 - c(r, theta) is approximated by Delta / 2 - c_bar(r)
    with c_bar the angular mean, which decouples the Fourier modes exactly.
    """

    def __init__(self, grid: DiscGrid, coefficient: np.ndarray) -> None:
        interior = grid.n_r - 1
        main_1, ghost_1 = grid.radial_matrices(1)
        main_2, ghost_2 = grid.radial_matrices(2)
        radius = grid.r_nodes
        mean = coefficient.mean(axis=1)
        self.__grid = grid
        self.__factors = []
        for mode in grid.wavenumbers:
            parity = 1.0 if mode % 2 == 0 else -1.0
            block = (
                main_2
                + parity * ghost_2
                + (main_1 + parity * ghost_1) / radius[:, None]
                - np.diag(float(mode) ** 2 / radius**2)
            )
            block = 0.5 * block - np.diag(mean)
            self.__factors.append(linalg.lu_factor(block[:interior, :interior]))

    def solve(self, vector: np.ndarray) -> np.ndarray:
        grid = self.__grid
        spectrum = np.fft.fft(vector.reshape(grid.n_r - 1, grid.n_theta), axis=1)
        result = np.empty_like(spectrum)
        for slot, factor in enumerate(self.__factors):
            column = spectrum[:, slot]
            parts = np.column_stack([column.real, column.imag])
            solved = linalg.lu_solve(factor, parts)
            result[:, slot] = solved[:, 0] + 1j * solved[:, 1]
        return np.fft.ifft(result, axis=1).real.ravel()


def _newton_step(
    u: np.ndarray,
    rhs: np.ndarray,
    density: np.ndarray,
    modulus: np.ndarray,
    grid: DiscGrid,
    atol: float,
) -> np.ndarray:
    coefficient = density * np.exp(u) + np.exp(-u) * modulus / density
    size = (grid.n_r - 1) * grid.n_theta

    def jacobian(vector: np.ndarray) -> np.ndarray:
        full = np.zeros(grid.shape)
        full[:-1] = vector.reshape(grid.n_r - 1, grid.n_theta)
        product = 0.5 * _laplacian(full, grid) - coefficient * full
        return product[:-1].ravel()

    preconditioner = _ModePreconditioner(grid, coefficient)
    operator = LinearOperator((size, size), matvec=jacobian, dtype=float)
    inverse = LinearOperator((size, size), matvec=preconditioner.solve, dtype=float)
    step, info = gmres(operator, rhs[:-1].ravel(), rtol=1e-4, atol=atol, M=inverse, maxiter=200)
    if info != 0:
        logger.debug("gmres stopped with info=%d", info)
    full = np.zeros(grid.shape)
    full[:-1] = step.reshape(grid.n_r - 1, grid.n_theta)
    return full


def solve_gauss(
    Phi: QuadDifferential,
    grid: DiscGrid,
    tol: float = 1e-10,
    maxiter: int = 50,
) -> ConformalFactor:
    """
    Solves 2 phi_zzbar = e^phi - e^{-phi} |Phi|^2 with phi = psi on |z| = R.

    Newton's method starts from phi = psi and solves for u = phi - psi. Each
    linearized system Delta / 2 - (e^phi + e^{-phi} |Phi|^2) is handled by
    preconditioned GMRES with absolute tolerance 0.01 * tol; a step that
    increases the residual is halved, at most six times.

    Args:
        Phi (QuadDifferential): Holomorphic quadratic differential.
        grid (DiscGrid): Disc grid of the solve.
        tol (float): Bound on the sup of the Gauss residual.
        maxiter (int): Newton step budget.

    Returns:
        ConformalFactor: The converged factor.

    Raises:
        InvalidParameterError: On a non-disc grid or non-positive ``tol``.
        NewtonDivergenceError: If the line search fails or the budget is exhausted.
    """
    if not isinstance(grid, DiscGrid):
        raise InvalidParameterError(f"the Gauss equation is solved on a disc grid, got {grid!r}")
    if tol <= 0.0:
        raise InvalidParameterError(f"tol must be positive, got {tol!r}")
    density = hyperbolic_density(grid).values
    modulus = np.abs(Phi.evaluate(grid.z)) ** 2
    u = np.zeros(grid.shape)
    residual = _residual(u, density, modulus, grid)
    error = float(np.max(np.abs(residual[:-1])))
    iterations = 0
    while error > tol:
        if iterations >= maxiter:
            raise NewtonDivergenceError("Gauss equation Newton budget exhausted", error, iterations)
        step = _newton_step(u, -residual, density, modulus, grid, 0.01 * tol)
        fraction = 1.0
        for _ in range(MAX_HALVINGS + 1):
            candidate = u + fraction * step
            candidate_residual = _residual(candidate, density, modulus, grid)
            candidate_error = float(np.max(np.abs(candidate_residual[:-1])))
            if candidate_error < error:
                break
            fraction *= 0.5
        else:
            raise NewtonDivergenceError("Gauss equation line search failed", error, iterations)
        u, residual, error = candidate, candidate_residual, candidate_error
        iterations += 1
        logger.debug("Gauss Newton step %d: residual=%.3e fraction=%g", iterations, error, fraction)
    logger.info("Gauss equation solved on %r: %d steps, residual %.3e", grid, iterations, error)
    factor = ConformalFactor(RealField(grid, u), Phi, error, iterations)
    if np.min(u) < -tol:
        logger.warning("conformal factor dips below the hyperbolic metric (min u = %.3e)", np.min(u))
    return factor
