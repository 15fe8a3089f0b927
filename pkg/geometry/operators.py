__all__ = ["d_r", "d_theta", "d_z", "d_zbar", "laplacian", "integrate", "interpolate"]


from typing import Union

import numpy as np

from geometry.field import ComplexField, Field, RealField
from geometry.grid import PolarGrid


Scalar = Union[complex, float]


def d_r(values: np.ndarray, grid: PolarGrid, order: int = 1) -> np.ndarray:
    """Radial derivative of grid samples by seven-point finite differences."""
    main, ghost = grid.radial_matrices(order)
    result = main @ values
    if grid.has_center:
        result = result + ghost @ np.roll(values, grid.n_theta // 2, axis=1)
    return result


def d_theta(values: np.ndarray, grid: PolarGrid, order: int = 1) -> np.ndarray:
    """Spectral angular derivative.

    The Nyquist mode is dropped for odd orders, which keeps the first
    derivative of real data real.
    """
    modes = grid.wavenumbers.astype(float)
    multiplier = (1j * modes) ** order
    if order % 2:
        multiplier[grid.nyquist] = 0.0
    result = np.fft.ifft(np.fft.fft(values, axis=1) * multiplier[None, :], axis=1)
    if not np.iscomplexobj(values):
        return result.real
    return result


def _d_z_values(values: np.ndarray, grid: PolarGrid) -> np.ndarray:
    radius = grid.r_nodes[:, None]
    phase = np.exp(-1j * grid.theta_nodes)[None, :]
    return 0.5 * phase * (d_r(values, grid) - 1j * d_theta(values, grid) / radius)


def d_z(f: Field) -> ComplexField:
    """Wirtinger derivative d/dz = (d/dx - i d/dy) / 2.

    Args:
        f (Field): Samples on a polar grid.

    Returns:
        ComplexField: The derivative at every node.
    """
    return ComplexField(f.grid, _d_z_values(np.asarray(f.values, dtype=complex), f.grid))


def d_zbar(f: Field) -> ComplexField:
    """Wirtinger derivative d/dzbar, computed as conj(d_z(conj(f)))."""
    return d_z(f.conj()).conj()


def laplacian(f: Field) -> Field:
    """Polar Laplacian f_rr + f_r / r + f_thetatheta / r^2; real input stays real."""
    grid = f.grid
    values = f.values
    radius = grid.r_nodes[:, None]
    result = (
        d_r(values, grid, 2)
        + d_r(values, grid, 1) / radius
        + d_theta(values, grid, 2) / radius**2
    )
    if isinstance(f, RealField):
        return RealField(grid, np.real(result))
    return ComplexField(grid, result)


def integrate(f: Field) -> Scalar:
    """Area quadrature of ``f`` over the sampled region (fixed summation order)."""
    total = np.sum(f.grid.quad_weights * f.values)
    if isinstance(f, RealField):
        return float(total)
    return complex(total)


def interpolate(f: Field, points: np.ndarray) -> np.ndarray:
    """Evaluates ``f`` at arbitrary points of its grid region."""
    return f.grid.interpolate(f.values, points)
