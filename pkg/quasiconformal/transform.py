__all__ = ["CauchyTransform", "cauchy_transform"]


import numpy as np
from scipy import linalg

from geometry.cache import operator_cache
from geometry.grid import DiscGrid
from utils.errors import InvalidParameterError


class CauchyTransform:
    """
    Discrete Cauchy transform P and Beurling transform T = d_z P on a disc grid.

    P inverts the discrete d_zbar operator mode by mode: a density in Fourier
    slot k comes from slot k - 1 of the potential, whose radial profile solves
    a banded first-order system. Non-negative modes (and the Nyquist mode)
    take the boundary condition g = 0 on the last ring in place of their last
    equation, so the potential is the restriction of a function that is
    holomorphic outside the disc and vanishes at infinity. Negative modes are
    determined without a boundary condition.

    By construction d_zbar(P h) == h on every ring but the last, and
    T h == d_z(P h) on the whole grid.
    """

    def __init__(self, grid: DiscGrid) -> None:
        if not isinstance(grid, DiscGrid):
            raise InvalidParameterError(f"the Cauchy transform needs a disc grid, got {grid!r}")
        self.__grid = grid
        n_r, n_theta = grid.shape
        main, ghost = grid.radial_matrices(1)
        inverse_r = np.diag(1.0 / grid.r_nodes)
        potential = np.empty((n_theta, n_r, n_r), dtype=complex)
        beurling = np.empty((n_theta, n_r, n_r), dtype=complex)
        for slot, mode in enumerate(grid.wavenumbers):
            radial = main + (1.0 if mode % 2 == 0 else -1.0) * ghost
            angular = 0 if slot == grid.nyquist else mode
            lowering = 0.5 * (radial - angular * inverse_r)
            raising = 0.5 * (radial + angular * inverse_r)
            system = lowering.copy()
            selector = np.eye(n_r)
            if mode >= 0 or slot == grid.nyquist:
                system[-1, :] = 0.0
                system[-1, -1] = 1.0
                selector[-1, -1] = 0.0
            potential[slot] = linalg.solve(system, selector)
            beurling[slot] = raising @ potential[slot]
        potential.setflags(write=False)
        beurling.setflags(write=False)
        self.__potential = potential
        self.__beurling = beurling
        self.__source = (np.arange(n_theta) + 1) % n_theta

    @property
    def grid(self) -> DiscGrid:
        """Returns the disc grid."""
        return self.__grid

    def potential(self, density: np.ndarray) -> np.ndarray:
        """Applies P: returns g with d_zbar g = density off the last ring, g = O(1/z) outside."""
        spectrum = np.fft.fft(np.asarray(density, dtype=complex), axis=1)
        result = np.einsum("kij,jk->ik", self.__potential, spectrum[:, self.__source])
        return np.fft.ifft(result, axis=1)

    def beurling(self, density: np.ndarray) -> np.ndarray:
        """Applies T = d_z P."""
        spectrum = np.fft.fft(np.asarray(density, dtype=complex), axis=1)
        result = np.einsum("kij,jk->ik", self.__beurling, spectrum[:, self.__source])
        return np.fft.ifft(np.roll(result, -1, axis=1), axis=1)

    def laurent(self, potential: np.ndarray) -> np.ndarray:
        """Returns c_n for n = -1 .. -n_theta/2 + 1 with g(z) = sum c_n z^n outside the disc."""
        grid = self.__grid
        trace = np.fft.fft(potential[-1, :]) / grid.n_theta
        modes = -np.arange(1, grid.n_theta // 2)
        slots = modes % grid.n_theta
        return trace[slots] * grid.R ** (-modes)


def cauchy_transform(grid: DiscGrid) -> CauchyTransform:
    """Returns the cached transform of ``grid``."""
    return operator_cache.get((grid.key, "cauchy"), lambda: CauchyTransform(grid))
