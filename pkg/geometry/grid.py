__all__ = ["PolarGrid", "DiscGrid", "AnnulusGrid", "make_grid", "make_annulus"]


from abc import ABC, abstractmethod
from typing import Hashable, Tuple

import numpy as np

from geometry.cache import operator_cache
from geometry.stencil import (
    INTERP_WIDTH,
    STENCIL_WIDTH,
    fd_weights,
    interval_weights,
    lagrange_weights,
)
from utils.errors import InvalidParameterError


class PolarGrid(ABC):
    """
    Tensor sampling (r_i, theta_j) of a rotationally symmetric planar region.

    Values of every field on the grid are stored as arrays of shape
    ``(n_r, n_theta)``. The angular direction is periodic and treated
    spectrally; the radial direction uses seven-point finite differences.
    Subclasses decide where the radial nodes sit and how the radial
    stencils close at the ends of the interval.
    """

    def __init__(self, n_r: int, n_theta: int, r_nodes: np.ndarray, h: float) -> None:
        self.__n_r = n_r
        self.__n_theta = n_theta
        self.__h = h
        self.__r_nodes = np.asarray(r_nodes, dtype=float)
        self.__r_nodes.setflags(write=False)
        self.__theta_nodes = 2.0 * np.pi * np.arange(n_theta) / n_theta
        self.__theta_nodes.setflags(write=False)
        self.__z = self.__r_nodes[:, None] * np.exp(1j * self.__theta_nodes[None, :])
        self.__z.setflags(write=False)
        self.__wavenumbers = np.fft.fftfreq(n_theta, d=1.0 / n_theta).round().astype(int)
        self.__wavenumbers.setflags(write=False)

    @property
    def n_r(self) -> int:
        """Returns the radial sample count."""
        return self.__n_r

    @property
    def n_theta(self) -> int:
        """Returns the angular sample count."""
        return self.__n_theta

    @property
    def h(self) -> float:
        """Returns the radial spacing."""
        return self.__h

    @property
    def r_nodes(self) -> np.ndarray:
        """Returns the radial nodes."""
        return self.__r_nodes

    @property
    def theta_nodes(self) -> np.ndarray:
        """Returns the uniform angular nodes on [0, 2*pi)."""
        return self.__theta_nodes

    @property
    def z(self) -> np.ndarray:
        """Returns the complex node positions, shape (n_r, n_theta)."""
        return self.__z

    @property
    def r(self) -> np.ndarray:
        """Returns |z| broadcast to the grid shape."""
        return np.broadcast_to(self.__r_nodes[:, None], self.shape)

    @property
    def shape(self) -> Tuple[int, int]:
        """Returns (n_r, n_theta)."""
        return self.__n_r, self.__n_theta

    @property
    def size(self) -> int:
        """Returns the total node count."""
        return self.__n_r * self.__n_theta

    @property
    def wavenumbers(self) -> np.ndarray:
        """Returns the integer Fourier mode of each FFT slot (Nyquist slot negative)."""
        return self.__wavenumbers

    @property
    def nyquist(self) -> int:
        """Returns the FFT slot of the Nyquist mode."""
        return self.__n_theta // 2

    @property
    def r_max(self) -> float:
        """Returns the outermost radius."""
        return float(self.__r_nodes[-1])

    @property
    def key(self) -> Hashable:
        """Returns a hashable description identifying equal grids."""
        return self._key()

    @property
    def quad_weights(self) -> np.ndarray:
        """Returns the area quadrature weights (Jacobian r included), shape (n_r, n_theta)."""
        radial = operator_cache.get((self.key, "quadrature"), self._radial_quadrature)
        weights = np.broadcast_to((2.0 * np.pi / self.n_theta) * radial[:, None], self.shape)
        return weights

    @property
    def has_center(self) -> bool:
        """Returns whether the radial direction passes through the origin."""
        return False

    def radial_matrices(self, order: int) -> Tuple[np.ndarray, np.ndarray]:
        """Returns (A, G) such that d^order/dr^order f = A f + G f(theta + pi).

        ``G`` carries the stencil weights that land on ghost nodes across the
        origin; it is zero for grids that do not contain the center.
        """
        return operator_cache.get(
            (self.key, f"radial-{order}"), lambda: self._build_radial(order)
        )

    def interior_mask(self, margin: int = 3) -> np.ndarray:
        """Boolean mask excluding ``margin`` rings at every radial boundary."""
        mask = np.zeros(self.shape, dtype=bool)
        low = 0 if self.has_center else margin
        mask[low : self.n_r - margin, :] = True
        return mask

    def mask(self, r_max: float) -> np.ndarray:
        """Boolean mask of the nodes with |z| <= r_max."""
        return np.broadcast_to(self.r_nodes[:, None] <= r_max + 1e-14, self.shape).copy()

    def contains(self, points: np.ndarray) -> np.ndarray:
        """Boolean mask of the points lying in the sampled region."""
        radius = np.abs(points)
        return (radius >= self._r_low() - 1e-14) & (radius <= self.r_max + 1e-14)

    def interpolate(self, values: np.ndarray, points: np.ndarray) -> np.ndarray:
        """
        Evaluates grid samples at arbitrary points of the sampled region.

        Trigonometric interpolation in theta (the Nyquist mode as a cosine) and
        six-point Lagrange interpolation in r; across the origin the parity
        relation f(-r, theta) = f(r, theta + pi) supplies ghost values.

        Args:
            values (np.ndarray): Samples of shape (n_r, n_theta).
            points (np.ndarray): Complex evaluation points of any shape.

        Returns:
            np.ndarray: Complex values with the shape of ``points``.
        """
        points = np.asarray(points, dtype=complex)
        flat = points.ravel()
        if flat.size == 0:
            return np.zeros(points.shape, dtype=complex)
        radius = np.abs(flat)
        theta = np.angle(flat)
        coefficients = np.fft.fft(np.asarray(values, dtype=complex), axis=1) / self.n_theta
        modes = self.wavenumbers.astype(float)
        basis = np.exp(1j * np.outer(modes, theta))
        basis[self.nyquist, :] = np.cos(0.5 * self.n_theta * theta)
        rings = coefficients @ basis
        position, lowest = self._interp_position(radius)
        start = np.clip(np.floor(position).astype(int) - INTERP_WIDTH // 2 + 1, lowest, self._last_start())
        weights = lagrange_weights(position - start, INTERP_WIDTH)
        ghost_rings = None
        if self.has_center:
            parity = np.where(self.wavenumbers % 2 == 0, 1.0, -1.0)
            ghost_rings = (coefficients * parity[None, :]) @ basis
        result = np.zeros(flat.size, dtype=complex)
        columns = np.arange(flat.size)
        for k in range(INTERP_WIDTH):
            index = start + k
            if ghost_rings is None:
                sample = rings[index, columns]
            else:
                real_index = np.where(index >= 0, index, -index - 1)
                sample = np.where(
                    index >= 0, rings[real_index, columns], ghost_rings[real_index, columns]
                )
            result += weights[:, k] * sample
        return result.reshape(points.shape)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolarGrid) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def _build_radial(self, order: int) -> Tuple[np.ndarray, np.ndarray]:
        main = np.zeros((self.n_r, self.n_r))
        ghost = np.zeros((self.n_r, self.n_r))
        lowest = -self.n_r if self.has_center else 0
        highest = self.n_r - STENCIL_WIDTH
        for i in range(self.n_r):
            start = min(max(i - STENCIL_WIDTH // 2, lowest), highest)
            window = np.arange(start, start + STENCIL_WIDTH)
            weights = fd_weights(window - i, order) / self.h**order
            for k, w in zip(window, weights):
                if k >= 0:
                    main[i, k] += w
                else:
                    ghost[i, -k - 1] += w
        main.setflags(write=False)
        ghost.setflags(write=False)
        return main, ghost

    def _last_start(self) -> int:
        return self.n_r - INTERP_WIDTH

    @abstractmethod
    def _key(self) -> Hashable:
        """Returns the identifying tuple of the grid."""

    @abstractmethod
    def _r_low(self) -> float:
        """Returns the inner radius of the sampled region."""

    @abstractmethod
    def _interp_position(self, radius: np.ndarray) -> Tuple[np.ndarray, int]:
        """Maps radii to fractional node indices and returns the lowest window start."""

    @abstractmethod
    def _radial_quadrature(self) -> np.ndarray:
        """Returns radial weights w_i with sum_i w_i f(r_i) ~ int f(r) r dr."""


class DiscGrid(PolarGrid):
    """
    Polar sampling of the truncated disc |z| <= R.

    Radial nodes sit at half-offsets r_i = (i + 1/2) h with h = R / (n_r - 1/2),
    so the origin is never a node and the last ring lies exactly on |z| = R.
    """

    def __init__(self, n_r: int, n_theta: int, R: float) -> None:
        h = R / (n_r - 0.5)
        super().__init__(n_r, n_theta, (np.arange(n_r) + 0.5) * h, h)
        self.__R = float(R)

    @property
    def R(self) -> float:
        """Returns the truncation radius."""
        return self.__R

    @property
    def has_center(self) -> bool:
        return True

    def _key(self) -> Hashable:
        return ("disc", self.n_r, self.n_theta, self.R)

    def _r_low(self) -> float:
        return 0.0

    def _interp_position(self, radius: np.ndarray) -> Tuple[np.ndarray, int]:
        return radius / self.h - 0.5, -self.n_r

    def _radial_quadrature(self) -> np.ndarray:
        # composite Lagrange rule in s = r^2 covering [0, R^2]
        s = self.r_nodes**2
        width = min(INTERP_WIDTH, self.n_r)
        weights = np.zeros(self.n_r)
        weights[:width] += interval_weights(s[:width], 0.0, s[0])
        for i in range(self.n_r - 1):
            start = min(max(i - width // 2 + 1, 0), self.n_r - width)
            window = slice(start, start + width)
            weights[window] += interval_weights(s[window], s[i], s[i + 1])
        radial = 0.5 * weights
        radial.setflags(write=False)
        return radial

    def __repr__(self) -> str:
        return f"DiscGrid(n_r={self.n_r}, n_theta={self.n_theta}, R={self.R})"


class AnnulusGrid(PolarGrid):
    """Polar sampling of r_in <= |z| <= r_out with both ends on the grid."""

    def __init__(self, n_r: int, n_theta: int, r_in: float, r_out: float) -> None:
        h = (r_out - r_in) / (n_r - 1)
        super().__init__(n_r, n_theta, r_in + h * np.arange(n_r), h)
        self.__r_in = float(r_in)
        self.__r_out = float(r_out)

    @property
    def r_in(self) -> float:
        """Returns the inner radius."""
        return self.__r_in

    @property
    def r_out(self) -> float:
        """Returns the outer radius."""
        return self.__r_out

    def _key(self) -> Hashable:
        return ("annulus", self.n_r, self.n_theta, self.r_in, self.r_out)

    def _r_low(self) -> float:
        return self.r_in

    def _interp_position(self, radius: np.ndarray) -> Tuple[np.ndarray, int]:
        return (radius - self.r_in) / self.h, 0

    def _radial_quadrature(self) -> np.ndarray:
        width = INTERP_WIDTH
        weights = np.zeros(self.n_r)
        r = self.r_nodes
        for i in range(self.n_r - 1):
            start = min(max(i - width // 2 + 1, 0), self.n_r - width)
            window = slice(start, start + width)
            weights[window] += interval_weights(r[window], r[i], r[i + 1])
        radial = weights * r
        radial.setflags(write=False)
        return radial

    def __repr__(self) -> str:
        return (
            f"AnnulusGrid(n_r={self.n_r}, n_theta={self.n_theta}, "
            f"r_in={self.r_in}, r_out={self.r_out})"
        )


def _check_counts(n_r: int, n_theta: int, min_r: int) -> None:
    if not isinstance(n_r, (int, np.integer)) or n_r < min_r:
        raise InvalidParameterError(f"n_r must be an integer >= {min_r}, got {n_r!r}")
    if not isinstance(n_theta, (int, np.integer)) or n_theta < 8 or n_theta % 2:
        raise InvalidParameterError(f"n_theta must be an even integer >= 8, got {n_theta!r}")


def make_grid(n_r: int, n_theta: int, R: float) -> DiscGrid:
    """Builds a truncated disc grid.

    Args:
        n_r (int): Radial sample count, at least 4.
        n_theta (int): Angular sample count, even and at least 8.
        R (float): Truncation radius in (0, 1).

    Returns:
        DiscGrid: The grid; nodes depend only on the arguments.

    Raises:
        InvalidParameterError: If a precondition is violated.
    """
    _check_counts(n_r, n_theta, 4)
    if not 0.0 < R < 1.0:
        raise InvalidParameterError(f"R must lie in (0, 1), got {R!r}")
    return DiscGrid(int(n_r), int(n_theta), float(R))


def make_annulus(n_r: int, n_theta: int, r_in: float, r_out: float) -> AnnulusGrid:
    """Builds an annulus grid.

    Raises:
        InvalidParameterError: If n_r < 7, n_theta is invalid or 0 < r_in < r_out fails.
    """
    _check_counts(n_r, n_theta, STENCIL_WIDTH)
    if not 0.0 < r_in < r_out:
        raise InvalidParameterError(f"need 0 < r_in < r_out, got ({r_in!r}, {r_out!r})")
    return AnnulusGrid(int(n_r), int(n_theta), float(r_in), float(r_out))
