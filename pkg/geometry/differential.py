__all__ = [
    "MAX_DEGREE",
    "hyperbolic_density",
    "hyperbolic_density_at",
    "psi_u",
    "QuadDifferential",
    "TangentField",
    "wp_inner",
]


from typing import Sequence, Union

import numpy as np
from numpy.polynomial import polynomial as P

from geometry.field import ComplexField, RealField, same_grid
from geometry.grid import PolarGrid
from geometry.operators import integrate
from utils.errors import GridMismatchError, InvalidParameterError


MAX_DEGREE = 8


def hyperbolic_density_at(points: np.ndarray) -> np.ndarray:
    """Poincare density e^psi = 4 / (1 - |z|^2)^2 at arbitrary points of the disc."""
    return 4.0 / (1.0 - np.abs(points) ** 2) ** 2


def psi_u(points: np.ndarray) -> np.ndarray:
    """Derivative d psi / du = 2 conj(u) / (1 - |u|^2) of the log-density."""
    return 2.0 * np.conj(points) / (1.0 - np.abs(points) ** 2)


def hyperbolic_density(grid: PolarGrid) -> RealField:
    """Samples e^psi on ``grid``; the density depends on |z| only."""
    radius = grid.r_nodes[:, None]
    ring = 4.0 / (1.0 - radius**2) ** 2
    return RealField(grid, np.broadcast_to(ring, grid.shape))


def _coefficients(coeffs: Sequence[complex], what: str) -> np.ndarray:
    array = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if array.ndim != 1 or array.size == 0:
        raise InvalidParameterError(f"{what} needs a non-empty coefficient vector")
    if array.size - 1 > MAX_DEGREE:
        raise InvalidParameterError(f"{what} degree {array.size - 1} exceeds {MAX_DEGREE}")
    if not np.all(np.isfinite(array)):
        raise InvalidParameterError(f"{what} coefficients must be finite")
    array.setflags(write=False)
    return array


class QuadDifferential:
    """
    Holomorphic quadratic differential Phi(z) dz^2 with polynomial coefficient.

    Attributes:
        coeffs (np.ndarray): c_0..c_d with Phi(z) = sum c_k z^k.
    """

    __slots__ = ("__coeffs",)

    def __init__(self, coeffs: Sequence[complex]) -> None:
        self.__coeffs = _coefficients(coeffs, "QuadDifferential")

    @property
    def coeffs(self) -> np.ndarray:
        """Returns the polynomial coefficients."""
        return self.__coeffs

    @property
    def degree(self) -> int:
        """Returns the polynomial degree."""
        return self.__coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        """Returns whether every coefficient vanishes."""
        return not np.any(self.__coeffs)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Evaluates Phi at arbitrary points."""
        return P.polyval(np.asarray(points, dtype=complex), self.__coeffs)

    def on(self, grid: PolarGrid) -> ComplexField:
        """Samples Phi at the grid nodes."""
        return ComplexField(grid, self.evaluate(grid.z))

    def scaled(self, factor: complex) -> "QuadDifferential":
        """Returns factor * Phi."""
        return QuadDifferential(self.__coeffs * factor)

    def a2_norm(self, grid: PolarGrid) -> float:
        """Returns (int |Phi|^2 e^{-psi} d^2z)^{1/2} over the grid region."""
        density = hyperbolic_density(grid)
        return float(np.sqrt(integrate(self.on(grid).abs() ** 2 / density)))

    def __repr__(self) -> str:
        return f"QuadDifferential({np.array2string(self.__coeffs, precision=4)})"


class TangentField:
    """
    Harmonic Beltrami differential nu = e^{-psi} conj(q) with polynomial q.

    The field is sampled on a grid at construction; ``evaluate`` uses the
    closed form anywhere in the disc.
    """

    __slots__ = ("__poly", "__grid", "__field")

    def __init__(self, poly: Sequence[complex], grid: PolarGrid) -> None:
        """Initializes the tangent field.

        Args:
            poly (Sequence[complex]): Coefficients of q, degree at most 8.
            grid (PolarGrid): Grid hosting the samples.
        """
        self.__poly = _coefficients(poly, "TangentField")
        self.__grid = grid
        self.__field = ComplexField(grid, self.evaluate(grid.z))

    @classmethod
    def monomial(cls, k: int, grid: PolarGrid, coefficient: complex = 1.0) -> "TangentField":
        """Returns the tangent field of q = coefficient * z^k."""
        poly = np.zeros(k + 1, dtype=complex)
        poly[k] = coefficient
        return cls(poly, grid)

    @property
    def poly(self) -> np.ndarray:
        """Returns the coefficients of q."""
        return self.__poly

    @property
    def grid(self) -> PolarGrid:
        """Returns the hosting grid."""
        return self.__grid

    @property
    def field(self) -> ComplexField:
        """Returns the sampled Beltrami differential."""
        return self.__field

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Evaluates e^{-psi(z)} conj(q(z)) at arbitrary points of the disc."""
        points = np.asarray(points, dtype=complex)
        return np.conj(P.polyval(points, self.__poly)) / hyperbolic_density_at(points)

    def scaled(self, factor: complex) -> "TangentField":
        """Returns the tangent field factor * nu (q is scaled by conj(factor))."""
        return TangentField(self.__poly * np.conj(factor), self.__grid)

    def __add__(self, other: "TangentField") -> "TangentField":
        if not isinstance(other, TangentField):
            return NotImplemented
        if other.grid != self.grid:
            raise GridMismatchError(f"{other.grid!r} does not match {self.grid!r}")
        return TangentField(P.polyadd(self.__poly, other.poly), self.__grid)

    def wp_norm(self) -> float:
        """Returns the Weil-Petersson norm (int |nu|^2 e^psi)^{1/2}."""
        return float(np.sqrt(wp_inner(self, self).real))

    def __repr__(self) -> str:
        return f"TangentField({np.array2string(self.__poly, precision=4)}, {self.__grid!r})"


FieldLike = Union[TangentField, ComplexField]


def _as_field(value: FieldLike) -> ComplexField:
    return value.field if isinstance(value, TangentField) else value


def wp_inner(u: FieldLike, v: FieldLike) -> complex:
    """Weil-Petersson pairing int u conj(v) e^psi d^2z.

    Args:
        u (FieldLike): Tangent field or sampled Beltrami differential.
        v (FieldLike): Same grid as ``u``.

    Returns:
        complex: The pairing; Hermitian in (u, v).

    Raises:
        GridMismatchError: If the grids differ.
    """
    left, right = _as_field(u), _as_field(v)
    grid = same_grid(left, right)
    return integrate(left * right.conj() * hyperbolic_density(grid))
