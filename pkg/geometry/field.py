__all__ = ["Field", "ComplexField", "RealField", "same_grid"]


from typing import Callable, Union

import numpy as np

from geometry.grid import PolarGrid
from utils.errors import GridMismatchError, InvalidParameterError


Operand = Union["Field", complex, float, int, np.ndarray]


def same_grid(*fields: "Field") -> PolarGrid:
    """Returns the common grid of ``fields``.

    Raises:
        GridMismatchError: If two fields live on different grids.
    """
    grid = fields[0].grid
    for field in fields[1:]:
        if field.grid != grid:
            raise GridMismatchError(f"{field.grid!r} does not match {grid!r}")
    return grid


class Field:
    """
    Immutable samples of a function on a polar grid.

    Values are stored with shape (n_r, n_theta); arithmetic between fields
    requires a shared grid and produces a new field. Products of real fields
    stay real, anything involving complex values is complex.
    """

    __slots__ = ("__grid", "__values")

    dtype = complex

    def __init__(self, grid: PolarGrid, values: np.ndarray) -> None:
        """Initializes the field.

        Args:
            grid (PolarGrid): The grid the samples belong to.
            values (np.ndarray): n_r * n_theta samples, flat or shaped.

        Raises:
            InvalidParameterError: On a size mismatch or non-finite samples.
        """
        array = np.asarray(values)
        if array.size != grid.size:
            raise InvalidParameterError(
                f"{array.size} samples do not match {grid!r} ({grid.size} nodes)"
            )
        if np.iscomplexobj(array) and self.dtype is float:
            raise InvalidParameterError("complex samples given to a real field")
        array = np.array(array, dtype=self.dtype).reshape(grid.shape)
        if not np.all(np.isfinite(array)):
            raise InvalidParameterError("field samples must be finite")
        array.setflags(write=False)
        self.__grid = grid
        self.__values = array

    @classmethod
    def from_function(cls, grid: PolarGrid, function: Callable[[np.ndarray], np.ndarray]) -> "Field":
        """Samples ``function(z)`` at the grid nodes."""
        return cls(grid, function(grid.z))

    @classmethod
    def zeros(cls, grid: PolarGrid) -> "Field":
        """Returns the zero field on ``grid``."""
        return cls(grid, np.zeros(grid.shape))

    @property
    def grid(self) -> PolarGrid:
        """Returns the grid the samples belong to."""
        return self.__grid

    @property
    def values(self) -> np.ndarray:
        """Returns the read-only samples, shape (n_r, n_theta)."""
        return self.__values

    @property
    def flat(self) -> np.ndarray:
        """Returns the samples as a vector of length n_r * n_theta."""
        return self.__values.ravel()

    def sup(self, mask: np.ndarray = None) -> float:
        """Returns the largest modulus over the grid, or over ``mask``."""
        data = self.__values if mask is None else self.__values[mask]
        return float(np.max(np.abs(data))) if data.size else 0.0

    def conj(self) -> "ComplexField":
        """Returns the complex conjugate."""
        return _wrap(self.grid, np.conj(self.__values))

    def abs(self) -> "RealField":
        """Returns the modulus."""
        return RealField(self.grid, np.abs(self.__values))

    @property
    def real(self) -> "RealField":
        """Returns the real part."""
        return RealField(self.grid, np.real(self.__values))

    @property
    def imag(self) -> "RealField":
        """Returns the imaginary part."""
        return RealField(self.grid, np.imag(self.__values))

    def apply(self, function: Callable[[np.ndarray], np.ndarray]) -> "Field":
        """Applies a pointwise function to the samples."""
        return _wrap(self.grid, function(self.__values))

    def at(self, points: np.ndarray, outside: float = None) -> np.ndarray:
        """Interpolates the field at ``points``.

        Args:
            points (np.ndarray): Complex evaluation points.
            outside (float): Value used for points outside the sampled region;
                when None such points are evaluated by extrapolation.
        """
        values = self.grid.interpolate(self.__values, points)
        if outside is not None:
            values = np.where(self.grid.contains(points), values, outside)
        return values

    def _operand(self, other: Operand) -> np.ndarray:
        if isinstance(other, Field):
            same_grid(self, other)
            return other.values
        return other

    def __add__(self, other: Operand) -> "Field":
        return _wrap(self.grid, self.__values + self._operand(other))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "Field":
        return _wrap(self.grid, self.__values - self._operand(other))

    def __rsub__(self, other: Operand) -> "Field":
        return _wrap(self.grid, self._operand(other) - self.__values)

    def __mul__(self, other: Operand) -> "Field":
        return _wrap(self.grid, self.__values * self._operand(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "Field":
        return _wrap(self.grid, self.__values / self._operand(other))

    def __rtruediv__(self, other: Operand) -> "Field":
        return _wrap(self.grid, self._operand(other) / self.__values)

    def __pow__(self, exponent: float) -> "Field":
        return _wrap(self.grid, self.__values**exponent)

    def __neg__(self) -> "Field":
        return _wrap(self.grid, -self.__values)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.grid!r}, sup={self.sup():.6g})"


class ComplexField(Field):
    """Complex samples: Beltrami coefficients, Hopf fields, map values."""

    __slots__ = ()

    dtype = complex


class RealField(Field):
    """Real samples: conformal factors, densities, curvatures."""

    __slots__ = ()

    dtype = float


def _wrap(grid: PolarGrid, values: np.ndarray) -> Field:
    if np.iscomplexobj(values):
        return ComplexField(grid, values)
    return RealField(grid, values)
