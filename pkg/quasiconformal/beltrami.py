__all__ = ["BeltramiCoefficient", "reflect_extension"]


import numpy as np

from geometry.differential import TangentField
from geometry.field import ComplexField
from geometry.grid import AnnulusGrid, DiscGrid, PolarGrid
from utils.errors import InvalidParameterError, NormViolationError


class BeltramiCoefficient:
    """
    Beltrami coefficient mu with sup |mu| < 1, sampled on a grid.

    Outside the sampled region the coefficient is taken to be zero, which is
    how truncated coefficients on a disc grid extend to the plane.
    """

    __slots__ = ("__field", "__sup_norm")

    def __init__(self, field: ComplexField) -> None:
        """Initializes the coefficient.

        Raises:
            NormViolationError: If some sample has modulus >= 1.
        """
        if not isinstance(field, ComplexField):
            field = ComplexField(field.grid, field.values)
        sup_norm = field.sup()
        if sup_norm >= 1.0:
            raise NormViolationError(f"Beltrami coefficient has sup-norm {sup_norm:.6g} >= 1")
        self.__field = field
        self.__sup_norm = sup_norm

    @classmethod
    def zero(cls, grid: PolarGrid) -> "BeltramiCoefficient":
        """Returns the zero coefficient."""
        return cls(ComplexField.zeros(grid))

    @classmethod
    def from_tangent(cls, nu: TangentField, scale: complex = 1.0) -> "BeltramiCoefficient":
        """Returns the coefficient scale * nu sampled on the grid of ``nu``."""
        return cls(nu.field * scale)

    @property
    def field(self) -> ComplexField:
        """Returns the samples."""
        return self.__field

    @property
    def grid(self) -> PolarGrid:
        """Returns the grid of the samples."""
        return self.__field.grid

    @property
    def values(self) -> np.ndarray:
        """Returns the sample array."""
        return self.__field.values

    @property
    def sup_norm(self) -> float:
        """Returns the sup-norm recorded at construction."""
        return self.__sup_norm

    @property
    def is_zero(self) -> bool:
        """Returns whether every sample vanishes."""
        return self.__sup_norm == 0.0

    def at(self, points: np.ndarray) -> np.ndarray:
        """Evaluates the coefficient at arbitrary points, zero outside the grid region."""
        if self.is_zero:
            return np.zeros(np.shape(points), dtype=complex)
        return self.__field.at(points, outside=0.0)

    def __repr__(self) -> str:
        return f"BeltramiCoefficient({self.grid!r}, sup_norm={self.__sup_norm:.6g})"


def reflect_extension(mu: BeltramiCoefficient, exterior: AnnulusGrid) -> BeltramiCoefficient:
    """
    Extends mu across the unit circle by mu(z) = conj(mu(1/conj(z))) z^2 / conj(z)^2.

    Args:
        mu (BeltramiCoefficient): Coefficient on a disc grid.
        exterior (AnnulusGrid): Samples with |z| > 1 receiving the extension.

    Returns:
        BeltramiCoefficient: The reflected coefficient on ``exterior``.

    Raises:
        InvalidParameterError: If ``mu`` is not on a disc grid or the annulus meets the disc.
    """
    if not isinstance(mu.grid, DiscGrid):
        raise InvalidParameterError(f"reflection needs a disc grid, got {mu.grid!r}")
    if exterior.r_in <= 1.0:
        raise InvalidParameterError(f"exterior samples must satisfy |z| > 1, got r_in={exterior.r_in}")
    z = exterior.z
    mirrored = mu.at(1.0 / np.conj(z))
    return BeltramiCoefficient(ComplexField(exterior, np.conj(mirrored) * z**2 / np.conj(z) ** 2))
