__all__ = ["RadialCutoff", "stream_function", "full_velocity", "ahlfors_direction"]


from typing import Optional, Tuple

import numpy as np

from geometry.differential import TangentField, hyperbolic_density_at
from geometry.field import ComplexField
from utils.errors import InvalidParameterError
from utils.logger import get_logger


logger = get_logger(__name__)


#: cut-off radii as fractions of the grid radius
INNER_FRACTION = 0.2
OUTER_FRACTION = 0.9


def _bump(t: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """exp(-1/t) for t > 0 with its first two derivatives; zero for t <= 0."""
    positive = t > 1e-3
    safe = np.where(positive, t, 1.0)
    value = np.where(positive, np.exp(-1.0 / safe), 0.0)
    return value, value / safe**2, value * (1.0 - 2.0 * safe) / safe**4


class RadialCutoff:
    """
    Smooth radial step chi with chi = 1 on |z| <= inner and chi = 0 on |z| >= outer.

    Attributes:
        inner (float): Radius up to which chi is one.
        outer (float): Radius from which chi is zero.
    """

    __slots__ = ("__inner", "__outer")

    def __init__(self, inner: float, outer: float) -> None:
        if not 0.0 < inner < outer:
            raise InvalidParameterError(f"cut-off needs 0 < inner < outer, got {inner}, {outer}")
        self.__inner = float(inner)
        self.__outer = float(outer)

    @property
    def inner(self) -> float:
        return self.__inner

    @property
    def outer(self) -> float:
        return self.__outer

    def derivatives(self, radius: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Returns chi, chi' and chi'' at ``radius``."""
        width = self.__outer - self.__inner
        x = (np.asarray(radius, dtype=float) - self.__inner) / width
        g, g1, g2 = _bump(x)
        h, h1, h2 = _bump(1.0 - x)
        total = g + h
        slope = g1 * h + g * h1
        step = g / total
        step_1 = slope / total**2
        step_2 = (g2 * h - g * h2) / total**2 - 2.0 * slope * (g1 - h1) / total**3
        return 1.0 - step, -step_1 / width, -step_2 / width**2

    def __call__(self, radius: np.ndarray) -> np.ndarray:
        return self.derivatives(radius)[0]

    def __repr__(self) -> str:
        return f"RadialCutoff({self.__inner:.4g}, {self.__outer:.4g})"


def stream_function(nu: TangentField, points: np.ndarray) -> np.ndarray:
    """
    Real stream function sigma with 2i e^{-psi} d_zbar sigma = ``full_velocity(nu)``.

    Per monomial a z^n of q, sigma = Im(conj(a) zbar^(n+2)) (1/(n+1) - |z|^2/(n+3))
    / ((n+2)(1 - |z|^2)).
    """
    points = np.asarray(points, dtype=complex)
    modulus = np.abs(points) ** 2
    result = np.zeros(points.shape, dtype=float)
    for n, a in enumerate(nu.poly):
        if a == 0:
            continue
        m = n + 2
        profile = (1.0 / (n + 1) - modulus / (n + 3)) / (m * (1.0 - modulus))
        result += np.imag(np.conj(a) * np.conj(points) ** m) * profile
    return result


def full_velocity(nu: TangentField, points: np.ndarray) -> np.ndarray:
    """
    Velocity V with d_zbar V = nu on the whole disc and 2 Re(psi_u V + V_u) = 0.

    V is tangent to the unit circle; it is the infinitesimal three-point
    normalized self-map of the disc with coefficient nu.
    """
    points = np.asarray(points, dtype=complex)
    modulus = np.abs(points) ** 2
    result = np.zeros(points.shape, dtype=complex)
    for n, a in enumerate(nu.poly):
        if a == 0:
            continue
        profile = 0.25 * (1.0 / (n + 1) - 2.0 * modulus / (n + 2) + modulus**2 / (n + 3))
        result += np.conj(a) * np.conj(points) ** (n + 1) * profile
        result -= a * points ** (n + 3) / (2.0 * (n + 1) * (n + 2) * (n + 3))
    return result


def ahlfors_direction(
    nu: TangentField, cutoff: Optional[RadialCutoff] = None
) -> Tuple[ComplexField, ComplexField]:
    """
    Compactly supported direction agreeing with ``nu`` near the origin whose
    velocity keeps the hyperbolic conformal factor fixed to first order.

    The velocity is V = 2i e^{-psi} d_zbar(chi sigma), so 2 Re(psi_u V + V_u)
    vanishes identically; V equals ``full_velocity(nu)`` where chi = 1 and
    vanishes from ``cutoff.outer`` on. The returned coefficient is d_zbar V,
    evaluated in closed form:

        chi nu + chi' V_full z / r + i sigma k' z^2 / (2r),  k = (1 - r^2)^2 chi' / (4r).

    Args:
        nu (TangentField): The harmonic direction on a disc grid.
        cutoff (Optional[RadialCutoff]): Step used to localize the stream
            function; defaults to 0.2 R .. 0.9 R of the grid radius R.

    Returns:
        Tuple[ComplexField, ComplexField]: The coefficient and its velocity.
    """
    grid = nu.grid
    if cutoff is None:
        cutoff = RadialCutoff(INNER_FRACTION * grid.r_max, OUTER_FRACTION * grid.r_max)
    z = grid.z
    radius = np.abs(z)
    safe = np.where(radius > 0.0, radius, 1.0)
    chi, chi_1, chi_2 = cutoff.derivatives(radius)
    sigma = stream_function(nu, z)
    velocity = full_velocity(nu, z)
    lift = (1.0 - radius**2) ** 2
    k_slope = (lift * chi_2 - 4.0 * radius * (1.0 - radius**2) * chi_1) / (4.0 * safe) - lift * chi_1 / (
        4.0 * safe**2
    )
    coefficient = chi * nu.evaluate(z) + chi_1 * velocity * z / safe + 0.5j * sigma * k_slope * z**2 / safe
    cut_velocity = chi * velocity + 1j * sigma * chi_1 * z / (safe * hyperbolic_density_at(z))
    logger.debug("localized %r with %r", nu, cutoff)
    return ComplexField(grid, coefficient), ComplexField(grid, cut_velocity)
