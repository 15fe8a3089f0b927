__all__ = [
    "ConformalFactor",
    "curvature",
    "holomorphic_energy_density",
    "w_field",
]


import numpy as np

from geometry.differential import QuadDifferential, hyperbolic_density
from geometry.field import RealField
from geometry.grid import DiscGrid
from geometry.operators import laplacian


class ConformalFactor:
    """
    Converged solution phi of the Gauss equation 2 phi_zzbar = e^phi - e^{-phi} |Phi|^2.

    The factor is stored as phi = psi + u with psi the hyperbolic log-density
    and u = 0 on the last ring; the Liouville identity of psi is used in
    closed form, so every derived quantity refers to u.

    Attributes:
        phi (RealField): The conformal factor.
        u (RealField): The excess phi - psi over the hyperbolic metric.
        Phi (QuadDifferential): The Hopf data the factor was solved for.
        residual_sup (float): Sup of the Gauss residual over the interior rings.
        iterations (int): Newton steps taken.
    """

    __slots__ = ("__u", "__phi", "__Phi", "__residual_sup", "__iterations")

    def __init__(self, u: RealField, Phi: QuadDifferential, residual_sup: float, iterations: int) -> None:
        self.__u = u
        self.__phi = RealField(u.grid, np.log(hyperbolic_density(u.grid).values) + u.values)
        self.__Phi = Phi
        self.__residual_sup = float(residual_sup)
        self.__iterations = int(iterations)

    @property
    def grid(self) -> DiscGrid:
        """Returns the grid of the samples."""
        return self.__u.grid

    @property
    def phi(self) -> RealField:
        """Returns phi."""
        return self.__phi

    @property
    def u(self) -> RealField:
        """Returns phi - psi."""
        return self.__u

    @property
    def Phi(self) -> QuadDifferential:
        """Returns the Hopf data."""
        return self.__Phi

    @property
    def residual_sup(self) -> float:
        """Returns the final Gauss residual."""
        return self.__residual_sup

    @property
    def iterations(self) -> int:
        """Returns the number of Newton steps."""
        return self.__iterations

    @property
    def exp_phi(self) -> RealField:
        """Returns e^phi."""
        return self.__phi.apply(np.exp)

    @property
    def exp_minus_phi(self) -> RealField:
        """Returns e^{-phi}."""
        return self.__phi.apply(lambda values: np.exp(-values))

    def __repr__(self) -> str:
        return (
            f"ConformalFactor({self.grid!r}, {self.__Phi!r}, "
            f"residual={self.__residual_sup:.3e}, iterations={self.__iterations})"
        )


def curvature(phi: ConformalFactor) -> RealField:
    """
    Gaussian curvature K = -2 phi_zzbar e^{-phi} of the induced metric.

    With Delta psi / 2 = e^psi taken in closed form this is
    K = -(e^psi + Delta u / 2) e^{-phi}, which is exactly -1 when u vanishes.
    """
    density = hyperbolic_density(phi.grid)
    return -(density + 0.5 * laplacian(phi.u)) * phi.exp_minus_phi


def holomorphic_energy_density(phi: ConformalFactor) -> RealField:
    """Returns e^phi, the holomorphic energy density of the induced Gauss maps."""
    return phi.exp_phi


def w_field(phi: ConformalFactor) -> RealField:
    """Returns (phi - psi) / 2, nonnegative for a converged factor."""
    return 0.5 * phi.u
