__all__ = ["InducedGaussPair", "beltrami_of_F", "build_pair", "build_surface"]


from typing import Optional

import numpy as np

from gauss.factor import ConformalFactor
from gauss.solver import solve_gauss
from geometry.differential import QuadDifferential
from geometry.field import ComplexField
from geometry.grid import DiscGrid
from quasiconformal.beltrami import BeltramiCoefficient
from quasiconformal.solver import QCMap, solve_beltrami
from tags.normalization import Normalization
from tags.sign import Sign
from utils.errors import InvalidParameterError, NormViolationError
from utils.logger import get_logger


logger = get_logger(__name__)


def beltrami_of_F(phi: ConformalFactor, Phi: Optional[QuadDifferential] = None, sign: Sign = Sign.PLUS) -> BeltramiCoefficient:
    """
    Beltrami coefficient +-conj(Phi) e^{-phi} of the induced Gauss map F_+-.

    The minus branch is the exact negation of the plus branch.

    Args:
        phi (ConformalFactor): Converged conformal factor.
        Phi (Optional[QuadDifferential]): Hopf data; defaults to the data of ``phi``.
        sign (Sign): Branch of the Gauss map.

    Returns:
        BeltramiCoefficient: The sampled coefficient.

    Raises:
        NormViolationError: If the coefficient reaches modulus 1, which
            signals an unconverged factor.
    """
    Phi = phi.Phi if Phi is None else Phi
    values = np.conj(Phi.evaluate(phi.grid.z)) * phi.exp_minus_phi.values
    if Sign(sign) == Sign.MINUS:
        values = -values
    try:
        return BeltramiCoefficient(ComplexField(phi.grid, values))
    except NormViolationError:
        logger.error("induced Gauss map coefficient reached sup-norm 1 on %r", phi.grid)
        raise


class InducedGaussPair:
    """
    The induced Gauss maps F_+ and F_- of a maximal disc with data (phi, Phi).

    Attributes:
        F_plus (QCMap): Three-point normalized solve for mu_plus.
        F_minus (QCMap): Three-point normalized solve for mu_minus.
        mu_plus (BeltramiCoefficient): conj(Phi) e^{-phi}.
        mu_minus (BeltramiCoefficient): -conj(Phi) e^{-phi}.
        phi (ConformalFactor): The conformal factor.
        Phi (QuadDifferential): The Hopf data.
    """

    __slots__ = ("__F_plus", "__F_minus", "__mu_plus", "__mu_minus", "__phi")

    def __init__(
        self,
        F_plus: QCMap,
        F_minus: QCMap,
        mu_plus: BeltramiCoefficient,
        mu_minus: BeltramiCoefficient,
        phi: ConformalFactor,
    ) -> None:
        self.__F_plus = F_plus
        self.__F_minus = F_minus
        self.__mu_plus = mu_plus
        self.__mu_minus = mu_minus
        self.__phi = phi

    @property
    def F_plus(self) -> QCMap:
        """Returns F_+."""
        return self.__F_plus

    @property
    def F_minus(self) -> QCMap:
        """Returns F_-."""
        return self.__F_minus

    @property
    def mu_plus(self) -> BeltramiCoefficient:
        """Returns the coefficient of F_+."""
        return self.__mu_plus

    @property
    def mu_minus(self) -> BeltramiCoefficient:
        """Returns the coefficient of F_-."""
        return self.__mu_minus

    @property
    def phi(self) -> ConformalFactor:
        """Returns the conformal factor."""
        return self.__phi

    @property
    def Phi(self) -> QuadDifferential:
        """Returns the Hopf data."""
        return self.__phi.Phi

    @property
    def grid(self) -> DiscGrid:
        """Returns the grid shared by every member."""
        return self.__phi.grid

    def F(self, sign: Sign) -> QCMap:
        """Returns the Gauss map of the given branch."""
        return self.__F_plus if Sign(sign) == Sign.PLUS else self.__F_minus

    def mu(self, sign: Sign) -> BeltramiCoefficient:
        """Returns the coefficient of the given branch."""
        return self.__mu_plus if Sign(sign) == Sign.PLUS else self.__mu_minus

    def __repr__(self) -> str:
        return f"InducedGaussPair({self.__phi!r}, sup_mu={self.__mu_plus.sup_norm:.4g})"


def build_pair(
    phi: ConformalFactor,
    Phi: Optional[QuadDifferential] = None,
    tol: float = 1e-10,
) -> InducedGaussPair:
    """
    Solves the Beltrami equations of mu_+- = +-conj(Phi) e^{-phi}.

    Both maps are three-point normalized, so they fix 1, -1 and -i on the
    unit circle and send the disc onto itself.

    Args:
        phi (ConformalFactor): Converged conformal factor.
        Phi (Optional[QuadDifferential]): Hopf data; must match the data of ``phi``.
        tol (float): Beltrami solver tolerance.

    Returns:
        InducedGaussPair: The pair.

    Raises:
        InvalidParameterError: If ``Phi`` differs from the data ``phi`` was solved for.
        NormTooLargeError: If the coefficients leave the solver regime.
    """
    if Phi is not None and not np.array_equal(Phi.coeffs, phi.Phi.coeffs):
        raise InvalidParameterError(f"{Phi!r} is not the Hopf data of {phi!r}")
    mu_plus = beltrami_of_F(phi, sign=Sign.PLUS)
    mu_minus = BeltramiCoefficient(-mu_plus.field)
    F_plus = solve_beltrami(mu_plus, Normalization.THREE_POINT, tol)
    F_minus = solve_beltrami(mu_minus, Normalization.THREE_POINT, tol)
    logger.info(
        "induced Gauss maps built: sup_mu=%.4g residuals=(%.2e, %.2e)",
        mu_plus.sup_norm,
        F_plus.residual,
        F_minus.residual,
    )
    return InducedGaussPair(F_plus, F_minus, mu_plus, mu_minus, phi)


def build_surface(Phi: QuadDifferential, grid: DiscGrid, tol: float = 1e-10) -> InducedGaussPair:
    """Solves the Gauss equation for ``Phi`` and builds the induced Gauss maps."""
    return build_pair(solve_gauss(Phi, grid, tol), tol=tol)
