__all__ = ["CotangentPoint", "MessImage"]


import numpy as np

from gauss_maps.pair import InducedGaussPair
from geometry.differential import QuadDifferential, TangentField
from geometry.grid import DiscGrid
from quasiconformal.beltrami import BeltramiCoefficient
from quasiconformal.solver import SOLVER_REGIME, QCMap
from utils.errors import InvalidParameterError, NormTooLargeError


class CotangentPoint:
    """
    A point (mu, Phi) of the cotangent bundle of the Weil-Petersson class.

    The base coefficient is the harmonic Beltrami differential of ``mu``; both
    Weil-Petersson class norms are computed at construction.

    Attributes:
        mu (TangentField): The harmonic representative e^{-psi} conj(q).
        mu_base (BeltramiCoefficient): Its samples, the coefficient of z = w_mu.
        Phi (QuadDifferential): The holomorphic quadratic differential.
        wp_norm_mu (float): (int |mu|^2 e^psi)^{1/2}.
        a2_norm_Phi (float): (int |Phi|^2 e^{-psi})^{1/2}.
    """

    __slots__ = ("__mu", "__mu_base", "__Phi", "__wp_norm_mu", "__a2_norm_Phi")

    def __init__(self, mu: TangentField, Phi: QuadDifferential) -> None:
        """Initializes the point.

        Raises:
            InvalidParameterError: If ``mu`` is not sampled on a disc grid.
            NormTooLargeError: If sup |mu| exceeds the solver regime.
        """
        if not isinstance(mu.grid, DiscGrid):
            raise InvalidParameterError(f"cotangent points live on a disc grid, got {mu.grid!r}")
        mu_base = BeltramiCoefficient(mu.field)
        if mu_base.sup_norm > SOLVER_REGIME:
            raise NormTooLargeError(
                f"sup |mu| = {mu_base.sup_norm:.4g} exceeds the solver regime {SOLVER_REGIME}"
            )
        self.__mu = mu
        self.__mu_base = mu_base
        self.__Phi = Phi
        self.__wp_norm_mu = mu.wp_norm()
        self.__a2_norm_Phi = Phi.a2_norm(mu.grid)

    @classmethod
    def origin(cls, grid: DiscGrid) -> "CotangentPoint":
        """Returns the zero section point (0, 0) on ``grid``."""
        return cls(TangentField([0.0], grid), QuadDifferential([0.0]))

    @property
    def mu(self) -> TangentField:
        """Returns the harmonic representative."""
        return self.__mu

    @property
    def mu_base(self) -> BeltramiCoefficient:
        """Returns the sampled base coefficient."""
        return self.__mu_base

    @property
    def Phi(self) -> QuadDifferential:
        """Returns the quadratic differential."""
        return self.__Phi

    @property
    def grid(self) -> DiscGrid:
        """Returns the grid of the samples."""
        return self.__mu.grid

    @property
    def wp_norm_mu(self) -> float:
        """Returns the Weil-Petersson norm of mu."""
        return self.__wp_norm_mu

    @property
    def a2_norm_Phi(self) -> float:
        """Returns the A2 norm of Phi."""
        return self.__a2_norm_Phi

    def __repr__(self) -> str:
        return (
            f"CotangentPoint(|mu|_WP={self.__wp_norm_mu:.4g}, "
            f"|Phi|_A2={self.__a2_norm_Phi:.4g}, {self.grid!r})"
        )


class MessImage:
    """
    Image (z_+, z_-) = (F_+ o z, F_- o z) of a cotangent point under the Mess map.

    Attributes:
        mu_plus_target (BeltramiCoefficient): Coefficient of z_+.
        mu_minus_target (BeltramiCoefficient): Coefficient of z_-.
        trace_plus (np.ndarray): Unwrapped boundary angles of z_+ on |x| = R.
        trace_minus (np.ndarray): Unwrapped boundary angles of z_- on |x| = R.
        chart (QCMap): The base chart z = w_mu.
        pair (InducedGaussPair): The induced Gauss maps on the z-disc.
    """

    __slots__ = ("__mu_plus", "__mu_minus", "__trace_plus", "__trace_minus", "__chart", "__pair")

    def __init__(
        self,
        mu_plus_target: BeltramiCoefficient,
        mu_minus_target: BeltramiCoefficient,
        trace_plus: np.ndarray,
        trace_minus: np.ndarray,
        chart: QCMap,
        pair: InducedGaussPair,
    ) -> None:
        self.__mu_plus = mu_plus_target
        self.__mu_minus = mu_minus_target
        self.__trace_plus = np.array(trace_plus, dtype=float)
        self.__trace_minus = np.array(trace_minus, dtype=float)
        self.__trace_plus.setflags(write=False)
        self.__trace_minus.setflags(write=False)
        self.__chart = chart
        self.__pair = pair

    @property
    def mu_plus_target(self) -> BeltramiCoefficient:
        """Returns the coefficient of z_+."""
        return self.__mu_plus

    @property
    def mu_minus_target(self) -> BeltramiCoefficient:
        """Returns the coefficient of z_-."""
        return self.__mu_minus

    @property
    def trace_plus(self) -> np.ndarray:
        """Returns the boundary angles of z_+."""
        return self.__trace_plus

    @property
    def trace_minus(self) -> np.ndarray:
        """Returns the boundary angles of z_-."""
        return self.__trace_minus

    @property
    def chart(self) -> QCMap:
        """Returns the base chart."""
        return self.__chart

    @property
    def pair(self) -> InducedGaussPair:
        """Returns the induced Gauss maps."""
        return self.__pair

    def traces_increasing(self) -> bool:
        """Returns whether both traces are strictly increasing."""
        return bool(np.all(np.diff(self.__trace_plus) > 0.0) and np.all(np.diff(self.__trace_minus) > 0.0))

    def __repr__(self) -> str:
        return (
            f"MessImage(sup_plus={self.__mu_plus.sup_norm:.4g}, "
            f"sup_minus={self.__mu_minus.sup_norm:.4g})"
        )
