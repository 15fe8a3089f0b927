__all__ = ["DeformationScenario", "FamilyMember", "DEFAULT_EPSILONS"]


import threading
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from deformation.ahlfors import ahlfors_direction
from gauss_maps.pair import InducedGaussPair
from geometry.differential import TangentField, hyperbolic_density_at
from geometry.field import ComplexField
from geometry.operators import integrate
from quasiconformal.beltrami import BeltramiCoefficient
from quasiconformal.solver import QCMap, solve_beltrami
from tags.normalization import Normalization
from tags.quantity import Quantity
from tags.sign import Sign
from utils.errors import GridMismatchError, InvalidParameterError
from utils.logger import get_logger


logger = get_logger(__name__)


DEFAULT_EPSILONS = (0.02, 0.01, 0.005)


Source = Union[TangentField, ComplexField]


def _localized(nu: Optional[Source]) -> Optional[Source]:
    if isinstance(nu, TangentField):
        return ahlfors_direction(nu)[0]
    return nu


class FamilyMember:
    """
    One member F^eps = h^eps o F o (f^eps)^{-1} of a deformation family, pulled back by f^eps.

    Nothing is interpolated: with H = h^eps o F = F^eps o f^eps, the
    derivatives A = F^eps_w o f and B = F^eps_wbar o f follow from
    H_z = A f_z + B conj(f_zbar) and H_zbar = A f_zbar + B conj(f_z) at every node.
    """

    __slots__ = ("__epsilon", "__quantities", "__energy")

    def __init__(self, epsilon: float, F: QCMap, h: Optional[QCMap], f: Optional[QCMap]) -> None:
        slope, antislope = F.dz.values, F.dzbar.values
        if h is None:
            image, H_z, H_zbar = F.values.values, slope, antislope
        else:
            image, h_w, h_wbar = h.evaluate(F.values.values)
            H_z = h_w * slope + h_wbar * np.conj(antislope)
            H_zbar = h_w * antislope + h_wbar * np.conj(slope)
        if f is None:
            f_z, f_zbar, mu_f = np.ones_like(slope), np.zeros_like(slope), np.zeros_like(slope)
        else:
            f_z, f_zbar, mu_f = f.dz.values, f.dzbar.values, f.mu.values
        jacobian = np.abs(f_z) ** 2 - np.abs(f_zbar) ** 2
        A = (H_z * np.conj(f_z) - np.conj(f_zbar) * H_zbar) / jacobian
        B = (f_z * H_zbar - f_zbar * H_z) / jacobian
        density = hyperbolic_density_at(image)
        antiholomorphic = density * np.abs(B) ** 2 * np.abs(f_z) ** 2
        self.__epsilon = float(epsilon)
        self.__quantities = {
            Quantity.MU_F: (B / A) * np.conj(f_z) / f_z,
            Quantity.PHI: density * A * np.conj(B) * f_z**2,
            Quantity.ANTIHOL_DENSITY: antiholomorphic.astype(complex),
            Quantity.HOL_DENSITY: (density * np.abs(A) ** 2 * np.abs(f_z) ** 2).astype(complex),
            Quantity.MU_H_DOT: H_zbar / H_z,
        }
        self.__energy = integrate(
            ComplexField(F.grid, antiholomorphic * (1.0 - np.abs(mu_f) ** 2))
        ).real

    @property
    def epsilon(self) -> float:
        """Returns the signed deformation parameter."""
        return self.__epsilon

    @property
    def energy(self) -> float:
        """Returns the anti-holomorphic energy of F^eps."""
        return self.__energy

    def quantity(self, quantity: Quantity) -> np.ndarray:
        """Returns the pulled-back samples of ``quantity``."""
        return self.__quantities[Quantity(quantity)]


class DeformationScenario:
    """
    Deformation data around an induced Gauss pair.

    f^eps solves the Beltrami equation with coefficient eps nu_source on the
    source disc; h^eps_+- solve it with eps nu_+- on the target discs. All
    maps are three-point normalized. A harmonic target direction is replaced
    by its compactly supported counterpart from ``ahlfors_direction``, whose
    velocity leaves the hyperbolic metric of the target fixed to first order;
    ``nu_plus`` and ``nu_minus`` return that replacement.

    Attributes:
        pair (InducedGaussPair): The base surface.
        nu_source (Optional[Source]): nu_f, or None for f^eps = id.
        nu_plus (Optional[Source]): nu_+ on the target of F_+.
        nu_minus (Optional[Source]): nu_- on the target of F_-.
        epsilons (Tuple[float, ...]): Positive, strictly decreasing ladder.
        tol (float): Tolerance of the member solves.
    """

    def __init__(
        self,
        pair: InducedGaussPair,
        nu_source: Optional[Source] = None,
        nu_plus: Optional[Source] = None,
        nu_minus: Optional[Source] = None,
        epsilons: Sequence[float] = DEFAULT_EPSILONS,
        tol: float = 1e-12,
    ) -> None:
        """Initializes the scenario.

        Raises:
            InvalidParameterError: If no direction is given or the ladder is invalid.
            GridMismatchError: If a direction is not sampled on the pair's grid.
        """
        if nu_source is None and nu_plus is None and nu_minus is None:
            raise InvalidParameterError("a deformation scenario needs at least one direction")
        ladder = tuple(float(eps) for eps in epsilons)
        if len(ladder) < 2 or any(eps <= 0.0 for eps in ladder) or any(
            later >= earlier for earlier, later in zip(ladder, ladder[1:])
        ):
            raise InvalidParameterError(f"epsilons must be positive and strictly decreasing, got {ladder}")
        for nu in (nu_source, nu_plus, nu_minus):
            if nu is not None and nu.grid != pair.grid:
                raise GridMismatchError(f"{nu.grid!r} does not match {pair.grid!r}")
        self.__pair = pair
        self.__nu_source = nu_source
        self.__nu_plus = _localized(nu_plus)
        self.__nu_minus = _localized(nu_minus)
        self.__epsilons = ladder
        self.__tol = float(tol)
        self.__lock = threading.Lock()
        self.__members: Dict[Tuple[float, int], FamilyMember] = dict()

    @property
    def pair(self) -> InducedGaussPair:
        """Returns the base surface."""
        return self.__pair

    @property
    def nu_source(self) -> Optional[Source]:
        """Returns nu_f."""
        return self.__nu_source

    @property
    def nu_plus(self) -> Optional[Source]:
        """Returns nu_+."""
        return self.__nu_plus

    @property
    def nu_minus(self) -> Optional[Source]:
        """Returns nu_-."""
        return self.__nu_minus

    @property
    def epsilons(self) -> Tuple[float, ...]:
        """Returns the ladder."""
        return self.__epsilons

    @property
    def tol(self) -> float:
        """Returns the member solve tolerance."""
        return self.__tol

    def nu_target(self, sign: Sign) -> Optional[Source]:
        """Returns the target direction of the given branch."""
        return self.__nu_plus if Sign(sign) == Sign.PLUS else self.__nu_minus

    def member(self, epsilon: float, sign: Sign = Sign.PLUS) -> FamilyMember:
        """Returns the family member at ``epsilon`` (memoized)."""
        key = (float(epsilon), int(Sign(sign)))
        with self.__lock:
            cached = self.__members.get(key)
        if cached is not None:
            return cached
        h = self._solve(self.nu_target(sign), epsilon)
        f = self._solve(self.__nu_source, epsilon)
        member = FamilyMember(epsilon, self.__pair.F(sign), h, f)
        with self.__lock:
            self.__members.setdefault(key, member)
        return member

    def _solve(self, nu: Optional[Source], epsilon: float) -> Optional[QCMap]:
        if nu is None:
            return None
        field = nu.field if isinstance(nu, TangentField) else nu
        mu = BeltramiCoefficient(field * epsilon)
        return solve_beltrami(mu, Normalization.THREE_POINT, self.__tol)

    def __repr__(self) -> str:
        present = [
            name
            for name, nu in (("nu_f", self.__nu_source), ("nu_+", self.__nu_plus), ("nu_-", self.__nu_minus))
            if nu is not None
        ]
        return f"DeformationScenario({', '.join(present)}, epsilons={self.__epsilons})"
