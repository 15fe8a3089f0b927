__all__ = [
    "CotangentTangent",
    "omega_wp",
    "omega_c",
    "pullback_weight",
    "mess_pullback_wp",
    "pulled_pairing",
]


from typing import Optional, Union

import numpy as np

from deformation.closed import pm_variations_pulled, pulled_back
from gauss_maps.pair import InducedGaussPair
from geometry.differential import TangentField, hyperbolic_density_at, wp_inner
from geometry.field import ComplexField, RealField, same_grid
from geometry.operators import integrate
from tags.sign import Sign
from tags.weight import PullbackWeight


Direction = Union[TangentField, ComplexField]


class CotangentTangent:
    """
    Tangent vector (delta_mu, delta_Phi) to the cotangent bundle at a point.

    Attributes:
        delta_mu (ComplexField): Variation of the Beltrami coefficient.
        delta_Phi (ComplexField): Variation of the quadratic differential.
        provenance (str): Short description of the directions it came from.
    """

    __slots__ = ("__delta_mu", "__delta_Phi", "__provenance")

    def __init__(self, delta_mu: ComplexField, delta_Phi: ComplexField, provenance: str = "") -> None:
        same_grid(delta_mu, delta_Phi)
        self.__delta_mu = delta_mu
        self.__delta_Phi = delta_Phi
        self.__provenance = provenance

    @classmethod
    def from_sides(
        cls,
        pair: InducedGaussPair,
        nu_plus: Optional[Direction] = None,
        nu_minus: Optional[Direction] = None,
        provenance: str = "",
    ) -> "CotangentTangent":
        """Lifts a pair of target directions (nu_+, nu_-) through the Gauss maps."""
        delta_mu, delta_Phi = pm_variations_pulled(
            pulled_back(nu_plus, pair.F_plus), pulled_back(nu_minus, pair.F_minus), pair
        )
        return cls(delta_mu, delta_Phi, provenance)

    @classmethod
    def from_pulled(
        cls,
        pair: InducedGaussPair,
        pulled_plus: ComplexField,
        pulled_minus: ComplexField,
        provenance: str = "",
    ) -> "CotangentTangent":
        """Builds the vector from already pulled-back directions A_+ and A_-."""
        delta_mu, delta_Phi = pm_variations_pulled(pulled_plus, pulled_minus, pair)
        return cls(delta_mu, delta_Phi, provenance)

    @property
    def delta_mu(self) -> ComplexField:
        """Returns delta_mu."""
        return self.__delta_mu

    @property
    def delta_Phi(self) -> ComplexField:
        """Returns delta_Phi."""
        return self.__delta_Phi

    @property
    def provenance(self) -> str:
        """Returns the provenance note."""
        return self.__provenance

    @property
    def grid(self):
        """Returns the common grid."""
        return self.__delta_mu.grid

    def scaled(self, factor: float) -> "CotangentTangent":
        """Returns factor * (delta_mu, delta_Phi) for a real factor."""
        return CotangentTangent(
            self.__delta_mu * float(factor), self.__delta_Phi * float(factor), self.__provenance
        )

    def __repr__(self) -> str:
        return f"CotangentTangent({self.__provenance or 'anonymous'}, {self.grid!r})"


def omega_wp(u: Direction, v: Direction) -> float:
    """Weil-Petersson symplectic form -Im <u, v>."""
    return float(-np.imag(wp_inner(u, v)))


def omega_c(t1: CotangentTangent, t2: CotangentTangent) -> float:
    """
    Canonical form -2 Im int (delta_1 Phi delta_2 mu - delta_2 Phi delta_1 mu) d^2z.

    The form is normalized exactly as written; no Liouville-form constant is applied.
    """
    same_grid(t1.delta_mu, t2.delta_mu)
    integrand = t1.delta_Phi * t2.delta_mu - t2.delta_Phi * t1.delta_mu
    return float(-2.0 * np.imag(integrate(integrand)))


def pullback_weight(pair: InducedGaussPair, sign: Sign = Sign.PLUS, weight: PullbackWeight = PullbackWeight.SIGMA) -> RealField:
    """
    Area weight of the pulled-back WP form on the source disc.

    SIGMA gives (1 - |mu_F|^2) e^phi; JACOBIAN gives e^{psi o F}(|F_z|^2 - |F_zbar|^2),
    measured from the map itself. The two agree when e^phi = e^{psi o F} |F_z|^2.
    """
    if PullbackWeight(weight) == PullbackWeight.SIGMA:
        return (1.0 - pair.mu_plus.field.abs() ** 2) * pair.phi.exp_phi
    F = pair.F(sign)
    density = hyperbolic_density_at(F.values.values)
    jacobian = np.abs(F.dz.values) ** 2 - np.abs(F.dzbar.values) ** 2
    return RealField(pair.grid, density * jacobian)


def mess_pullback_wp(
    sign: Sign,
    nu_a: Direction,
    nu_b: Direction,
    pair: InducedGaussPair,
    weight: PullbackWeight = PullbackWeight.SIGMA,
) -> float:
    """
    Pullback of omega_WP by one component of the Mess map.

    Returns -Im int W F*(nu_a) conj(F*(nu_b)) d^2z with F = F_+- and W chosen
    by ``weight``.

    Args:
        sign (Sign): Which Gauss map.
        nu_a (Direction): First direction on the target disc.
        nu_b (Direction): Second direction on the target disc.
        pair (InducedGaussPair): The solved Gauss maps.
        weight (PullbackWeight): Area weight route.
    """
    F = pair.F(sign)
    left, right = pulled_back(nu_a, F), pulled_back(nu_b, F)
    return pulled_pairing(left, right, pullback_weight(pair, sign, weight))


def pulled_pairing(left: ComplexField, right: ComplexField, weight: RealField) -> float:
    """Returns -Im int W left conj(right) d^2z for already pulled-back directions."""
    same_grid(left, right, weight)
    return float(-np.imag(integrate(weight * left * right.conj())))
