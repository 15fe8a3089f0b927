__all__ = [
    "pulled_back",
    "lie_mu_F_closed",
    "mu_H_dot_closed",
    "lie_hopf_closed",
    "lie_energy_density_closed",
    "pm_variations",
    "pm_variations_pulled",
    "section_lift",
    "energy_first_variation",
    "energy_second_variation",
]


from typing import Optional, Tuple, Union

from gauss.factor import ConformalFactor
from gauss_maps.pair import InducedGaussPair
from geometry.differential import TangentField
from geometry.field import ComplexField, same_grid
from geometry.operators import integrate
from quasiconformal.group import pullback_beltrami
from quasiconformal.solver import QCMap
from tags.quantity import EnergyDensity


Source = Union[TangentField, ComplexField]


def _field(nu: Source) -> ComplexField:
    return nu.field if isinstance(nu, TangentField) else nu


def pulled_back(nu: Optional[Source], F: QCMap) -> ComplexField:
    """Returns F*(nu), or zero when ``nu`` is absent.

    Sampled fields are interpolated at the mapped points and vanish outside
    their disc.
    """
    if nu is None:
        return ComplexField.zeros(F.grid)
    if isinstance(nu, TangentField):
        return pullback_beltrami(nu, F)
    return pullback_beltrami(lambda points: nu.at(points, outside=0.0), F)


def lie_mu_F_closed(nu_f: Source, pulled_h: ComplexField, mu_F: ComplexField) -> ComplexField:
    """Lie derivative of mu_F: (1 - |mu_F|^2) F*(nu_h) - (nu_f - conj(nu_f) mu_F^2).

    Args:
        nu_f (Source): Coefficient direction of the source deformation.
        pulled_h (ComplexField): The pulled-back target direction F*(nu_h).
        mu_F (ComplexField): Coefficient of the Gauss map.
    """
    nu_f = _field(nu_f)
    same_grid(nu_f, pulled_h, mu_F)
    return (1.0 - mu_F.abs() ** 2) * pulled_h - (nu_f - nu_f.conj() * mu_F * mu_F)


def mu_H_dot_closed(
    nu_f: Source,
    pulled_h: ComplexField,
    mu_F: ComplexField,
    through_lie: bool = True,
) -> ComplexField:
    """
    Variation of the coefficient of H = h^eps o F.

    With ``through_lie`` the value is nu_f - conj(nu_f) mu_F^2 + L mu_F,
    otherwise (1 - |mu_F|^2) F*(nu_h); the two agree identically.
    """
    nu_f = _field(nu_f)
    same_grid(nu_f, pulled_h, mu_F)
    if through_lie:
        return nu_f - nu_f.conj() * mu_F * mu_F + lie_mu_F_closed(nu_f, pulled_h, mu_F)
    return (1.0 - mu_F.abs() ** 2) * pulled_h


def lie_hopf_closed(
    nu_f: Source,
    pulled_h: ComplexField,
    mu_F: ComplexField,
    phi: ConformalFactor,
) -> ComplexField:
    """Lie derivative of the Hopf differential.

    Returns e^phi (F*(nu_h) conj(mu_F)^2 - conj(nu_f) |mu_F|^2) + e^phi (conj(F*(nu_h)) - conj(nu_f)).
    """
    nu_f = _field(nu_f)
    same_grid(nu_f, pulled_h, mu_F, phi.phi)
    weight = phi.exp_phi
    bar_m = mu_F.conj()
    return weight * (pulled_h * bar_m * bar_m - nu_f.conj() * mu_F.abs() ** 2) + weight * (
        pulled_h.conj() - nu_f.conj()
    )


def lie_energy_density_closed(
    nu_f: Source,
    pulled_h: ComplexField,
    mu_F: ComplexField,
    phi: ConformalFactor,
    which: EnergyDensity = EnergyDensity.ANTIHOLOMORPHIC,
) -> ComplexField:
    """
    Lie derivative of the holomorphic or anti-holomorphic energy density.

    Both variations equal Phi (F*(nu_h) - nu_f) + conj(Phi) (conj(F*(nu_h)) - conj(nu_f))
    with Phi = e^phi conj(mu_F) the Hopf differential of F; ``which`` only
    records the density the caller compares against.
    """
    EnergyDensity(which)
    nu_f = _field(nu_f)
    same_grid(nu_f, pulled_h, mu_F, phi.phi)
    hopf = phi.exp_phi * mu_F.conj()
    term = hopf * (pulled_h - nu_f)
    return term + term.conj()


def pm_variations_pulled(
    pulled_plus: ComplexField,
    pulled_minus: ComplexField,
    pair: InducedGaussPair,
) -> Tuple[ComplexField, ComplexField]:
    """(delta_mu, delta_Phi) from the pulled-back directions A_+- = F_+-*(nu_+-)."""
    same_grid(pulled_plus, pulled_minus, pair.phi.phi)
    m = pair.mu_plus.field
    total = pulled_plus + pulled_minus
    difference = pulled_plus - pulled_minus
    delta_mu = 0.5 * (total + total.conj() * m * m) / (1.0 + m.abs() ** 2)
    bar_m = m.conj()
    delta_Phi = 0.5 * pair.phi.exp_phi * (difference * bar_m * bar_m + difference.conj())
    return delta_mu, delta_Phi


def pm_variations(
    nu_plus: Optional[Source],
    nu_minus: Optional[Source],
    pair: InducedGaussPair,
) -> Tuple[ComplexField, ComplexField]:
    """
    Variations (delta_mu, delta_Phi) of the cotangent point along (nu_+, nu_-).

    With A_+- = F_+-*(nu_+-) and mu_F the coefficient of F_+:
    delta_mu = (A_+ + A_- + conj(A_+ + A_-) mu_F^2) / (2 (1 + |mu_F|^2)) and
    delta_Phi = e^phi ((A_+ - A_-) conj(mu_F)^2 + conj(A_+ - A_-)) / 2.

    Args:
        nu_plus (Optional[Source]): Direction on the target of F_+, or None.
        nu_minus (Optional[Source]): Direction on the target of F_-, or None.
        pair (InducedGaussPair): The solved Gauss maps.

    Returns:
        Tuple[ComplexField, ComplexField]: delta_mu and delta_Phi.
    """
    return pm_variations_pulled(
        pulled_back(nu_plus, pair.F_plus),
        pulled_back(nu_minus, pair.F_minus),
        pair,
    )


def section_lift(nu: Source, pair: InducedGaussPair) -> ComplexField:
    """
    One-sided pulled-back direction A that produces delta_mu = nu.

    A = 2 (nu - conj(nu) mu_F^2) / (1 - |mu_F|^2). Placed on the + side (with
    zero on the - side) it gives delta_Phi = e^phi (1 + |mu_F|^2) conj(nu);
    placed on the - side it gives the negative of that.
    """
    field = _field(nu)
    same_grid(field, pair.mu_plus.field)
    m = pair.mu_plus.field
    return 2.0 * (field - field.conj() * m * m) / (1.0 - m.abs() ** 2)


def energy_first_variation(nu: Source, pair: InducedGaussPair) -> complex:
    """Returns 2 int e^phi nu conj(mu_F) d^2z, twice the holomorphic derivative of E."""
    field = _field(nu)
    same_grid(field, pair.mu_plus.field)
    return 2.0 * integrate(pair.phi.exp_phi * field * pair.mu_plus.field.conj())


def energy_second_variation(nu: Source, mu: Source, pair: InducedGaussPair) -> complex:
    """Returns 2 int e^phi (1 + |mu_F|^2) nu conj(mu) d^2z."""
    left, right = _field(nu), _field(mu)
    same_grid(left, right, pair.mu_plus.field)
    weight = pair.phi.exp_phi * (1.0 + pair.mu_plus.field.abs() ** 2)
    return 2.0 * integrate(weight * left * right.conj())
