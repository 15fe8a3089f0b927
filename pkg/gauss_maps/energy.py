__all__ = [
    "hopf_differential",
    "anti_holomorphic_energy",
    "total_curvature_integral",
    "harmonic_residual",
    "energy_density_defect",
    "gauss_map_composite_norm",
]


from typing import Optional, Tuple

import numpy as np

from gauss.factor import ConformalFactor, holomorphic_energy_density
from gauss_maps.pair import InducedGaussPair, beltrami_of_F
from geometry.differential import QuadDifferential, hyperbolic_density_at, psi_u
from geometry.field import ComplexField, RealField
from geometry.operators import d_zbar, integrate
from quasiconformal.group import group_law
from quasiconformal.solver import QCMap


def hopf_differential(F: QCMap) -> ComplexField:
    """Hopf differential e^{psi(F)} F_z conj(F_zbar) of a map into the hyperbolic disc.

    The density is taken in closed form at the mapped points.
    """
    density = hyperbolic_density_at(F.values.values)
    return ComplexField(F.grid, density * F.dz.values * np.conj(F.dzbar.values))


def anti_holomorphic_energy(phi: ConformalFactor, Phi: Optional[QuadDifferential] = None) -> float:
    """Returns E = int |Phi|^2 e^{-phi} d^2z over the truncated disc."""
    Phi = phi.Phi if Phi is None else Phi
    modulus = np.abs(Phi.evaluate(phi.grid.z)) ** 2
    return integrate(RealField(phi.grid, modulus) * phi.exp_minus_phi)


def total_curvature_integral(phi: ConformalFactor, Phi: Optional[QuadDifferential] = None) -> float:
    """Returns int kappa^2 e^phi d^2z with kappa = |mu_F|, the principal curvature."""
    mu = beltrami_of_F(phi, Phi)
    return integrate(mu.field.abs() ** 2 * phi.exp_phi)


def harmonic_residual(F: QCMap, margin: int = 3) -> float:
    """
    Relative residual of the harmonic map equation F_zzbar + psi_w(F) F_z F_zbar = 0.

    The sup over the interior nodes is divided by sup |F_z|^2.
    """
    grid = F.grid
    tension = d_zbar(F.dz).values + psi_u(F.values.values) * F.dz.values * F.dzbar.values
    mask = grid.interior_mask(margin)
    return float(np.max(np.abs(tension[mask])) / np.max(np.abs(F.dz.values[mask]) ** 2))


def energy_density_defect(F: QCMap, phi: ConformalFactor, margin: int = 3) -> float:
    """Relative sup defect of e^phi = e^{psi(F)} |F_z|^2 over the interior nodes."""
    mask = F.grid.interior_mask(margin)
    pulled = hyperbolic_density_at(F.values.values) * np.abs(F.dz.values) ** 2
    target = holomorphic_energy_density(phi).values
    return float(np.max(np.abs(pulled - target)[mask]) / np.max(target[mask]))


def gauss_map_composite_norm(pair: InducedGaussPair) -> Tuple[RealField, RealField]:
    """
    Compares |mu_F o F_-| with 2 |mu_+| / (1 + |mu_+|^2).

    mu_F is the coefficient of F_+ o F_-^{-1}, obtained from the group law
    with the solved F_- and read back at F_-(x) by interpolation.

    Returns:
        Tuple[RealField, RealField]: The measured and the predicted moduli.
    """
    composite = group_law(pair.mu_plus, pair.mu_minus, w_mu=pair.F_minus)
    measured = np.abs(composite.field.at(pair.F_minus.values.values))
    modulus = pair.mu_plus.field.abs().values
    predicted = 2.0 * modulus / (1.0 + modulus**2)
    return RealField(pair.grid, measured), RealField(pair.grid, predicted)
