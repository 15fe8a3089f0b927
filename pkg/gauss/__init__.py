__all__ = [
    "ConformalFactor",
    "curvature",
    "holomorphic_energy_density",
    "w_field",
    "solve_gauss",
    "gauss_residual",
]


from gauss.factor import ConformalFactor, curvature, holomorphic_energy_density, w_field
from gauss.solver import gauss_residual, solve_gauss
