__all__ = [
    "InducedGaussPair",
    "beltrami_of_F",
    "build_pair",
    "build_surface",
    "hopf_differential",
    "anti_holomorphic_energy",
    "total_curvature_integral",
    "harmonic_residual",
    "energy_density_defect",
    "gauss_map_composite_norm",
]


from gauss_maps.energy import (
    anti_holomorphic_energy,
    energy_density_defect,
    gauss_map_composite_norm,
    harmonic_residual,
    hopf_differential,
    total_curvature_integral,
)
from gauss_maps.pair import InducedGaussPair, beltrami_of_F, build_pair, build_surface
