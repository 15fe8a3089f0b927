__all__ = [
    "PolarGrid",
    "DiscGrid",
    "AnnulusGrid",
    "make_grid",
    "make_annulus",
    "Field",
    "ComplexField",
    "RealField",
    "same_grid",
    "d_r",
    "d_theta",
    "d_z",
    "d_zbar",
    "laplacian",
    "integrate",
    "interpolate",
    "hyperbolic_density",
    "hyperbolic_density_at",
    "psi_u",
    "QuadDifferential",
    "TangentField",
    "wp_inner",
    "OperatorCache",
    "operator_cache",
]


from geometry.cache import OperatorCache, operator_cache
from geometry.differential import (
    QuadDifferential,
    TangentField,
    hyperbolic_density,
    hyperbolic_density_at,
    psi_u,
    wp_inner,
)
from geometry.field import ComplexField, Field, RealField, same_grid
from geometry.grid import AnnulusGrid, DiscGrid, PolarGrid, make_annulus, make_grid
from geometry.operators import d_r, d_theta, d_z, d_zbar, integrate, interpolate, laplacian
