__all__ = [
    "Mobius",
    "CauchyTransform",
    "cauchy_transform",
    "RiemannMap",
    "harmonic_conjugate",
    "BeltramiCoefficient",
    "reflect_extension",
    "QCMap",
    "solve_beltrami",
    "SOLVER_REGIME",
    "group_law",
    "right_translation_pullback",
    "pullback_beltrami",
    "measured_coefficient",
    "compose_inverse",
    "schwarzian",
    "bers_embedding",
    "exterior_density",
]


from quasiconformal.beltrami import BeltramiCoefficient, reflect_extension
from quasiconformal.conformal import RiemannMap, harmonic_conjugate
from quasiconformal.group import (
    compose_inverse,
    group_law,
    measured_coefficient,
    pullback_beltrami,
    right_translation_pullback,
)
from quasiconformal.mobius import Mobius
from quasiconformal.schwarzian import bers_embedding, exterior_density, schwarzian
from quasiconformal.solver import SOLVER_REGIME, QCMap, solve_beltrami
from quasiconformal.transform import CauchyTransform, cauchy_transform
