__all__ = [
    "ScenarioBase",
    "SolveGauss",
    "BuildSurface",
    "MessForward",
    "MessRoundtrip",
    "LieCheck",
    "SymplecticCheck",
    "PotentialCheck",
    "Convergence",
    "REGISTRY",
]


from typing import Dict, Type

from scenarios.base import Base as ScenarioBase
from scenarios.build_surface import BuildSurface
from scenarios.convergence import Convergence
from scenarios.lie_check import LieCheck
from scenarios.mess import MessForward, MessRoundtrip
from scenarios.solve_gauss import SolveGauss
from scenarios.symplectic_check import PotentialCheck, SymplecticCheck
from tags.scenario import Scenario


REGISTRY: Dict[Scenario, Type[ScenarioBase]] = {
    cls.scenario: cls
    for cls in (
        SolveGauss,
        BuildSurface,
        MessForward,
        MessRoundtrip,
        LieCheck,
        SymplecticCheck,
        PotentialCheck,
        Convergence,
    )
}
