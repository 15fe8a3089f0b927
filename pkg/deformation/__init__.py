__all__ = [
    "DEFAULT_EPSILONS",
    "DeformationScenario",
    "FamilyMember",
    "FiniteDifference",
    "LieReport",
    "richardson",
    "lie_fd",
    "closed_value",
    "lie_check",
    "energy_fd",
    "ahlfors_residual",
    "ahlfors_direction",
    "full_velocity",
    "stream_function",
    "RadialCutoff",
    "push_forward",
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


from deformation.ahlfors import RadialCutoff, ahlfors_direction, full_velocity, stream_function
from deformation.closed import (
    energy_first_variation,
    energy_second_variation,
    lie_energy_density_closed,
    lie_hopf_closed,
    lie_mu_F_closed,
    mu_H_dot_closed,
    pm_variations,
    pm_variations_pulled,
    pulled_back,
    section_lift,
)
from deformation.lie import (
    FiniteDifference,
    LieReport,
    ahlfors_residual,
    closed_value,
    energy_fd,
    lie_check,
    lie_fd,
    push_forward,
    richardson,
)
from deformation.scenario import DEFAULT_EPSILONS, DeformationScenario, FamilyMember
