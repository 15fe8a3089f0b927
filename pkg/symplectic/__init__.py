__all__ = [
    "TangentBasis",
    "remix_basis",
    "random_unitary",
    "CotangentTangent",
    "omega_wp",
    "omega_c",
    "pullback_weight",
    "pulled_pairing",
    "mess_pullback_wp",
    "SymplecticReport",
    "KahlerReport",
    "verify_symplectomorphism",
    "verify_kahler_potential",
]


from symplectic.basis import TangentBasis, random_unitary, remix_basis
from symplectic.forms import (
    CotangentTangent,
    mess_pullback_wp,
    omega_c,
    omega_wp,
    pullback_weight,
    pulled_pairing,
)
from symplectic.verify import KahlerReport, SymplecticReport, verify_kahler_potential, verify_symplectomorphism
