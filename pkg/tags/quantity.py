__all__ = ["Quantity", "EnergyDensity"]


from enum import IntEnum


class Quantity(IntEnum):
    """Quantities whose Lie derivative along a deformation family is measured.

    Attributes:
        MU_F (int): Beltrami coefficient of the deformed Gauss map (0x00).
        PHI (int): Hopf differential of the deformed Gauss map (0x01).
        ANTIHOL_DENSITY (int): Anti-holomorphic energy density (0x02).
        HOL_DENSITY (int): Holomorphic energy density (0x03).
        MU_H_DOT (int): Beltrami coefficient of h^eps composed with F (0x04).
    """

    MU_F = 0x00
    PHI = 0x01
    ANTIHOL_DENSITY = 0x02
    HOL_DENSITY = 0x03
    MU_H_DOT = 0x04


class EnergyDensity(IntEnum):
    """Energy density selector for the closed-form density variation."""

    ANTIHOLOMORPHIC = 0x00
    HOLOMORPHIC = 0x01
