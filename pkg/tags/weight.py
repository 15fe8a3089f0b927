__all__ = ["PullbackWeight"]


from enum import IntEnum


class PullbackWeight(IntEnum):
    """Area weight used when a target-side form is pulled back to the source disc.

    Attributes:
        SIGMA (int): (1 - |mu_F|^2) e^phi, from the conformal factor (0x00).
        JACOBIAN (int): e^{psi o F} (|F_z|^2 - |F_zbar|^2), from the map itself (0x01).
    """

    SIGMA = 0x00
    JACOBIAN = 0x01
