__all__ = ["Normalization"]


from enum import IntEnum


class Normalization(IntEnum):
    """Enumeration of the normalizations a Beltrami solve can apply.

    Attributes:
        THREE_POINT (int): Disc-preserving map fixing 1, -1 and -i (0x00).
        SERIES (int): Map conformal off the disc with w(0) = 0, w_z(0) = 1, w_zz(0) = 0 (0x01).
    """

    THREE_POINT = 0x00
    SERIES = 0x01
