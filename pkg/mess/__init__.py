__all__ = [
    "CotangentPoint",
    "MessImage",
    "mess_forward",
    "compose_coefficient",
    "chart_pullback",
    "mess_pointwise_invert",
    "section_target",
]


from mess.forward import chart_pullback, compose_coefficient, mess_forward
from mess.inverse import mess_pointwise_invert, section_target
from mess.point import CotangentPoint, MessImage
