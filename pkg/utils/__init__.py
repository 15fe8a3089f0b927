__all__ = [
    "singleton",
    "get_logger",
    "ROOT_LOGGER",
    "AdsmaxError",
    "InvalidParameterError",
    "GridMismatchError",
    "NormTooLargeError",
    "NormViolationError",
    "VanishingDerivativeError",
    "ConfigParseError",
    "ConvergenceError",
    "NewtonDivergenceError",
    "InverseInterpolationError",
    "NonUniqueCandidateError",
    "ScenarioFailure",
]


from utils.errors import (
    AdsmaxError,
    ConfigParseError,
    ConvergenceError,
    GridMismatchError,
    InvalidParameterError,
    InverseInterpolationError,
    NewtonDivergenceError,
    NonUniqueCandidateError,
    NormTooLargeError,
    NormViolationError,
    ScenarioFailure,
    VanishingDerivativeError,
)
from utils.logger import ROOT_LOGGER, get_logger
from utils.singleton import singleton
