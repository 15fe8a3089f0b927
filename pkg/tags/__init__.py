__all__ = [
    "Normalization",
    "Sign",
    "Quantity",
    "EnergyDensity",
    "PullbackWeight",
    "Scenario",
    "SweepParameter",
    "ExitCode",
]


from tags.normalization import Normalization
from tags.quantity import EnergyDensity, Quantity
from tags.scenario import ExitCode, Scenario, SweepParameter
from tags.sign import Sign
from tags.weight import PullbackWeight
