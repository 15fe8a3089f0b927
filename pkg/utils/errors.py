__all__ = [
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


from typing import Any, Optional, Sequence


class AdsmaxError(Exception):
    """Root of every error raised by the library."""


class InvalidParameterError(AdsmaxError, ValueError):
    """A grid, tolerance or coefficient argument violates its precondition."""


class GridMismatchError(AdsmaxError, ValueError):
    """Two fields combined by an operation live on different grids."""


class NormTooLargeError(AdsmaxError, ValueError):
    """A Beltrami coefficient is outside the solver regime."""


class NormViolationError(AdsmaxError, ValueError):
    """A Beltrami coefficient reached sup-norm 1 (not quasiconformal)."""


class VanishingDerivativeError(AdsmaxError, ValueError):
    """The holomorphic derivative of a map vanishes on the grid."""


class ConfigParseError(AdsmaxError, ValueError):
    """A run configuration could not be parsed or validated."""


class ConvergenceError(AdsmaxError, RuntimeError):
    """An iterative solver exhausted its budget.

    Attributes:
        residual (float): The last residual measured before giving up.
        iterations (int): The number of iterations performed.
    """

    def __init__(self, message: str, residual: float = float("nan"), iterations: int = 0):
        super().__init__(f"{message} (residual={residual:.3e}, iterations={iterations})")
        self.residual = residual
        self.iterations = iterations


class NewtonDivergenceError(ConvergenceError):
    """A Newton iteration diverged, globally or at a single node.

    Attributes:
        node (Optional[int]): Flat node index where the iteration failed, if local.
    """

    def __init__(
        self,
        message: str,
        residual: float = float("nan"),
        iterations: int = 0,
        node: Optional[int] = None,
    ):
        if node is not None:
            message = f"{message} at node {node}"
        super().__init__(message, residual, iterations)
        self.node = node


class InverseInterpolationError(AdsmaxError, RuntimeError):
    """Newton inversion of a solved map failed for some target points.

    Attributes:
        nodes (Sequence[int]): Indices of the targets that did not converge.
    """

    def __init__(self, message: str, nodes: Sequence[int] = ()):
        self.nodes = tuple(int(n) for n in nodes)
        shown = ", ".join(str(n) for n in self.nodes[:8])
        suffix = "..." if len(self.nodes) > 8 else ""
        super().__init__(f"{message} (targets: {shown}{suffix})")


class NonUniqueCandidateError(AdsmaxError, RuntimeError):
    """Two distinct admissible roots passed the pointwise inversion test."""


class ScenarioFailure(AdsmaxError, RuntimeError):
    """A scenario aborted; the partial report is attached.

    Attributes:
        report (Any): The partially filled report.
    """

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report
