__all__ = ["Base"]


from abc import ABC, abstractmethod
from logging import Logger
from typing import Optional

from core.config import RunConfig
from core.report import RunReport
from gauss_maps.pair import InducedGaussPair, build_surface
from geometry.differential import QuadDifferential, TangentField
from geometry.grid import DiscGrid
from mess.point import CotangentPoint
from tags.scenario import Scenario
from utils.errors import AdsmaxError, ScenarioFailure


class Base(ABC):
    """Base class of the verification scenarios. It holds the configuration
    and the logger, builds the objects most scenarios share and turns
    library errors into a partial report."""

    scenario: Scenario

    #: name of the metric a sweep tabulates
    primary: str = ""

    def __init__(self, config: RunConfig, logger: Logger):
        """Initializes a Base instance.

        Args:
            config (RunConfig): The validated run configuration.
            logger (Logger): The application logger.
        """
        self.__config = config
        self.__logger = logger
        self.__pair: Optional[InducedGaussPair] = None

    @property
    def config(self) -> RunConfig:
        """Returns the run configuration."""
        return self.__config

    @property
    def logger(self) -> Logger:
        """Returns the application logger."""
        return self.__logger

    @property
    def grid(self) -> DiscGrid:
        """Returns the source grid."""
        return self.__config.grid

    @property
    def Phi(self) -> QuadDifferential:
        """Returns the base quadratic differential."""
        return QuadDifferential(self.__config.phi_poly)

    @property
    def mu(self) -> TangentField:
        """Returns the base tangent field."""
        return TangentField(self.__config.mu_poly, self.grid)

    def point(self) -> CotangentPoint:
        """Returns the base cotangent point."""
        return CotangentPoint(self.mu, self.Phi)

    def pair(self) -> InducedGaussPair:
        """Returns the induced Gauss maps of Phi on the source grid (built once)."""
        if self.__pair is None:
            self.__pair = build_surface(self.Phi, self.grid, self.__config.solver_tol)
        return self.__pair

    def direction(self, poly) -> Optional[TangentField]:
        """Returns the tangent field of a configured direction polynomial, or None."""
        return None if poly is None else TangentField(poly, self.grid)

    def run(self) -> RunReport:
        """Executes the scenario.

        Returns:
            RunReport: The complete report.

        Raises:
            ScenarioFailure: If a library error aborts the run; the partial report is attached.
        """
        report = RunReport(self.scenario, self.__config.echo())
        self.logger.info("running %s on %r", self.scenario.label, self.grid)
        try:
            self.execute(report)
        except AdsmaxError as error:
            report.abort(f"{type(error).__name__}: {error}")
            self.logger.error("%s aborted: %s", self.scenario.label, error)
            raise ScenarioFailure(str(error), report) from error
        self.logger.info("%r", report)
        return report

    @abstractmethod
    def execute(self, report: RunReport) -> None:
        """Fills ``report`` with the scenario's metrics, notes and tables."""
