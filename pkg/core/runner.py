__all__ = ["Runner"]


import math
from concurrent.futures import ThreadPoolExecutor
from logging import Logger
from pathlib import Path
from typing import List, Sequence

from core.config import RunConfig
from core.environment import Environment
from core.report import RunReport, Table
from core.writer import ReportWriter
import scenarios
from scenarios.convergence import CAUCHY_RATIO
from tags.scenario import SweepParameter
from utils.errors import ScenarioFailure


CONVERGENCE_SWEEPS = (SweepParameter.R, SweepParameter.N_R)


class Runner:
    """
    Executes scenarios and writes their reports.

    A sweep repeats one scenario over the values of a parameter on a thread
    pool of ``Environment.workers`` threads; reports come back in input order.
    """

    def __init__(self, environment: Environment, logger: Logger, writer: ReportWriter) -> None:
        """
        Initializes the runner.

        Args:
            environment (Environment): Process-level settings.
            logger (Logger): The application logger.
            writer (ReportWriter): Serializer of the reports.
        """
        self.__environment = environment
        self.__logger = logger
        self.__writer = writer

    @property
    def environment(self) -> Environment:
        """Returns the process-level settings."""
        return self.__environment

    @property
    def logger(self) -> Logger:
        """Returns the application logger."""
        return self.__logger

    @property
    def writer(self) -> ReportWriter:
        """Returns the report writer."""
        return self.__writer

    def run(self, config: RunConfig) -> RunReport:
        """
        Runs the configured scenario and writes its report.

        Returns:
            RunReport: The report; ``passed`` decides the exit status.

        Raises:
            ScenarioFailure: After writing the partial report of an aborted run.
        """
        scenario = scenarios.REGISTRY[config.scenario](config, self.logger)
        try:
            report = scenario.run()
        except ScenarioFailure as failure:
            if failure.report is not None:
                self.writer.write(failure.report, config.output_path)
            raise
        path = self.writer.write(report, config.output_path)
        self.logger.info("report written to %s", path)
        return report

    def _member(self, config: RunConfig) -> RunReport:
        try:
            return self.run(config)
        except ScenarioFailure as failure:
            return failure.report

    def sweep(self, config: RunConfig, parameter: SweepParameter, values: Sequence[float]) -> List[RunReport]:
        """
        Repeats the scenario for every value and writes ``<out>.sweep.csv``.

        The table lists (value, metric, difference, ratio) for the scenario's
        primary metric, where difference is the change from the previous
        value and ratio the quotient of successive differences. Sweeps over
        R and n_r are convergence studies: every finite ratio must be at most
        ``CAUCHY_RATIO``, and the member report is failed otherwise.

        Returns:
            List[RunReport]: One report per value, in the order of ``values``.
        """
        parameter = SweepParameter(parameter)
        base = Path(config.output_path)
        members = [
            config.with_sweep_value(parameter, value).replace(
                output_path=str(base.with_name(f"{base.name}.{parameter.label}_{value:g}"))
            )
            for value in values
        ]
        self.logger.info(
            "sweeping %s over %s=%s with %d workers",
            config.scenario.label,
            parameter.label,
            list(values),
            self.environment.workers,
        )
        with ThreadPoolExecutor(max_workers=self.environment.workers) as executor:
            reports = list(executor.map(self._member, members))

        primary = scenarios.REGISTRY[config.scenario].primary
        table = Table((parameter.label, primary, "difference", "ratio", "passed"))
        previous_metric = previous_difference = math.nan
        for value, report in zip(values, reports):
            metric = report.metrics.get(primary, math.nan)
            difference = abs(metric - previous_metric)
            ratio = difference / previous_difference if previous_difference > 0.0 else math.nan
            if parameter in CONVERGENCE_SWEEPS and math.isfinite(ratio):
                report.require(f"sweep_ratio_{parameter.label}", ratio <= CAUCHY_RATIO)
            table.append(float(value), float(metric), float(difference), float(ratio), report.passed)
            previous_metric, previous_difference = metric, difference
        self.writer.write_table(table, base.with_name(f"{base.name}.sweep.csv"))
        return reports
