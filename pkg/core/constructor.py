__all__ = ["Constructor"]


import os
from logging import FileHandler, Formatter, Logger, StreamHandler, getLogger
from pathlib import Path
from typing import Optional

from core.config import RunConfig
from core.environment import Environment
from core.runner import Runner
from core.writer import ReportWriter
from utils.logger import ROOT_LOGGER


DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Constructor:
    def __init__(self):
        self.__config: Optional[RunConfig] = None

    @property
    def environment(self) -> Environment:
        """Gets the environment configuration instance.

        Returns:
            Environment: The process-level settings.
        """
        return self.__environment

    @property
    def logger(self) -> Logger:
        """Gets the logger instance.

        Returns:
            Logger: The root ``adsmax`` logger with file and stream handlers.
        """
        return self.__logger

    @property
    def config(self) -> Optional[RunConfig]:
        """Gets the run configuration, once built."""
        return self.__config

    @property
    def runner(self) -> Runner:
        """Gets the scenario runner.

        Returns:
            Runner: The runner writing reports through a ReportWriter.
        """
        return self.__runner

    def build_environment(self) -> None:
        """Builds and initializes the environment configuration from the process environment."""
        self.__environment = Environment(
            log_name=os.getenv("LOG_NAME", ROOT_LOGGER),
            log_path=Path(os.getenv("LOG_PATH", "adsmax.log")),
            log_level=int(os.getenv("LOG_LEVEL", "20")),
            log_format=Formatter(os.getenv("LOG_FORMAT", DEFAULT_FORMAT)),
            workers=int(os.getenv("ADSMAX_WORKERS", "1")),
        )

    def build_logger(self) -> None:
        """Builds and initializes the logger.

        Configures both a file handler and a stream handler for logging. The
        logger is registered under its name so that the ``adsmax.<module>``
        children of the library propagate into it.
        """
        file_handler = FileHandler(self.environment.log_path, mode="a", encoding="utf-8")
        file_handler.setLevel(self.environment.log_level)
        file_handler.setFormatter(self.environment.log_format)

        stream_handler = StreamHandler()
        stream_handler.setLevel(self.environment.log_level)
        stream_handler.setFormatter(self.environment.log_format)

        self.__logger = getLogger(self.environment.log_name)
        self.__logger.setLevel(self.environment.log_level)
        self.__logger.propagate = False
        for handler in list(self.__logger.handlers):
            self.__logger.removeHandler(handler)
            handler.close()
        self.__logger.addHandler(file_handler)
        self.__logger.addHandler(stream_handler)

    def build_config(self, path: Path, scenario: Optional[str] = None, output_path: Optional[str] = None) -> None:
        """Builds the run configuration from a TOML file.

        Raises:
            ConfigParseError: If the file cannot be parsed or validated.
        """
        self.__config = RunConfig.load(path, scenario, output_path)

    def build_runner(self) -> None:
        """Builds and initializes the scenario runner."""
        self.__runner = Runner(self.environment, self.logger, ReportWriter())
