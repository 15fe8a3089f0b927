__all__ = ["Environment"]


from logging import Formatter
from pathlib import Path


from utils import singleton


@singleton
class Environment:
    """
    Process-wide adsmax settings read once from the ``.env`` file.

    Holds where and how the run logs, and how many threads sweeps and the
    symplectic matrix assembly may use. ``Environment.reset()`` drops the
    instance so that a test can rebuild it from changed variables.
    """

    def __init__(
        self,
        log_name: str,
        log_path: Path,
        log_level: int,
        log_format: Formatter,
        workers: int,
    ) -> None:
        """
        Args:
            log_name (str): Name of the root logger; library loggers hang below it.
            log_path (Path): File the run log is appended to.
            log_level (int): Numeric level shared by both handlers.
            log_format (Formatter): Record format shared by both handlers.
            workers (int): Thread count, clamped to at least one.
        """
        self.__log_name = log_name
        self.__log_path = Path(log_path)
        self.__log_level = int(log_level)
        self.__log_format = log_format
        self.__workers = max(1, int(workers))

    @property
    def log_name(self) -> str:
        """Root logger name, ``adsmax`` unless overridden."""
        return self.__log_name

    @property
    def log_path(self) -> Path:
        return self.__log_path

    @property
    def log_level(self) -> int:
        return self.__log_level

    @property
    def log_format(self) -> Formatter:
        return self.__log_format

    @property
    def workers(self) -> int:
        """Threads available to sweeps and matrix assembly."""
        return self.__workers

    def __repr__(self) -> str:
        return (
            f"Environment(log_name={self.__log_name!r}, log_path={str(self.__log_path)!r}, "
            f"log_level={self.__log_level}, workers={self.__workers})"
        )
