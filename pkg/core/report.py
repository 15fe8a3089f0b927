__all__ = ["RunReport", "Table"]


import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tags.scenario import Scenario


class Table:
    """
    A CSV table of a report: a header row and numeric or text rows.

    Attributes:
        header (Tuple[str, ...]): Column names.
        rows (List[Tuple[Any, ...]]): Data rows, in insertion order.
    """

    __slots__ = ("__header", "__rows")

    def __init__(self, header: Sequence[str]) -> None:
        self.__header = tuple(header)
        self.__rows: List[Tuple[Any, ...]] = list()

    @property
    def header(self) -> Tuple[str, ...]:
        """Returns the column names."""
        return self.__header

    @property
    def rows(self) -> List[Tuple[Any, ...]]:
        """Returns a copy of the rows."""
        return list(self.__rows)

    def append(self, *row: Any) -> None:
        """Appends one row.

        Raises:
            ValueError: If the row length does not match the header.
        """
        if len(row) != len(self.__header):
            raise ValueError(f"row of {len(row)} cells for {len(self.__header)} columns")
        self.__rows.append(tuple(row))

    def __repr__(self) -> str:
        return f"Table({', '.join(self.__header)}; rows={len(self.__rows)})"


class RunReport:
    """
    Outcome of one scenario run.

    Metrics with a limit are checks: the report passes iff every check holds.
    Non-finite values never pass a check; a non-finite value without a limit
    is recorded as a note instead of a metric, so every stored metric is finite.

    Attributes:
        scenario (Scenario): The scenario that produced the report.
        metrics (Dict[str, float]): Named finite values.
        limits (Dict[str, float]): Upper bounds of the checked metrics.
        notes (Dict[str, str]): Free-form key-value lines, e.g. ``phi_equals_psi: true``.
        tables (Dict[str, Table]): CSV tables keyed by name.
        provenance (Dict[str, Any]): Configuration echo and grid description.
    """

    def __init__(self, scenario: Scenario, provenance: Optional[Dict[str, Any]] = None) -> None:
        self.__scenario = Scenario(scenario)
        self.__metrics: Dict[str, float] = dict()
        self.__limits: Dict[str, float] = dict()
        self.__failed: List[str] = list()
        self.__notes: Dict[str, str] = dict()
        self.__tables: Dict[str, Table] = dict()
        self.__provenance: Dict[str, Any] = dict(provenance or {})
        self.__aborted: Optional[str] = None

    @property
    def scenario(self) -> Scenario:
        """Returns the scenario tag."""
        return self.__scenario

    @property
    def metrics(self) -> Dict[str, float]:
        """Returns a copy of the metrics."""
        return dict(self.__metrics)

    @property
    def limits(self) -> Dict[str, float]:
        """Returns a copy of the check limits."""
        return dict(self.__limits)

    @property
    def notes(self) -> Dict[str, str]:
        """Returns a copy of the notes."""
        return dict(self.__notes)

    @property
    def tables(self) -> Dict[str, Table]:
        """Returns the tables."""
        return dict(self.__tables)

    @property
    def provenance(self) -> Dict[str, Any]:
        """Returns the provenance record."""
        return dict(self.__provenance)

    @property
    def failed_checks(self) -> List[str]:
        """Returns the names of the checks that did not hold."""
        return list(self.__failed)

    @property
    def aborted(self) -> Optional[str]:
        """Returns the abort message of a partial report."""
        return self.__aborted

    @property
    def passed(self) -> bool:
        """Returns whether every check holds and the run completed."""
        return self.__aborted is None and not self.__failed

    def add_metric(self, name: str, value: float, limit: Optional[float] = None) -> bool:
        """
        Records a metric, optionally checked against ``value <= limit``.

        Returns:
            bool: Whether the check holds (True for unchecked finite metrics).
        """
        value = float(value)
        if not math.isfinite(value):
            if limit is None:
                self.__notes[name] = "undetermined"
                return True
            self.__notes[name] = str(value)
            self.__limits[name] = float(limit)
            self.__failed.append(name)
            return False
        self.__metrics[name] = value
        if limit is None:
            return True
        self.__limits[name] = float(limit)
        holds = value <= limit
        if not holds:
            self.__failed.append(name)
        return holds

    def require(self, name: str, condition: bool) -> bool:
        """Records a boolean check as a ``true`` / ``false`` note."""
        self.__notes[name] = "true" if condition else "false"
        if not condition:
            self.__failed.append(name)
        return bool(condition)

    def add_note(self, name: str, value: Any) -> None:
        """Records an unchecked note."""
        self.__notes[name] = str(value).lower() if isinstance(value, bool) else str(value)

    def add_table(self, name: str, table: Table) -> None:
        """Attaches a table written as ``<out>.<name>.csv``."""
        self.__tables[name] = table

    def abort(self, message: str) -> None:
        """Marks the report as partial."""
        self.__aborted = message

    def __repr__(self) -> str:
        verdict = "pass" if self.passed else "fail"
        return f"RunReport({self.__scenario.label}, {verdict}, metrics={len(self.__metrics)})"
