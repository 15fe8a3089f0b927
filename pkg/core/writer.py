__all__ = ["ReportWriter", "atomic_write"]


import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Dict

from core.report import RunReport, Table


HEADER = (
    "# adsmax report",
    "# forms: (a ^ b)(u, v) = a(u) b(v) - a(v) b(u); omega_WP(u, v) = -Im <u, v>_WP",
    "# omega_C(t1, t2) = -2 Im int (d1 Phi d2 mu - d2 Phi d1 mu) d^2z, no extra Liouville constant",
    "# d_nu = (L_nu - i L_inu) / 2, dbar_nu = (L_nu + i L_inu) / 2",
    "# deterministic: identical configurations give identical CSV bodies (fixed seeds only)",
)


def atomic_write(path: Path, text: str) -> None:
    """
    Writes ``text`` to ``path`` through a temporary file in the same directory.

    The file is replaced with ``os.replace``, so readers never see a partial
    report.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    descriptor, temporary = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.unlink(temporary)
        raise


class ReportWriter:
    """
    Serializes a RunReport next to ``output_path``.

    Writes ``<out>.txt`` (``key: value`` lines), ``<out>.<table>.csv`` per table
    and ``<out>.json`` with the metrics.
    """

    def render_text(self, report: RunReport) -> str:
        """Returns the key-value report."""
        lines = list(HEADER)
        lines.append(f"scenario: {report.scenario.label}")
        lines.append(f"passed: {'true' if report.passed else 'false'}")
        if report.aborted is not None:
            lines.append(f"aborted: {report.aborted}")
        limits = report.limits
        for name, value in report.metrics.items():
            suffix = f" (limit {limits[name]:.3e})" if name in limits else ""
            lines.append(f"{name}: {value:.12e}{suffix}")
        for name, value in report.notes.items():
            lines.append(f"{name}: {value}")
        if report.failed_checks:
            lines.append(f"failed_checks: {', '.join(report.failed_checks)}")
        for key, value in report.provenance.items():
            lines.append(f"config.{key}: {value}")
        return "\n".join(lines) + "\n"

    def render_table(self, table: Table) -> str:
        """Returns the CSV body of one table; floats use a fixed format."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(table.header)
        for row in table.rows:
            writer.writerow([f"{cell:.12e}" if isinstance(cell, float) else cell for cell in row])
        return buffer.getvalue()

    def render_tables(self, report: RunReport) -> Dict[str, str]:
        """Returns the CSV body of every table."""
        return {name: self.render_table(table) for name, table in report.tables.items()}

    def write_table(self, table: Table, path: Path) -> Path:
        """Writes a standalone CSV table."""
        atomic_write(path, self.render_table(table))
        return Path(path)

    def render_json(self, report: RunReport) -> str:
        """Returns the JSON metric dump."""
        payload = {
            "scenario": report.scenario.label,
            "passed": report.passed,
            "metrics": report.metrics,
            "limits": report.limits,
            "notes": report.notes,
            "failed_checks": report.failed_checks,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def write(self, report: RunReport, output_path: Path) -> Path:
        """Writes every artifact; returns the path of the key-value report."""
        output_path = Path(output_path)
        text_path = output_path.with_name(f"{output_path.name}.txt")
        for name, body in self.render_tables(report).items():
            atomic_write(output_path.with_name(f"{output_path.name}.{name}.csv"), body)
        atomic_write(output_path.with_name(f"{output_path.name}.json"), self.render_json(report))
        atomic_write(text_path, self.render_text(report))
        return text_path
