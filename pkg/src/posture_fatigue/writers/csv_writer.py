"""CSV report writer."""

from pathlib import Path

from posture_fatigue.registry import writer_registry
from posture_fatigue.report import Report
from posture_fatigue.writers.base import BaseWriter


@writer_registry.register("csv")
class CSVWriter(BaseWriter):
    """Writer for the report table as CSV."""

    extension = ".csv"

    def write(self, report: Report, output_path: Path) -> None:
        """
        Write the table with a header row, dot decimals and CRLF line ends.

        Column order is the table's own; the index is not written.
        """
        output_path.parent.mkdir(parents=True, exist_ok=True)
        report.table.to_csv(output_path, index=False, lineterminator="\r\n", encoding="utf-8")
