"""JSON report writer."""

import json
from pathlib import Path

from posture_fatigue.registry import writer_registry
from posture_fatigue.report import Report
from posture_fatigue.writers.base import BaseWriter


@writer_registry.register("json")
class JSONWriter(BaseWriter):
    """Writer for the full report (summary and records) as JSON."""

    extension = ".json"

    def write(self, report: Report, output_path: Path) -> None:
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8') as f:
            # Infinite endurance is written as the JSON extension value Infinity
            json.dump(report.to_dict(), f, indent=2, ensure_ascii=False, allow_nan=True)
