"""YAML report writer."""

from pathlib import Path

import yaml

from posture_fatigue.registry import writer_registry
from posture_fatigue.report import Report
from posture_fatigue.writers.base import BaseWriter


@writer_registry.register("yaml")
class YAMLWriter(BaseWriter):
    """Writer for the full report as YAML."""

    extension = ".yaml"

    def write(self, report: Report, output_path: Path) -> None:
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(report.to_dict(), f, allow_unicode=True, sort_keys=False)
