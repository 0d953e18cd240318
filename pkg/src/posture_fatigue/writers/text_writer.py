"""Plain-text report writer."""

import math
from pathlib import Path
from typing import Any

import pandas as pd
from jinja2 import Environment

from posture_fatigue.registry import writer_registry
from posture_fatigue.report import Report
from posture_fatigue.units import to_minutes
from posture_fatigue.writers.base import BaseWriter


REPORT_TEMPLATE = """\
{{ title }}
{{ "=" * title|length }}
{% for key, value in metadata.items() %}
{{ key }}: {{ value }}
{% endfor %}
{% if summary %}

Summary
-------
{% for key, value in summary.items() %}
{{ "%-32s"|format(key) }} {{ value }}
{% endfor %}
{% endif %}
{% if table %}

{{ table }}
{% endif %}
"""

_environment = Environment(trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)
_template = _environment.from_string(REPORT_TEMPLATE)


def format_value(key: str, value: Any) -> str:
    """Render a summary value; durations in seconds also show minutes."""
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "unbounded"
        if key.endswith("_s"):
            return f"{value:.3f} s ({to_minutes(value):.4f} min)"
        return f"{value:.6g}"
    return str(value)


def with_minutes(table: pd.DataFrame) -> pd.DataFrame:
    """Copy of a table with a minutes column after every seconds column."""
    display = table.copy()
    for column in [c for c in table.columns if c.endswith("_s")]:
        position = display.columns.get_loc(column) + 1
        display.insert(position, f"{column[:-2]}_min", to_minutes(table[column]))
    return display


@writer_registry.register("text")
class TextWriter(BaseWriter):
    """Writer for a human-readable summary plus the table."""

    extension = ".txt"

    def render(self, report: Report) -> str:
        table = ""
        if not report.table.empty:
            table = with_minutes(report.table).to_string(index=False, float_format=lambda v: f"{v:.6g}")
        return _template.render(
            title=report.title,
            metadata=report.metadata,
            summary={key: format_value(key, value) for key, value in report.summary.items()},
            table=table,
        )

    def write(self, report: Report, output_path: Path) -> None:
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8') as f:
            f.write(self.render(report))
