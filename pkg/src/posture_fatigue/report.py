"""
Report representation shared by all writers.

Every command produces one or more Reports; writers only know how to render a
Report, never how it was computed.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd


def plain(value: Any) -> Any:
    """Convert numpy scalars and containers to plain Python for serialisation."""
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [plain(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    return value


@dataclass
class Report:
    """
    Result of one command.

    Attributes:
        title: Human-readable title
        table: Tabular result with a fixed column order
        summary: Ordered scalar results (insertion order is kept)
        metadata: Provenance such as scenario name and command
        name: Short name used in artifact file names
    """
    title: str
    table: pd.DataFrame = field(default_factory=pd.DataFrame)
    summary: Dict[str, Any] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)
    name: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.table, pd.DataFrame):
            raise ValueError("Report.table must be a pandas DataFrame")

    def records(self) -> List[Dict[str, Any]]:
        """Table rows as plain dictionaries."""
        return [plain(row) for row in self.table.to_dict(orient="records")]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "metadata": plain(self.metadata),
            "summary": plain(self.summary),
            "columns": list(self.table.columns),
            "records": self.records(),
        }

    def __len__(self) -> int:
        return len(self.table)
