"""Base class for report writers."""

from abc import ABC, abstractmethod
from pathlib import Path

from posture_fatigue.report import Report


class BaseWriter(ABC):
    """Abstract base class for all report writers."""

    extension: str = ""

    @abstractmethod
    def write(self, report: Report, output_path: Path) -> None:
        """
        Write a report to a file.

        Args:
            report: Report to write
            output_path: Path where the file should be written
        """
        pass
