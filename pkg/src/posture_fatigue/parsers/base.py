"""Base class for scenario parsers."""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional


@dataclass
class ScenarioDocument:
    """
    A scenario file decoded into plain data.

    Attributes:
        data: Decoded mapping
        source: File the data came from
        text: Raw file text, kept for line lookups
        format: Parser key that decoded it
    """
    data: Dict[str, Any]
    source: str
    text: str = ""
    format: Optional[str] = None

    def line_of(self, path: Optional[str]) -> Optional[int]:
        """
        First 1-based line mentioning the last key of a dotted field path.

        Returns None when the key does not appear in the text.
        """
        if not path or not self.text:
            return None
        key = path.split(".")[-1]
        key = re.sub(r"\[\d+\]$", "", key)
        pattern = re.compile(rf"""(["']?){re.escape(key)}\1\s*:""")
        for number, line in enumerate(self.text.splitlines(), start=1):
            if pattern.search(line):
                return number
        return None


class BaseParser(ABC):
    """Abstract base class for all scenario parsers."""

    @abstractmethod
    def parse(self, file_path: Path) -> ScenarioDocument:
        """
        Parse a scenario file.

        Args:
            file_path: Path to the file to parse

        Returns:
            ScenarioDocument with the decoded mapping

        Raises:
            ScenarioError: The file is not well-formed or not a mapping
        """
        pass
