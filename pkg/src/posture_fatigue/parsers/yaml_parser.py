"""YAML scenario parser."""

from pathlib import Path

import yaml

from posture_fatigue.exceptions import ScenarioError
from posture_fatigue.parsers.base import BaseParser, ScenarioDocument
from posture_fatigue.registry import parser_registry


@parser_registry.register("yaml")
class YAMLParser(BaseParser):
    """Parser for YAML scenario files; same schema as JSON."""

    def parse(self, file_path: Path) -> ScenarioDocument:
        """
        Parse a single-document YAML scenario.

        Uses safe_load, so only plain data types are constructed.
        """
        with open(file_path, 'r', encoding='utf-8') as f:
            text = f.read()

        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            line = mark.line + 1 if mark is not None else None
            problem = getattr(e, "problem", None) or str(e)
            raise ScenarioError(f"Invalid YAML: {problem}", line=line, source=str(file_path))

        if not isinstance(data, dict):
            raise ScenarioError("A scenario must be a YAML mapping", line=1, source=str(file_path))

        return ScenarioDocument(data=data, source=str(file_path), text=text, format="yaml")
