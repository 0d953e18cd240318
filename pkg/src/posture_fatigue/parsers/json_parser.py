"""JSON scenario parser."""

import json
from pathlib import Path

from posture_fatigue.exceptions import ScenarioError
from posture_fatigue.parsers.base import BaseParser, ScenarioDocument
from posture_fatigue.registry import parser_registry


@parser_registry.register("json")
class JSONParser(BaseParser):
    """Parser for JSON scenario files (the canonical format)."""

    def parse(self, file_path: Path) -> ScenarioDocument:
        with open(file_path, 'r', encoding='utf-8') as f:
            text = f.read()

        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ScenarioError(f"Invalid JSON: {e.msg} (column {e.colno})", line=e.lineno, source=str(file_path))

        if not isinstance(data, dict):
            raise ScenarioError("A scenario must be a JSON object", line=1, source=str(file_path))

        return ScenarioDocument(data=data, source=str(file_path), text=text, format="json")
