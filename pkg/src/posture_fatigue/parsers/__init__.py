"""Parsers package."""

from posture_fatigue.parsers.base import BaseParser, ScenarioDocument
from posture_fatigue.parsers.json_parser import JSONParser
from posture_fatigue.parsers.yaml_parser import YAMLParser

__all__ = ["BaseParser", "ScenarioDocument", "JSONParser", "YAMLParser"]
