"""Writers package."""

from posture_fatigue.writers.base import BaseWriter
from posture_fatigue.writers.csv_writer import CSVWriter
from posture_fatigue.writers.json_writer import JSONWriter
from posture_fatigue.writers.text_writer import TextWriter
from posture_fatigue.writers.yaml_writer import YAMLWriter

__all__ = ["BaseWriter", "CSVWriter", "JSONWriter", "TextWriter", "YAMLWriter"]
