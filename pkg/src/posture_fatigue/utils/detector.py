"""Scenario format detection."""

from pathlib import Path
from typing import Optional


EXTENSION_MAP = {
    ".json": "json",
    ".yaml": "yaml",
    ".yml": "yaml",
}


def detect_format(file_path: Path) -> Optional[str]:
    """
    Detect a scenario file's format from its extension, then its content.

    Args:
        file_path: Path to the file

    Returns:
        "json", "yaml" or None
    """
    ext = file_path.suffix.lower()
    if ext in EXTENSION_MAP:
        return EXTENSION_MAP[ext]

    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError:
        return None

    stripped = text.lstrip()
    # Broken JSON still goes to the JSON parser, which reports the error line
    if stripped.startswith("{"):
        return "json"

    first_line = stripped.splitlines()[0] if stripped else ""
    if first_line.startswith("---") or ": " in first_line or first_line.endswith(":"):
        return "yaml"

    return None
