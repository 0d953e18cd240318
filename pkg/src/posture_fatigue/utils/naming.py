"""Output file naming utilities."""

import re
from pathlib import Path

def slugify(name: str) -> str:
    """File-system friendly version of a scenario name."""
    slug = re.sub(r"[^A-Za-z0-9._-]+", "-", name.strip()).strip("-")
    return slug or "scenario"


def get_output_path(
    out_dir: Path,
    scenario_name: str,
    command: str,
    extension: str = ".csv",
    suffix: str = ""
) -> Path:
    """
    Artifact path following <out>/<scenario-name>_<command>[_<suffix>].<ext>.

    Args:
        out_dir: Output directory
        scenario_name: Scenario name
        command: CLI command that produced the artifact
        extension: File extension of the writer, dot included
        suffix: Optional qualifier for commands with several artifacts

    Returns:
        Path object for the artifact
    """
    stem = f"{slugify(scenario_name)}_{command}"
    if suffix:
        stem = f"{stem}_{suffix}"
    return Path(out_dir) / f"{stem}{extension}"
