"""
Grid-backed strength providers.

The grid file is a CSV with columns joint, shoulder_deg, elbow_deg, mean_Nm,
sd_Nm. Lines starting with '#' are comments. Each joint must cover a full
rectangular (shoulder, elbow) grid; queries are interpolated bilinearly.
"""

import logging
from importlib import resources
from pathlib import Path
from typing import Dict, Tuple, Union

import numpy as np
import pandas as pd
from scipy.interpolate import RegularGridInterpolator

from posture_fatigue.exceptions import DomainError, ExtrapolationError
from posture_fatigue.registry import strength_registry
from posture_fatigue.strength.base import STRENGTH_JOINTS, StrengthEntry, StrengthModel

logger = logging.getLogger(__name__)

GRID_COLUMNS = ["joint", "shoulder_deg", "elbow_deg", "mean_Nm", "sd_Nm"]

BUILTIN_GRID = "strength_grid.csv"

_HULL_TOL = 1e-9


@strength_registry.register("grid")
class GridStrengthModel(StrengthModel):
    """Bilinear interpolation over a (shoulder, elbow) flexion grid."""

    def __init__(self, table: pd.DataFrame, source: str = "<table>"):
        missing = [c for c in GRID_COLUMNS if c not in table.columns]
        if missing:
            raise DomainError(f"Strength grid {source} is missing columns: {', '.join(missing)}")

        self.source = source
        self.table = table[GRID_COLUMNS].copy()
        self._interpolators: Dict[str, Tuple[RegularGridInterpolator, RegularGridInterpolator]] = {}
        self._bounds: Dict[str, Tuple[Tuple[float, float], Tuple[float, float]]] = {}

        for joint, rows in self.table.groupby("joint"):
            if joint not in STRENGTH_JOINTS:
                raise DomainError(f"Strength grid {source} lists unknown joint '{joint}'")
            self._build_joint(joint, rows)

        absent = [j for j in STRENGTH_JOINTS if j not in self._interpolators]
        if absent:
            raise DomainError(f"Strength grid {source} has no rows for: {', '.join(absent)}")

        logger.debug(f"Loaded strength grid {source} with {len(self.table)} rows")

    def _build_joint(self, joint: str, rows: pd.DataFrame) -> None:
        if (rows["mean_Nm"] <= 0).any() or (rows["sd_Nm"] < 0).any():
            raise DomainError(f"Strength grid {self.source}: {joint} needs mean > 0 and sd >= 0")
        if (rows["mean_Nm"] - 2 * rows["sd_Nm"] <= 0).any():
            logger.warning(f"Strength grid {self.source}: {joint} has cells with mean - 2 sd <= 0")

        if rows.duplicated(["shoulder_deg", "elbow_deg"]).any():
            raise DomainError(f"Strength grid {self.source}: duplicate posture rows for {joint}")
        means = rows.pivot(index="shoulder_deg", columns="elbow_deg", values="mean_Nm").sort_index().sort_index(axis=1)
        sds = rows.pivot(index="shoulder_deg", columns="elbow_deg", values="sd_Nm").sort_index().sort_index(axis=1)
        if means.isna().any().any():
            raise DomainError(f"Strength grid {self.source}: {joint} does not cover a rectangular grid")
        if means.shape[0] < 2 or means.shape[1] < 2:
            raise DomainError(f"Strength grid {self.source}: {joint} needs at least 2 points per axis")

        axes = (means.index.to_numpy(dtype=float), means.columns.to_numpy(dtype=float))
        self._interpolators[joint] = (
            RegularGridInterpolator(axes, means.to_numpy(dtype=float), method="linear"),
            RegularGridInterpolator(axes, sds.to_numpy(dtype=float), method="linear"),
        )
        self._bounds[joint] = ((axes[0][0], axes[0][-1]), (axes[1][0], axes[1][-1]))

    @classmethod
    def from_csv(cls, path: Union[str, Path]) -> "GridStrengthModel":
        """Load a grid file."""
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Strength grid not found: {path}")
        table = pd.read_csv(path, comment="#", skipinitialspace=True)
        return cls(table, source=str(path))

    @classmethod
    def builtin(cls) -> "GridStrengthModel":
        """The grid shipped with the package."""
        grid = resources.files("posture_fatigue").joinpath("data", BUILTIN_GRID)
        with resources.as_file(grid) as path:
            return cls.from_csv(path)

    def bounds(self, joint: str) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        """((shoulder min, max), (elbow min, max)) in degrees."""
        return self._bounds[joint]

    def lookup(self, joint: str, shoulder_deg: float, elbow_deg: float) -> StrengthEntry:
        if joint not in self._interpolators:
            raise DomainError(f"Unknown strength joint: {joint}")

        (s_lo, s_hi), (e_lo, e_hi) = self._bounds[joint]
        if not (s_lo - _HULL_TOL <= shoulder_deg <= s_hi + _HULL_TOL
                and e_lo - _HULL_TOL <= elbow_deg <= e_hi + _HULL_TOL):
            raise ExtrapolationError(
                f"Strength query ({shoulder_deg:.3f}, {elbow_deg:.3f}) deg for {joint} lies outside "
                f"the grid [{s_lo}, {s_hi}] x [{e_lo}, {e_hi}]"
            )

        point = np.array([[min(max(shoulder_deg, s_lo), s_hi), min(max(elbow_deg, e_lo), e_hi)]])
        mean_interp, sd_interp = self._interpolators[joint]
        return StrengthEntry(
            joint=joint,
            mean=float(mean_interp(point)[0]),
            sd=float(sd_interp(point)[0]),
            posture_key=(float(shoulder_deg), float(elbow_deg)),
        )


@strength_registry.register("constant")
class ConstantStrengthModel(StrengthModel):
    """Posture-independent strengths, e.g. a single measured configuration."""

    def __init__(self, entries: Dict[str, Tuple[float, float]]):
        """
        Args:
            entries: joint -> (mean, sd) in N·m
        """
        absent = [j for j in STRENGTH_JOINTS if j not in entries]
        if absent:
            raise DomainError(f"Constant strength model needs values for: {', '.join(absent)}")
        self.entries = {joint: (float(mean), float(sd)) for joint, (mean, sd) in entries.items()}
        for joint, (mean, sd) in self.entries.items():
            StrengthEntry(joint=joint, mean=mean, sd=sd, posture_key=(0.0, 0.0))

    def lookup(self, joint: str, shoulder_deg: float, elbow_deg: float) -> StrengthEntry:
        if joint not in self.entries:
            raise DomainError(f"Unknown strength joint: {joint}")
        mean, sd = self.entries[joint]
        return StrengthEntry(joint=joint, mean=mean, sd=sd, posture_key=(shoulder_deg, elbow_deg))


def load_strength_model(reference: Union[str, Path, None], base_dir: Union[str, Path, None] = None) -> StrengthModel:
    """
    Resolve a strength model reference from a scenario.

    Args:
        reference: "builtin", None, or a grid file path
        base_dir: Directory relative paths are resolved against

    Returns:
        StrengthModel
    """
    if reference in (None, "builtin"):
        return GridStrengthModel.builtin()
    path = Path(reference)
    if not path.is_absolute() and base_dir is not None:
        path = Path(base_dir) / path
    return strength_registry.resolve("grid").from_csv(path)
