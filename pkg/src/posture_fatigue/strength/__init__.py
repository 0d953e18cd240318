"""Joint strength providers."""

from posture_fatigue.strength.base import STRENGTH_JOINTS, StrengthEntry, StrengthModel, joint_strength
from posture_fatigue.strength.grid import ConstantStrengthModel, GridStrengthModel, load_strength_model
from posture_fatigue.strength.population import (
    ALLOWED_Z,
    PercentileSelector,
    percentile_strength,
    selectors,
)

__all__ = [
    "ALLOWED_Z",
    "STRENGTH_JOINTS",
    "ConstantStrengthModel",
    "GridStrengthModel",
    "PercentileSelector",
    "StrengthEntry",
    "StrengthModel",
    "joint_strength",
    "load_strength_model",
    "percentile_strength",
    "selectors",
]
