"""Model configuration: packaged defaults merged with scenario overrides."""

import copy
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Dict, List, Literal, Optional, Sequence

import numpy as np
import yaml

from posture_fatigue.exceptions import ScenarioError
from posture_fatigue.fatigue.capacity import CapacityParams
from posture_fatigue.kinematics.chain import JOINT_NAMES
from posture_fatigue.optimizer.discomfort import DiscomfortJoint, DiscomfortParams

DEFAULTS_FILE = "defaults.yaml"

JOINT_KEYS = ("lower_deg", "upper_deg", "neutral_deg")
DISCOMFORT_KEYS = JOINT_KEYS + ("gamma",)


def _number(value: Any, path: str) -> float:
    """A numeric setting as float; booleans and strings are rejected."""
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ScenarioError(f"Expected a number, got {value!r}", path=path)
    return float(value)


def _angles(entry: Any, keys: Sequence[str], path: str) -> Dict[str, float]:
    """Numeric entries of one joint mapping, every key in `keys` required."""
    if not isinstance(entry, dict):
        raise ScenarioError(f"Expected a mapping, got {entry!r}", path=path)
    missing = [k for k in keys if k not in entry]
    if missing:
        raise ScenarioError(f"Missing {', '.join(missing)}", path=path)
    unknown = [k for k in entry if k not in keys]
    if unknown:
        raise ScenarioError(f"Unknown setting '{unknown[0]}'", path=f"{path}.{unknown[0]}")
    return {k: _number(entry[k], f"{path}.{k}") for k in keys}


@dataclass
class JointSpec:
    """Limits and neutral angle of one joint, degrees in joint coordinates."""
    name: str
    lower_deg: float
    upper_deg: float
    neutral_deg: float = 0.0


@dataclass
class ModelConfig:
    """
    Model constants.

    Parameters:
        fatigue_rate: k, min⁻¹
        recovery_rate: R, min⁻¹
        recovery_target: Fraction of Γ_max a recommended rest restores
        fatigue_index_mode: "linear" or "equation"
        gravity: m/s²
        rounding: "nearest" or "floor" for completable work units
        cumulative_tolerance: Fraction of Γ_max for the cumulative fatigue flag
        refine_tolerance: Relative tolerance of the sweep refinement
        joints: Joint table in chain order
        discomfort_G: Discomfort scale constant
        discomfort_joints: Active discomfort joints by name
    """
    fatigue_rate: float = 1.0
    recovery_rate: float = 2.4
    recovery_target: float = 0.99
    fatigue_index_mode: Literal["linear", "equation"] = "linear"
    gravity: float = 9.81
    rounding: Literal["nearest", "floor"] = "nearest"
    cumulative_tolerance: float = 1e-3
    refine_tolerance: float = 1e-6
    joints: List[JointSpec] = field(default_factory=list)
    discomfort_G: float = 1e6
    discomfort_joints: Dict[str, Dict[str, float]] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> "ModelConfig":
        """Create ModelConfig from a fully merged dictionary."""
        scalars = {
            key: config_dict[key]
            for key in (
                "fatigue_rate", "recovery_rate", "recovery_target", "fatigue_index_mode",
                "gravity", "rounding", "cumulative_tolerance", "refine_tolerance",
            )
            if key in config_dict
        }
        for key, value in scalars.items():
            if key not in ("fatigue_index_mode", "rounding"):
                scalars[key] = _number(value, f"model.{key}")

        joints_dict = config_dict.get("joints", {})
        if not isinstance(joints_dict, dict):
            raise ScenarioError("Joint table must be a mapping", path="model.joints")
        joints = []
        for name in JOINT_NAMES:
            if name not in joints_dict:
                raise ScenarioError(f"Joint table has no entry for {name}", path="model.joints")
            angles = _angles(joints_dict[name], JOINT_KEYS, f"model.joints.{name}")
            joints.append(JointSpec(name=name, **angles))

        discomfort = config_dict.get("discomfort", {})
        if not isinstance(discomfort, dict) or not isinstance(discomfort.get("joints", {}), dict):
            raise ScenarioError("Discomfort settings must be a mapping", path="model.discomfort")
        discomfort_joints = {}
        for name, values in discomfort.get("joints", {}).items():
            if name not in JOINT_NAMES:
                raise ScenarioError(f"Unknown joint '{name}'", path=f"model.discomfort.joints.{name}")
            discomfort_joints[name] = _angles(values, DISCOMFORT_KEYS, f"model.discomfort.joints.{name}")

        config = cls(
            joints=joints,
            discomfort_G=_number(discomfort.get("G", 1e6), "model.discomfort.G"),
            discomfort_joints=discomfort_joints,
            **scalars,
        )
        config.validate()
        return config

    def to_dict(self) -> Dict[str, Any]:
        return {
            "fatigue_rate": self.fatigue_rate,
            "recovery_rate": self.recovery_rate,
            "recovery_target": self.recovery_target,
            "fatigue_index_mode": self.fatigue_index_mode,
            "gravity": self.gravity,
            "rounding": self.rounding,
            "cumulative_tolerance": self.cumulative_tolerance,
            "refine_tolerance": self.refine_tolerance,
            "joints": {
                j.name: {"lower_deg": j.lower_deg, "upper_deg": j.upper_deg, "neutral_deg": j.neutral_deg}
                for j in self.joints
            },
            "discomfort": {
                "G": self.discomfort_G,
                "joints": copy.deepcopy(self.discomfort_joints),
            },
        }

    def validate(self) -> None:
        """Check ranges; raises ScenarioError with the offending field."""
        if self.fatigue_rate <= 0:
            raise ScenarioError("Fatigue rate must be positive", path="model.fatigue_rate")
        if self.recovery_rate <= 0:
            raise ScenarioError("Recovery rate must be positive", path="model.recovery_rate")
        if not 0 < self.recovery_target < 1:
            raise ScenarioError("Recovery target must lie in (0, 1)", path="model.recovery_target")
        if self.fatigue_index_mode not in ("linear", "equation"):
            raise ScenarioError("Expected 'linear' or 'equation'", path="model.fatigue_index_mode")
        if self.rounding not in ("nearest", "floor"):
            raise ScenarioError("Expected 'nearest' or 'floor'", path="model.rounding")
        if self.gravity < 0:
            raise ScenarioError("Gravity must be non-negative", path="model.gravity")
        if not 0 <= self.cumulative_tolerance < 1:
            raise ScenarioError("Tolerance must lie in [0, 1)", path="model.cumulative_tolerance")
        if self.refine_tolerance <= 0:
            raise ScenarioError("Tolerance must be positive", path="model.refine_tolerance")
        for joint in self.joints:
            if not joint.lower_deg < joint.upper_deg:
                raise ScenarioError("Joint needs lower < upper", path=f"model.joints.{joint.name}")
            if not joint.lower_deg <= joint.neutral_deg <= joint.upper_deg:
                raise ScenarioError("Neutral angle outside limits", path=f"model.joints.{joint.name}")
        if self.discomfort_G <= 0:
            raise ScenarioError("G must be positive", path="model.discomfort.G")
        if not self.discomfort_joints:
            raise ScenarioError("Discomfort needs at least one active joint", path="model.discomfort.joints")
        for name, values in self.discomfort_joints.items():
            path = f"model.discomfort.joints.{name}"
            if name not in JOINT_NAMES:
                raise ScenarioError(f"Unknown joint '{name}'", path=path)
            missing = [k for k in DISCOMFORT_KEYS if k not in values]
            if missing:
                raise ScenarioError(f"Missing {', '.join(missing)}", path=path)
            if not values["lower_deg"] < values["neutral_deg"] < values["upper_deg"]:
                raise ScenarioError("Discomfort needs lower < neutral < upper", path=path)
            if values["gamma"] < 0:
                raise ScenarioError("Discomfort weight must be non-negative", path=f"{path}.gamma")

    def capacity_params(self, gamma_max: float) -> CapacityParams:
        return CapacityParams(gamma_max=gamma_max, k=self.fatigue_rate, R=self.recovery_rate)

    def joint_limits_rad(self) -> np.ndarray:
        return np.radians([[j.lower_deg, j.upper_deg] for j in self.joints])

    def neutral_rad(self) -> np.ndarray:
        return np.radians([j.neutral_deg for j in self.joints])

    def discomfort_params(self) -> DiscomfortParams:
        return DiscomfortParams(
            joints={
                JOINT_NAMES.index(name): DiscomfortJoint(
                    lower=values["lower_deg"],
                    upper=values["upper_deg"],
                    neutral=values["neutral_deg"],
                    gamma=values["gamma"],
                )
                for name, values in self.discomfort_joints.items()
            },
            G=self.discomfort_G,
        )


def load_defaults() -> Dict[str, Any]:
    """Packaged default model constants as a dictionary."""
    text = resources.files("posture_fatigue").joinpath("data", DEFAULTS_FILE).read_text(encoding="utf-8")
    return yaml.safe_load(text)


def merge_overrides(base: Dict[str, Any], overrides: Dict[str, Any], path: str = "model") -> Dict[str, Any]:
    """
    Recursively merge overrides into a copy of base.

    Keys absent from base are rejected, except under discomfort.joints where
    new active joints may be added.
    """
    merged = copy.deepcopy(base)
    for key, value in overrides.items():
        field_path = f"{path}.{key}"
        open_mapping = path == "model.discomfort.joints"
        if key not in merged and not open_mapping:
            raise ScenarioError(f"Unknown model setting '{key}'", path=field_path)
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_overrides(merged[key], value, field_path)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def load_model_config(overrides: Optional[Dict[str, Any]] = None) -> ModelConfig:
    """
    Load the model configuration.

    Args:
        overrides: Optional nested dictionary merged over the packaged defaults

    Returns:
        ModelConfig instance
    """
    config_dict = load_defaults()
    if overrides:
        if not isinstance(overrides, dict):
            raise ScenarioError("Model overrides must be a mapping", path="model")
        config_dict = merge_overrides(config_dict, overrides)
    return ModelConfig.from_dict(config_dict)
