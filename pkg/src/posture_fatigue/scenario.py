"""
Scenario files.

A scenario describes one manual-handling task: the worker's body, the posture
(explicit joint angles or a working distance), the tool and process force, the
work/rest pattern and which outputs to evaluate. File units are kg, m, N, s and
degrees.

Example (JSON):

    {
      "format": "posture-fatigue/1",
      "name": "drill-2.5kg",
      "body": {"mass_kg": 70, "height_m": 1.70},
      "posture": {"joint_angles_deg": [-30, 0, 0, -90, 0]},
      "tool_mass_kg": 5.0,
      "process_force": {"magnitude_N": 49, "direction": [1, 0, 0]},
      "load_split_factor": 0.5,
      "work_unit_s": 30
    }
"""

import copy
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from posture_fatigue.anthropometry import BodyParams
from posture_fatigue.exceptions import DomainError, ScenarioError
from posture_fatigue.kinematics.chain import N_JOINTS
from posture_fatigue.parsers.base import ScenarioDocument
from posture_fatigue.registry import parser_registry
from posture_fatigue.strength.base import STRENGTH_JOINTS
from posture_fatigue.strength.population import ALLOWED_Z
from posture_fatigue.utils.config import load_model_config
from posture_fatigue.utils.detector import detect_format

logger = logging.getLogger(__name__)

SCENARIO_FORMAT = "posture-fatigue/1"

TOP_LEVEL_KEYS = {
    "format", "name", "body", "posture", "tool_mass_kg", "tool_tip_offset_m",
    "process_force", "load_split_factor", "load_torques_Nm", "work_unit_s",
    "duty_cycle", "percentiles", "weights", "strength_model", "sweep", "model",
}

DEFAULT_TOOL_MASS = 5.0
DEFAULT_PROCESS_FORCE = 49.0
DEFAULT_SPLIT = 0.5
DEFAULT_WORK_UNIT = 30.0


@dataclass
class DutyCycleSpec:
    """Work/rest pattern as written in a scenario (seconds)."""
    work_s: float
    rest_s: float
    n_cycles: int = 10
    percentile: int = 0


@dataclass
class SweepSpec:
    """Working-distance range as written in a scenario (metres)."""
    start_m: float
    stop_m: float
    step_m: float


@dataclass
class Scenario:
    """A validated scenario."""
    name: str
    body: BodyParams
    joint_angles_deg: Optional[List[float]] = None
    distance_m: Optional[float] = None
    tool_mass_kg: float = DEFAULT_TOOL_MASS
    tool_tip_offset_m: List[float] = field(default_factory=lambda: [0.0, 0.0])
    force_magnitude_N: float = DEFAULT_PROCESS_FORCE
    force_direction: List[float] = field(default_factory=lambda: [1.0, 0.0, 0.0])
    load_split_factor: float = DEFAULT_SPLIT
    load_torques_Nm: Optional[Dict[str, float]] = None
    work_unit_s: float = DEFAULT_WORK_UNIT
    duty_cycle: Optional[DutyCycleSpec] = None
    percentiles: List[int] = field(default_factory=lambda: list(ALLOWED_Z))
    w1: float = 1.0
    w2: float = 1.0
    strength_model: str = "builtin"
    sweep: Optional[SweepSpec] = None
    model: Dict[str, Any] = field(default_factory=dict)
    base_dir: Optional[Path] = field(default=None, compare=False)

    @property
    def is_distance_mode(self) -> bool:
        return self.distance_m is not None

    @classmethod
    def from_dict(
        cls,
        data: Dict[str, Any],
        document: Optional[ScenarioDocument] = None,
        base_dir: Optional[Path] = None
    ) -> "Scenario":
        """
        Validate a decoded scenario.

        Args:
            data: Decoded mapping
            document: Source document, used to locate errors
            base_dir: Directory relative file references are resolved against

        Raises:
            ScenarioError: With the offending field path and, when known, its line
        """
        return _ScenarioReader(data, document).read(base_dir)

    def to_dict(self) -> Dict[str, Any]:
        """Serialise every field back to the file schema."""
        posture: Dict[str, Any] = (
            {"joint_angles_deg": list(self.joint_angles_deg)}
            if self.joint_angles_deg is not None
            else {"distance_m": self.distance_m}
        )
        data: Dict[str, Any] = {
            "format": SCENARIO_FORMAT,
            "name": self.name,
            "body": {"mass_kg": self.body.M, "height_m": self.body.H},
            "posture": posture,
            "tool_mass_kg": self.tool_mass_kg,
            "tool_tip_offset_m": list(self.tool_tip_offset_m),
            "process_force": {"magnitude_N": self.force_magnitude_N, "direction": list(self.force_direction)},
            "load_split_factor": self.load_split_factor,
            "load_torques_Nm": dict(self.load_torques_Nm) if self.load_torques_Nm is not None else None,
            "work_unit_s": self.work_unit_s,
            "duty_cycle": None,
            "percentiles": list(self.percentiles),
            "weights": {"w1": self.w1, "w2": self.w2},
            "strength_model": self.strength_model,
            "sweep": None,
            "model": copy.deepcopy(self.model),
        }
        if self.duty_cycle is not None:
            data["duty_cycle"] = {
                "work_s": self.duty_cycle.work_s,
                "rest_s": self.duty_cycle.rest_s,
                "n_cycles": self.duty_cycle.n_cycles,
                "percentile": self.duty_cycle.percentile,
            }
        if self.sweep is not None:
            data["sweep"] = {
                "start_m": self.sweep.start_m,
                "stop_m": self.sweep.stop_m,
                "step_m": self.sweep.step_m,
            }
        return data


class _ScenarioReader:
    """Field-by-field validation with located errors."""

    def __init__(self, data: Dict[str, Any], document: Optional[ScenarioDocument]):
        self.data = data
        self.document = document

    def fail(self, message: str, path: str) -> ScenarioError:
        line = self.document.line_of(path) if self.document else None
        source = self.document.source if self.document else None
        return ScenarioError(message, path=path, line=line, source=source)

    def number(self, value: Any, path: str, minimum: Optional[float] = None, positive: bool = False) -> float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise self.fail(f"Expected a number, got {value!r}", path)
        value = float(value)
        if positive and value <= 0:
            raise self.fail(f"Must be positive, got {value}", path)
        if minimum is not None and value < minimum:
            raise self.fail(f"Must be at least {minimum}, got {value}", path)
        return value

    def integer(self, value: Any, path: str, minimum: Optional[int] = None) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, float) and value.is_integer():
                value = int(value)
            else:
                raise self.fail(f"Expected an integer, got {value!r}", path)
        if minimum is not None and value < minimum:
            raise self.fail(f"Must be at least {minimum}, got {value}", path)
        return value

    def mapping(self, value: Any, path: str, allowed: set) -> Dict[str, Any]:
        if not isinstance(value, dict):
            raise self.fail("Expected an object", path)
        unknown = sorted(set(value) - allowed)
        if unknown:
            raise self.fail(f"Unknown field '{unknown[0]}'", f"{path}.{unknown[0]}")
        return value

    def vector(self, value: Any, path: str, length: int) -> List[float]:
        if not isinstance(value, list) or len(value) != length:
            raise self.fail(f"Expected a list of {length} numbers", path)
        return [self.number(v, f"{path}[{i}]") for i, v in enumerate(value)]

    def read(self, base_dir: Optional[Path]) -> Scenario:
        data = self.data
        unknown = sorted(set(data) - TOP_LEVEL_KEYS)
        if unknown:
            raise self.fail(f"Unknown field '{unknown[0]}'", unknown[0])

        if data.get("format") != SCENARIO_FORMAT:
            raise self.fail(f"Expected format '{SCENARIO_FORMAT}', got {data.get('format')!r}", "format")

        name = data.get("name")
        if not isinstance(name, str) or not name.strip():
            raise self.fail("Scenario needs a non-empty name", "name")

        if "body" not in data:
            raise self.fail("Missing field", "body")
        body_data = self.mapping(data["body"], "body", {"mass_kg", "height_m"})
        for key in ("mass_kg", "height_m"):
            if key not in body_data:
                raise self.fail("Missing field", f"body.{key}")
        body = BodyParams(
            M=self.number(body_data["mass_kg"], "body.mass_kg", positive=True),
            H=self.number(body_data["height_m"], "body.height_m", positive=True),
        )

        if "posture" not in data:
            raise self.fail("Missing field", "posture")
        posture = self.mapping(data["posture"], "posture", {"joint_angles_deg", "distance_m"})
        if ("joint_angles_deg" in posture) == ("distance_m" in posture):
            raise self.fail("Give exactly one of joint_angles_deg or distance_m", "posture")
        joint_angles = None
        distance = None
        if "joint_angles_deg" in posture:
            joint_angles = self.vector(posture["joint_angles_deg"], "posture.joint_angles_deg", N_JOINTS)
        else:
            distance = self.number(posture["distance_m"], "posture.distance_m", positive=True)

        force = self.mapping(data.get("process_force", {}), "process_force", {"magnitude_N", "direction"})
        direction = self.vector(force.get("direction", [1.0, 0.0, 0.0]), "process_force.direction", 3)
        magnitude = self.number(force.get("magnitude_N", DEFAULT_PROCESS_FORCE), "process_force.magnitude_N", minimum=0.0)
        if magnitude > 0 and not any(direction):
            raise self.fail("Direction must be non-zero", "process_force.direction")

        split = self.number(data.get("load_split_factor", DEFAULT_SPLIT), "load_split_factor", positive=True)
        if split > 1:
            raise self.fail(f"Must not exceed 1, got {split}", "load_split_factor")

        load_torques = None
        if data.get("load_torques_Nm") is not None:
            torques = self.mapping(data["load_torques_Nm"], "load_torques_Nm", set(STRENGTH_JOINTS))
            missing = [j for j in STRENGTH_JOINTS if j not in torques]
            if missing:
                raise self.fail("Missing field", f"load_torques_Nm.{missing[0]}")
            load_torques = {
                joint: self.number(torques[joint], f"load_torques_Nm.{joint}", minimum=0.0)
                for joint in STRENGTH_JOINTS
            }

        duty_cycle = None
        if data.get("duty_cycle") is not None:
            cycle = self.mapping(data["duty_cycle"], "duty_cycle", {"work_s", "rest_s", "n_cycles", "percentile"})
            for key in ("work_s", "rest_s"):
                if key not in cycle:
                    raise self.fail("Missing field", f"duty_cycle.{key}")
            percentile = self.integer(cycle.get("percentile", 0), "duty_cycle.percentile")
            if percentile not in ALLOWED_Z:
                raise self.fail(f"Must be one of {list(ALLOWED_Z)}", "duty_cycle.percentile")
            duty_cycle = DutyCycleSpec(
                work_s=self.number(cycle["work_s"], "duty_cycle.work_s", positive=True),
                rest_s=self.number(cycle["rest_s"], "duty_cycle.rest_s", minimum=0.0),
                n_cycles=self.integer(cycle.get("n_cycles", 10), "duty_cycle.n_cycles", minimum=1),
                percentile=percentile,
            )

        percentiles_data = data.get("percentiles", list(ALLOWED_Z))
        if not isinstance(percentiles_data, list) or not percentiles_data:
            raise self.fail("Expected a non-empty list", "percentiles")
        percentiles = []
        for i, value in enumerate(percentiles_data):
            z = self.integer(value, f"percentiles[{i}]")
            if z not in ALLOWED_Z:
                raise self.fail(f"Must be one of {list(ALLOWED_Z)}", "percentiles")
            percentiles.append(z)
        if len(set(percentiles)) != len(percentiles):
            raise self.fail("Duplicate percentile", "percentiles")

        weights = self.mapping(data.get("weights", {}), "weights", {"w1", "w2"})
        w1 = self.number(weights.get("w1", 1.0), "weights.w1", minimum=0.0)
        w2 = self.number(weights.get("w2", 1.0), "weights.w2", minimum=0.0)
        if w1 == 0 and w2 == 0:
            raise self.fail("At least one weight must be positive", "weights")

        strength_model = data.get("strength_model", "builtin")
        if not isinstance(strength_model, str) or not strength_model:
            raise self.fail("Expected 'builtin' or a file path", "strength_model")
        if strength_model != "builtin":
            path = Path(strength_model)
            if not path.is_absolute() and base_dir is not None:
                path = base_dir / path
            if not path.exists():
                raise self.fail(f"Strength model file not found: {path}", "strength_model")

        sweep = None
        if data.get("sweep") is not None:
            sweep_data = self.mapping(data["sweep"], "sweep", {"start_m", "stop_m", "step_m"})
            for key in ("start_m", "stop_m", "step_m"):
                if key not in sweep_data:
                    raise self.fail("Missing field", f"sweep.{key}")
            sweep = SweepSpec(
                start_m=self.number(sweep_data["start_m"], "sweep.start_m", positive=True),
                stop_m=self.number(sweep_data["stop_m"], "sweep.stop_m", positive=True),
                step_m=self.number(sweep_data["step_m"], "sweep.step_m", positive=True),
            )
            if sweep.stop_m < sweep.start_m:
                raise self.fail("stop_m must not be below start_m", "sweep.stop_m")

        model = data.get("model") or {}
        if not isinstance(model, dict):
            raise self.fail("Expected an object", "model")

        return Scenario(
            name=name,
            body=body,
            joint_angles_deg=joint_angles,
            distance_m=distance,
            tool_mass_kg=self.number(data.get("tool_mass_kg", DEFAULT_TOOL_MASS), "tool_mass_kg", minimum=0.0),
            tool_tip_offset_m=self.vector(data.get("tool_tip_offset_m", [0.0, 0.0]), "tool_tip_offset_m", 2),
            force_magnitude_N=magnitude,
            force_direction=direction,
            load_split_factor=split,
            load_torques_Nm=load_torques,
            work_unit_s=self.number(data.get("work_unit_s", DEFAULT_WORK_UNIT), "work_unit_s", positive=True),
            duty_cycle=duty_cycle,
            percentiles=percentiles,
            w1=w1,
            w2=w2,
            strength_model=strength_model,
            sweep=sweep,
            model=copy.deepcopy(model),
            base_dir=base_dir,
        )


def load_scenario(scenario_path: Union[str, Path], file_format: Optional[str] = None) -> Scenario:
    """
    Load and validate a scenario file.

    Args:
        scenario_path: Path to a JSON or YAML scenario
        file_format: Parser key; detected when None

    Returns:
        Scenario instance
    """
    path = Path(scenario_path)
    if not path.exists():
        raise FileNotFoundError(f"Scenario file not found: {scenario_path}")

    file_format = file_format or detect_format(path)
    if not file_format:
        raise ScenarioError("Could not detect the scenario format", source=str(path))

    parser = parser_registry.create(file_format)
    document = parser.parse(path)
    try:
        scenario = Scenario.from_dict(document.data, document, base_dir=path.parent)
        load_model_config(scenario.model)
    except ScenarioError as e:
        if e.source:
            raise
        raise ScenarioError(e.message, path=e.path, line=document.line_of(e.path), source=str(path)) from e
    except DomainError as e:
        raise ScenarioError(str(e), source=str(path)) from e
    logger.debug(f"Loaded scenario '{scenario.name}' from {path}")
    return scenario
