"""Base class for joint strength providers."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Tuple

from posture_fatigue.exceptions import DomainError
from posture_fatigue.kinematics.chain import PostureVector, anatomical_flexion


STRENGTH_JOINTS = ("shoulder_flexion", "elbow_flexion")


@dataclass(frozen=True)
class StrengthEntry:
    """Population strength of one joint at one posture."""
    joint: str
    mean: float
    sd: float
    posture_key: Tuple[float, float]

    def __post_init__(self):
        if self.joint not in STRENGTH_JOINTS:
            raise DomainError(f"Unknown strength joint: {self.joint}")
        if self.mean <= 0 or self.sd < 0:
            raise DomainError(f"Invalid strength entry for {self.joint} at {self.posture_key}")


class StrengthModel(ABC):
    """Per-joint mean strength and standard deviation as a function of posture."""

    @abstractmethod
    def lookup(self, joint: str, shoulder_deg: float, elbow_deg: float) -> StrengthEntry:
        """
        Strength of a joint at the given anatomical flexion angles.

        Args:
            joint: "shoulder_flexion" or "elbow_flexion"
            shoulder_deg: Shoulder flexion, degrees
            elbow_deg: Elbow flexion, degrees

        Returns:
            StrengthEntry with mean and standard deviation in N·m
        """
        pass

    @property
    def description(self) -> str:
        return getattr(self, "registry_key", type(self).__name__)


def joint_strength(model: StrengthModel, joint: str, q: PostureVector) -> Tuple[float, float]:
    """(mean, sd) strength of a joint at posture q."""
    shoulder_deg, elbow_deg = anatomical_flexion(q)
    entry = model.lookup(joint, shoulder_deg, elbow_deg)
    return entry.mean, entry.sd
