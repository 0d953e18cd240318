"""
Joint discomfort of a posture.

Each active joint contributes its squared, range-normalised deviation from the
neutral angle plus two sine-power penalties that rise steeply towards the upper
and lower limits:

    Δ   = (q - q^N) / (q^U - q^L)
    QU  = (0.5·sin(5·(q^U - q)/(q^U - q^L) + π/2) + 1)^100
    QL  = (0.5·sin(5·(q - q^L)/(q^U - q^L) + π/2) + 1)^100
    discomfort = (1/G) · Σ [γ·Δ² + G·QU + G·QL]

Angles are joint coordinates in degrees; the penalty argument is a pure ratio.
"""

from dataclasses import dataclass, field
from typing import Dict, Mapping, Union

import numpy as np

from posture_fatigue.exceptions import DomainError
from posture_fatigue.kinematics.chain import ELBOW_JOINT, SHOULDER_JOINT, PostureVector


ArrayLike = Union[float, np.ndarray]

DEFAULT_G = 1e6
PENALTY_EXPONENT = 100

# Maximum of either penalty term, reached at the matching limit
PENALTY_MAX = 1.5 ** PENALTY_EXPONENT


@dataclass(frozen=True)
class DiscomfortJoint:
    """Limits, neutral angle (degrees, joint coordinates) and weight of one joint."""
    lower: float
    upper: float
    neutral: float
    gamma: float = 1.0

    def __post_init__(self):
        if not self.lower < self.neutral < self.upper:
            raise DomainError(
                f"Discomfort needs lower < neutral < upper, got {self.lower}, {self.neutral}, {self.upper}"
            )
        if self.gamma < 0:
            raise DomainError(f"Discomfort weight must be non-negative, got {self.gamma}")

    @property
    def span(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class DiscomfortParams:
    """Discomfort parameters keyed by joint index."""
    joints: Mapping[int, DiscomfortJoint] = field(default_factory=dict)
    G: float = DEFAULT_G

    def __post_init__(self):
        if self.G <= 0:
            raise DomainError(f"G must be positive, got {self.G}")
        if not self.joints:
            raise DomainError("Discomfort needs at least one active joint")

    @classmethod
    def default(cls) -> "DiscomfortParams":
        """Shoulder and elbow flexion with 30° of elbow flexion as neutral."""
        return cls(joints={
            SHOULDER_JOINT: DiscomfortJoint(lower=-180.0, upper=45.0, neutral=0.0),
            ELBOW_JOINT: DiscomfortJoint(lower=-145.0, upper=0.0, neutral=-30.0),
        })


def penalty_upper(q_deg: ArrayLike, joint: DiscomfortJoint) -> ArrayLike:
    """Penalty growing towards the upper limit."""
    return (0.5 * np.sin(5 * (joint.upper - q_deg) / joint.span + np.pi / 2) + 1) ** PENALTY_EXPONENT


def penalty_lower(q_deg: ArrayLike, joint: DiscomfortJoint) -> ArrayLike:
    """Penalty growing towards the lower limit."""
    return (0.5 * np.sin(5 * (q_deg - joint.lower) / joint.span + np.pi / 2) + 1) ** PENALTY_EXPONENT


def joint_discomfort(q_deg: ArrayLike, joint: DiscomfortJoint, G: float = DEFAULT_G) -> ArrayLike:
    """Discomfort contribution of one joint."""
    deviation = (np.asarray(q_deg, dtype=float) - joint.neutral) / joint.span
    return joint.gamma * deviation ** 2 / G + penalty_upper(q_deg, joint) + penalty_lower(q_deg, joint)


def discomfort_terms(q: PostureVector, params: DiscomfortParams) -> Dict[int, float]:
    """Per-joint discomfort keyed by joint index."""
    angles = q.degrees()
    return {
        index: float(joint_discomfort(angles[index], joint, params.G))
        for index, joint in params.joints.items()
    }


def discomfort_index(q: PostureVector, params: DiscomfortParams) -> float:
    """Total discomfort of a posture."""
    return sum(discomfort_terms(q, params).values())
