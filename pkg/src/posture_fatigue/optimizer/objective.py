"""Stress index and the weighted fatigue + discomfort objective."""

from dataclasses import dataclass, replace
from typing import Optional, Sequence, Union

import numpy as np

from posture_fatigue.dynamics.newton_euler import JointTorques
from posture_fatigue.exceptions import DomainError


ArrayLike = Union[float, np.ndarray]


def stress_index(
    torques: Union[JointTorques, Sequence[float]],
    strengths: Sequence[float]
) -> float:
    """
    Sum of squared relative joint loads, Σ (Γ_i / Γ_max,i)².

    Args:
        torques: JointTorques (shoulder and elbow flexion are used) or loads per joint
        strengths: Strength per joint, same order, N·m
    """
    loads = torques.flexion_loads() if isinstance(torques, JointTorques) else np.asarray(torques, dtype=float)
    strengths = np.asarray(strengths, dtype=float)
    if loads.shape != strengths.shape:
        raise DomainError("Torques and strengths must have the same length")
    if np.any(strengths <= 0):
        raise DomainError("Strengths must be positive")
    return float(np.sum((loads / strengths) ** 2))


@dataclass(frozen=True)
class ObjectiveWeights:
    """
    Weights of the fatigue and discomfort terms and their normalisers.

    The normalisers are the maxima of each term over the evaluated domain and
    are filled in with `normalized_over`.
    """
    w1: float = 1.0
    w2: float = 1.0
    fatigue_norm: Optional[float] = None
    discomfort_norm: Optional[float] = None

    def __post_init__(self):
        if self.w1 < 0 or self.w2 < 0:
            raise DomainError("Objective weights must be non-negative")
        if self.w1 == 0 and self.w2 == 0:
            raise DomainError("At least one objective weight must be positive")

    def normalized_over(self, stress: Sequence[float], discomfort: Sequence[float]) -> "ObjectiveWeights":
        """Copy with normalisers taken as the maxima over a domain."""
        return replace(self, fatigue_norm=float(np.max(stress)), discomfort_norm=float(np.max(discomfort)))


def overall_objective(stress: ArrayLike, discomfort: ArrayLike, weights: ObjectiveWeights) -> ArrayLike:
    """
    w1·f_fatigue/max(f_fatigue) + w2·f_discomfort/max(f_discomfort).

    Raises:
        DomainError: Normalisers missing or not positive
    """
    if weights.fatigue_norm is None or weights.discomfort_norm is None:
        raise DomainError("Objective normalisers have not been computed")
    if weights.fatigue_norm <= 0 or weights.discomfort_norm <= 0:
        raise DomainError("Objective normalisers must be positive")
    value = (
        weights.w1 * np.asarray(stress, dtype=float) / weights.fatigue_norm
        + weights.w2 * np.asarray(discomfort, dtype=float) / weights.discomfort_norm
    )
    return float(value) if value.ndim == 0 else value
