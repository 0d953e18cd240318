"""Population percentiles of joint strength."""

from dataclasses import dataclass
from typing import Iterable, List, Union

import numpy as np

from posture_fatigue.exceptions import DegeneratePopulationError, DomainError


ALLOWED_Z = (-2, -1, 0, 1, 2)


@dataclass(frozen=True)
class PercentileSelector:
    """Standard-deviation multiplier selecting a population member (mean + z·sd)."""
    z: int

    def __post_init__(self):
        if self.z not in ALLOWED_Z:
            raise DomainError(f"Percentile selector must be one of {ALLOWED_Z}, got {self.z}")

    @property
    def label(self) -> str:
        if self.z == 0:
            return "mean"
        sign = "+" if self.z > 0 else "-"
        return f"{sign}{abs(self.z)}sd" if abs(self.z) != 1 else f"{sign}sd"


def selectors(values: Iterable[int]) -> List[PercentileSelector]:
    """Sorted selectors for a set of z values."""
    return [PercentileSelector(int(z)) for z in sorted(set(values))]


def percentile_strength(
    mean: Union[float, np.ndarray],
    sd: Union[float, np.ndarray],
    z: Union[int, PercentileSelector]
) -> Union[float, np.ndarray]:
    """
    Strength of the population member z standard deviations from the mean.

    Raises:
        DegeneratePopulationError: mean + z·sd is not positive
    """
    if isinstance(z, PercentileSelector):
        z = z.z
    strength = np.asarray(mean, dtype=float) + z * np.asarray(sd, dtype=float)
    if np.any(strength <= 0):
        raise DegeneratePopulationError(f"Strength mean {z:+d} sd is not positive")
    return float(strength) if strength.ndim == 0 else strength
