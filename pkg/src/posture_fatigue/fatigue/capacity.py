"""
Joint-level fatigue and recovery model.

The current strength Γ_cem of a joint decays under a load torque Γ as

    dΓ_cem/dt = -k · (Γ_cem / Γ_max) · Γ

and recovers at rest as

    dΓ_cem/dt = R · (Γ_max - Γ_cem)

Both equations have closed-form solutions for piecewise-constant loads, which
is what every operation here evaluates. Time is in minutes throughout this
module (k and R are min⁻¹); callers at the file/CLI boundary convert seconds.

All operations accept scalars or numpy arrays and broadcast.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Union

import numpy as np

from posture_fatigue.exceptions import DomainError


ArrayLike = Union[float, np.ndarray]

SegmentKind = Literal["work", "rest"]

FatigueIndexMode = Literal["linear", "equation"]

DEFAULT_FATIGUE_RATE = 1.0
DEFAULT_RECOVERY_RATE = 2.4

# Endurance reported for an unloaded joint
UNBOUNDED = math.inf


def _out(value: np.ndarray) -> ArrayLike:
    """Return plain floats for scalar results."""
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


@dataclass(frozen=True)
class CapacityParams:
    """
    Parameters of one joint in the fatigue/recovery model.

    Attributes:
        gamma_max: Maximum joint strength Γ_max, N·m (plays the role of MVC)
        k: Fatigue rate, min⁻¹
        R: Recovery rate, min⁻¹
    """
    gamma_max: ArrayLike
    k: ArrayLike = DEFAULT_FATIGUE_RATE
    R: ArrayLike = DEFAULT_RECOVERY_RATE

    def __post_init__(self):
        if np.any(np.asarray(self.gamma_max) <= 0):
            raise DomainError(f"gamma_max must be positive, got {self.gamma_max}")
        if np.any(np.asarray(self.k) <= 0):
            raise DomainError(f"Fatigue rate k must be positive, got {self.k}")
        if np.any(np.asarray(self.R) <= 0):
            raise DomainError(f"Recovery rate R must be positive, got {self.R}")


@dataclass(frozen=True)
class JointCapacityState:
    """
    State of a joint at one time instant.

    Attributes:
        gamma_cem: Current joint strength, N·m
        u_index: Accumulated fatigue index (dimensionless)
        t: Time, min
    """
    gamma_cem: float
    u_index: float
    t: float


@dataclass(frozen=True)
class LoadSegment:
    """A constant joint load held for a duration (minutes)."""
    gamma_load: float
    duration: float
    kind: SegmentKind = "work"

    def __post_init__(self):
        if self.duration <= 0:
            raise DomainError(f"Segment duration must be positive, got {self.duration}")
        if self.gamma_load < 0:
            raise DomainError(f"Segment load must be non-negative, got {self.gamma_load}")
        if self.kind not in ("work", "rest"):
            raise DomainError(f"Unknown segment kind: {self.kind}")
        if self.kind == "rest" and self.gamma_load != 0:
            raise DomainError("Rest segments carry no load")

    @classmethod
    def work(cls, gamma_load: float, duration: float) -> "LoadSegment":
        return cls(gamma_load=gamma_load, duration=duration, kind="work")

    @classmethod
    def rest(cls, duration: float) -> "LoadSegment":
        return cls(gamma_load=0.0, duration=duration, kind="rest")


def decay_capacity(
    params: CapacityParams,
    gamma_cem0: ArrayLike,
    gamma_load: ArrayLike,
    duration: ArrayLike
) -> ArrayLike:
    """
    Strength remaining after holding a constant load.

    Args:
        params: Joint parameters
        gamma_cem0: Strength at the start of the hold, N·m
        gamma_load: Load torque, N·m
        duration: Hold duration, min

    Returns:
        Γ_cem0 · exp(-k · Γ · t / Γ_max)
    """
    gamma_cem0 = np.asarray(gamma_cem0, dtype=float)
    gamma_load = np.asarray(gamma_load, dtype=float)
    duration = np.asarray(duration, dtype=float)
    gamma_max = np.asarray(params.gamma_max, dtype=float)

    if np.any(gamma_cem0 <= 0):
        raise DomainError("Initial strength must be positive")
    if np.any(gamma_cem0 > gamma_max * (1 + 1e-12)):
        raise DomainError("Initial strength cannot exceed gamma_max")
    if np.any(gamma_load < 0):
        raise DomainError("Load torque must be non-negative")
    if np.any(duration < 0):
        raise DomainError("Duration must be non-negative")

    return _out(gamma_cem0 * np.exp(-params.k * gamma_load * duration / gamma_max))


def recover_capacity(
    params: CapacityParams,
    gamma_cem0: ArrayLike,
    duration: ArrayLike
) -> ArrayLike:
    """
    Strength after resting, Γ_max + (Γ_cem0 - Γ_max) · exp(-R · t).

    Args:
        params: Joint parameters
        gamma_cem0: Strength at the start of the rest, N·m
        duration: Rest duration, min
    """
    gamma_cem0 = np.asarray(gamma_cem0, dtype=float)
    duration = np.asarray(duration, dtype=float)
    gamma_max = np.asarray(params.gamma_max, dtype=float)

    if np.any(gamma_cem0 < 0):
        raise DomainError("Initial strength must be non-negative")
    if np.any(gamma_cem0 > gamma_max * (1 + 1e-12)):
        raise DomainError("Initial strength cannot exceed gamma_max")
    if np.any(duration < 0):
        raise DomainError("Duration must be non-negative")

    recovered = gamma_max + (gamma_cem0 - gamma_max) * np.exp(-params.R * duration)
    return _out(np.minimum(recovered, gamma_max))


def endurance_time(params: CapacityParams, gamma_load: ArrayLike) -> ArrayLike:
    """
    Time until a fresh joint can no longer hold the load, in minutes.

    Solves Γ_cem(t) = Γ from Γ_cem(0) = Γ_max:

        t = (Γ_max / (k · Γ)) · ln(Γ_max / Γ)

    A load at or above Γ_max gives 0 (the task is infeasible from the start);
    a zero load gives UNBOUNDED.
    """
    gamma_load = np.asarray(gamma_load, dtype=float)
    gamma_max = np.asarray(params.gamma_max, dtype=float)

    if np.any(gamma_load < 0):
        raise DomainError("Load torque must be non-negative")

    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = gamma_max / gamma_load
        t = ratio / params.k * np.log(ratio)
    t = np.where(gamma_load >= gamma_max, 0.0, t)
    t = np.where(gamma_load == 0, UNBOUNDED, t)
    return _out(t)


def recovery_time_to_fraction(
    params: CapacityParams,
    gamma_cem0: ArrayLike,
    p: float
) -> ArrayLike:
    """
    Rest needed to recover from Γ_cem0 to p · Γ_max, in minutes.

        t = (1/R) · ln((Γ_max - Γ_cem0) / ((1 - p) · Γ_max))

    Zero when Γ_cem0 is already at or above the target.
    """
    if not 0 < p < 1:
        raise DomainError(f"Recovery fraction must lie in (0, 1), got {p}")

    gamma_cem0 = np.asarray(gamma_cem0, dtype=float)
    gamma_max = np.asarray(params.gamma_max, dtype=float)
    if np.any(gamma_cem0 < 0):
        raise DomainError("Initial strength must be non-negative")
    if np.any(gamma_cem0 > gamma_max * (1 + 1e-12)):
        raise DomainError("Initial strength cannot exceed gamma_max")

    deficit = np.maximum(gamma_max - gamma_cem0, (1 - p) * gamma_max)
    t = np.log(deficit / ((1 - p) * gamma_max)) / params.R
    return _out(np.where(gamma_cem0 >= p * gamma_max, 0.0, t))


def accumulated_index(
    params: CapacityParams,
    gamma_cem0: float,
    gamma_load: float,
    elapsed: ArrayLike,
    mode: FatigueIndexMode = "linear"
) -> ArrayLike:
    """
    Fatigue index accumulated after holding a load for `elapsed` minutes.

    linear:   (Γ / Γ_max) · t
    equation: ∫ (Γ_max / Γ_cem) · (Γ / Γ_cem) dt along the decay from Γ_cem0,
              which integrates to (Γ_max·Γ/Γ_cem0²) · (e^{2κt} - 1) / (2κ)
              with κ = k·Γ/Γ_max
    """
    elapsed = np.asarray(elapsed, dtype=float)
    gamma_max = float(params.gamma_max)
    if mode not in ("linear", "equation"):
        raise DomainError(f"Unknown fatigue index mode: {mode}")
    if gamma_load == 0:
        return _out(np.zeros_like(elapsed))
    if mode == "linear":
        return _out(gamma_load / gamma_max * elapsed)

    kappa = params.k * gamma_load / gamma_max
    scale = gamma_max * gamma_load / gamma_cem0 ** 2
    return _out(scale * np.expm1(2 * kappa * elapsed) / (2 * kappa))


def segment_fatigue_index(
    params: CapacityParams,
    gamma_cem0: float,
    segment: LoadSegment,
    mode: FatigueIndexMode = "linear"
) -> float:
    """Fatigue index accumulated over one segment; rest adds nothing."""
    if segment.kind == "rest":
        return 0.0
    return accumulated_index(params, gamma_cem0, segment.gamma_load, segment.duration, mode)


def advance(
    params: CapacityParams,
    gamma_cem0: float,
    segment: LoadSegment
) -> float:
    """Strength at the end of a segment."""
    if segment.kind == "rest":
        return recover_capacity(params, gamma_cem0, segment.duration)
    return decay_capacity(params, gamma_cem0, segment.gamma_load, segment.duration)


def fatigue_index(
    params: CapacityParams,
    segments: Iterable[LoadSegment],
    mode: FatigueIndexMode = "linear",
    gamma_cem0: Optional[float] = None
) -> float:
    """
    Accumulated fatigue index over a sequence of segments.

    The default linear form sums (Γ/Γ_max)·t over work segments and is
    additive over concatenation. The equation mode integrates the printed
    rate (Γ_max/Γ_cem)·(Γ/Γ_cem) and depends on the strength history, which
    is carried from gamma_cem0 (default Γ_max) through work and rest.
    """
    gamma_cem = float(params.gamma_max) if gamma_cem0 is None else gamma_cem0
    total = 0.0
    for segment in segments:
        total += segment_fatigue_index(params, gamma_cem, segment, mode)
        gamma_cem = advance(params, gamma_cem, segment)
    return total
