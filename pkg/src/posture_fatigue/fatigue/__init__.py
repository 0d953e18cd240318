"""Joint-level fatigue and recovery model."""

from posture_fatigue.fatigue.capacity import (
    UNBOUNDED,
    CapacityParams,
    JointCapacityState,
    LoadSegment,
    accumulated_index,
    advance,
    decay_capacity,
    endurance_time,
    fatigue_index,
    recover_capacity,
    recovery_time_to_fraction,
    segment_fatigue_index,
)
from posture_fatigue.fatigue.trajectory import integrate_trajectory

__all__ = [
    "UNBOUNDED",
    "CapacityParams",
    "JointCapacityState",
    "LoadSegment",
    "accumulated_index",
    "advance",
    "decay_capacity",
    "endurance_time",
    "fatigue_index",
    "integrate_trajectory",
    "recover_capacity",
    "recovery_time_to_fraction",
    "segment_fatigue_index",
]
