"""
Work-rest schedules.

A duty cycle repeats a work phase at constant joint torques followed by a rest
phase. Durations are in seconds here and converted to the model's minutes
before reaching the capacity kernels.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Mapping, Optional

import numpy as np
import pandas as pd

from posture_fatigue.exceptions import DomainError
from posture_fatigue.fatigue.capacity import (
    CapacityParams,
    decay_capacity,
    endurance_time,
    recover_capacity,
    recovery_time_to_fraction,
)
from posture_fatigue.units import to_minutes, to_seconds

logger = logging.getLogger(__name__)

Rounding = Literal["nearest", "floor"]

CYCLE_COLUMNS = [
    "cycle",
    "joint",
    "t_start_s",
    "cap_start_Nm",
    "cap_after_work_Nm",
    "cap_after_rest_Nm",
    "flag",
]

DEFAULT_RECOVERY_TARGET = 0.99
DEFAULT_CUMULATIVE_TOLERANCE = 1e-3

# Relative slack when comparing consecutive end-of-rest capacities
_SETTLED = 1e-12


@dataclass(frozen=True)
class DutyCycle:
    """
    Repeated work/rest pattern.

    Attributes:
        work_duration: Work phase length, s
        rest_duration: Rest phase length, s
        work_torque: Load torque per joint during work, N·m
        n_cycles: Number of repetitions
    """
    work_duration: float
    rest_duration: float
    work_torque: Mapping[str, float]
    n_cycles: int = 1

    def __post_init__(self):
        if self.work_duration <= 0:
            raise DomainError(f"Work duration must be positive, got {self.work_duration}")
        if self.rest_duration < 0:
            raise DomainError(f"Rest duration must be non-negative, got {self.rest_duration}")
        if self.n_cycles < 1:
            raise DomainError(f"At least one cycle is required, got {self.n_cycles}")
        if any(t < 0 for t in self.work_torque.values()):
            raise DomainError("Work torques must be non-negative")

    @property
    def period(self) -> float:
        return self.work_duration + self.rest_duration


@dataclass(frozen=True)
class AbortedCycle:
    """A work phase the joint could not finish; t_fail_s is measured from cycle start."""
    joint: str
    cycle: int
    t_fail_s: float


@dataclass
class ScheduleReport:
    """
    Outcome of a duty-cycle simulation.

    Attributes:
        cycles: Per-cycle capacities, one row per (cycle, joint), CYCLE_COLUMNS order
        cumulative_fatigue: Per-joint cumulative fatigue flag
        limiting_joint: Joint with the shortest continuous endurance (None if unbounded)
        completable_units: Work units completable without rest (None if unbounded)
        steady_state: Long-run end-of-rest capacity per joint, N·m
        aborts: Work phases that ended in failure
    """
    cycles: pd.DataFrame
    cumulative_fatigue: Dict[str, bool]
    limiting_joint: Optional[str]
    completable_units: Optional[int]
    steady_state: Dict[str, float]
    aborts: List[AbortedCycle] = field(default_factory=list)

    @property
    def any_cumulative(self) -> bool:
        return any(self.cumulative_fatigue.values())

    def end_of_rest(self, joint: str) -> np.ndarray:
        rows = self.cycles[self.cycles["joint"] == joint]
        return rows["cap_after_rest_Nm"].to_numpy()


def steady_state_capacity(params: CapacityParams, work_torque: float, cycle: DutyCycle) -> float:
    """
    Fixed point of one work+rest cycle, Γ_max·(1 - ρ)/(1 - a·ρ).

    a = exp(-k·Γ·t_w/Γ_max) is the work decay factor and ρ = exp(-R·t_r) the
    rest factor. Assumes no work phase aborts.
    """
    gamma_max = float(params.gamma_max)
    a = math.exp(-params.k * work_torque * to_minutes(cycle.work_duration) / gamma_max)
    rho = math.exp(-params.R * to_minutes(cycle.rest_duration))
    if a * rho == 1.0:
        return gamma_max
    return gamma_max * (1 - rho) / (1 - a * rho)


def _is_cumulative(end_of_rest: List[float], gamma_max: float, tolerance: float) -> bool:
    """End-of-rest capacity keeps falling and ends measurably below Γ_max."""
    history = [gamma_max] + end_of_rest
    falling = all(b <= a * (1 + _SETTLED) for a, b in zip(history, history[1:]))
    return falling and history[-1] < history[0] and history[-1] < (1 - tolerance) * gamma_max


def simulate_duty_cycle(
    params: Mapping[str, CapacityParams],
    cycle: DutyCycle,
    cumulative_tolerance: float = DEFAULT_CUMULATIVE_TOLERANCE,
    rounding: Rounding = "nearest"
) -> ScheduleReport:
    """
    Alternate work and rest for every joint.

    A work phase that drains capacity down to the load is aborted at that
    instant; the joint then rests for the remainder of the cycle starting
    from Γ_cem = Γ.

    Args:
        params: Capacity parameters per joint
        cycle: Duty cycle
        cumulative_tolerance: Fraction of Γ_max below which a falling
            end-of-rest capacity counts as cumulative fatigue
        rounding: Rounding policy for completable units

    Returns:
        ScheduleReport
    """
    missing = [joint for joint in params if joint not in cycle.work_torque]
    if missing:
        raise DomainError(f"Duty cycle has no work torque for: {', '.join(missing)}")

    work_min = to_minutes(cycle.work_duration)
    rest_min = to_minutes(cycle.rest_duration)
    rows = []
    aborts: List[AbortedCycle] = []
    cumulative: Dict[str, bool] = {}
    steady: Dict[str, float] = {}

    for joint, joint_params in params.items():
        load = float(cycle.work_torque[joint])
        gamma_max = float(joint_params.gamma_max)
        capacity = gamma_max
        end_of_rest: List[float] = []

        for index in range(cycle.n_cycles):
            start = capacity
            after_work = decay_capacity(joint_params, start, load, work_min) if start > 0 else 0.0
            remaining_rest = rest_min
            flag = "ok"
            if load > 0 and after_work < load:
                # Failure instant measured from the start of this work phase
                t_fail = max(0.0, gamma_max / (joint_params.k * load) * math.log(start / load)) if start > load else 0.0
                after_work = min(start, load)
                remaining_rest = rest_min + (work_min - t_fail)
                flag = "aborted"
                aborts.append(AbortedCycle(joint=joint, cycle=index + 1, t_fail_s=to_seconds(t_fail)))

            capacity = recover_capacity(joint_params, after_work, remaining_rest)
            end_of_rest.append(capacity)
            rows.append({
                "cycle": index + 1,
                "joint": joint,
                "t_start_s": index * cycle.period,
                "cap_start_Nm": start,
                "cap_after_work_Nm": after_work,
                "cap_after_rest_Nm": capacity,
                "flag": flag,
            })

        cumulative[joint] = _is_cumulative(end_of_rest, gamma_max, cumulative_tolerance)
        steady[joint] = steady_state_capacity(joint_params, load, cycle)

    endurances = {
        joint: endurance_time(joint_params, float(cycle.work_torque[joint]))
        for joint, joint_params in params.items()
    }
    limiting = min(endurances, key=endurances.get) if endurances and min(endurances.values()) < math.inf else None

    logger.debug(f"Simulated {cycle.n_cycles} cycles for {len(params)} joints, {len(aborts)} aborted work phases")
    return ScheduleReport(
        cycles=pd.DataFrame(rows, columns=CYCLE_COLUMNS),
        cumulative_fatigue=cumulative,
        limiting_joint=limiting,
        completable_units=count_completable_units(params, cycle.work_torque, cycle.work_duration, rounding),
        steady_state=steady,
        aborts=aborts,
    )


def round_units(ratio: float, rounding: Rounding = "nearest") -> int:
    """Round a unit count, halves going up."""
    if rounding == "nearest":
        return int(math.floor(ratio + 0.5))
    if rounding == "floor":
        return int(math.floor(ratio))
    raise DomainError(f"Unknown rounding policy: {rounding}")


def count_completable_units(
    params: Mapping[str, CapacityParams],
    unit_torque: Mapping[str, float],
    unit_duration: float,
    rounding: Rounding = "nearest"
) -> Optional[int]:
    """
    Work units one fresh worker completes under continuous work.

    Args:
        params: Capacity parameters per joint
        unit_torque: Load torque per joint, N·m
        unit_duration: Length of one work unit, s
        rounding: "nearest" or "floor"

    Returns:
        Number of units limited by the weakest joint, or None when no joint is loaded
    """
    if unit_duration <= 0:
        raise DomainError(f"Unit duration must be positive, got {unit_duration}")

    endurance_s = min(
        to_seconds(endurance_time(joint_params, float(unit_torque[joint])))
        for joint, joint_params in params.items()
    )
    if endurance_s == math.inf:
        return None
    return round_units(endurance_s / unit_duration, rounding)


def recommend_rest(
    params: CapacityParams,
    gamma_cem_after_work: float,
    p: float = DEFAULT_RECOVERY_TARGET
) -> float:
    """Rest in seconds needed to recover to p·Γ_max."""
    return to_seconds(recovery_time_to_fraction(params, gamma_cem_after_work, p))
