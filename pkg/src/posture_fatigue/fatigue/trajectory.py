"""Sampled strength trajectories over a sequence of load segments."""

import logging
import math
from typing import Iterable, List, Optional

import numpy as np

from posture_fatigue.exceptions import DomainError
from posture_fatigue.fatigue.capacity import (
    CapacityParams,
    FatigueIndexMode,
    JointCapacityState,
    LoadSegment,
    accumulated_index,
    advance,
    decay_capacity,
    recover_capacity,
    segment_fatigue_index,
)

logger = logging.getLogger(__name__)

# Sample instants closer than this to a segment end are dropped in favour of the boundary
_BOUNDARY_EPS = 1e-12


def _local_instants(t0: float, duration: float, sample_dt: float) -> np.ndarray:
    """Offsets from t0 of the global sample instants inside [t0, t0 + duration)."""
    first = math.ceil(t0 / sample_dt - 1e-9)
    last = math.floor((t0 + duration) / sample_dt + 1e-9)
    grid = sample_dt * np.arange(first, last + 1) - t0
    grid = grid[(grid > _BOUNDARY_EPS) & (grid < duration - _BOUNDARY_EPS)]
    return np.concatenate(([0.0], grid))


def integrate_trajectory(
    params: CapacityParams,
    segments: Iterable[LoadSegment],
    sample_dt: float,
    gamma_cem0: Optional[float] = None,
    mode: FatigueIndexMode = "linear"
) -> List[JointCapacityState]:
    """
    Evaluate the strength trajectory on a time grid.

    Every state is computed from the closed forms, so the trajectory is exact
    at the sample instants. Segment boundaries are always included, and the
    last state sits at the end of the last segment.

    Args:
        params: Joint parameters
        segments: Work and rest segments in time order
        sample_dt: Sampling step, min
        gamma_cem0: Strength at t = 0 (defaults to Γ_max)
        mode: Fatigue index form

    Returns:
        Time-ordered list of JointCapacityState
    """
    if sample_dt <= 0:
        raise DomainError(f"sample_dt must be positive, got {sample_dt}")

    gamma_cem = float(params.gamma_max) if gamma_cem0 is None else float(gamma_cem0)
    u_index = 0.0
    t0 = 0.0
    states: List[JointCapacityState] = []

    for segment in segments:
        local = _local_instants(t0, segment.duration, sample_dt)
        if segment.kind == "rest":
            gammas = np.atleast_1d(recover_capacity(params, gamma_cem, local))
            indices = np.full_like(local, u_index)
        else:
            gammas = np.atleast_1d(decay_capacity(params, gamma_cem, segment.gamma_load, local))
            indices = u_index + np.atleast_1d(
                accumulated_index(params, gamma_cem, segment.gamma_load, local, mode)
            )

        states.extend(
            JointCapacityState(gamma_cem=float(g), u_index=float(u), t=t0 + float(tau))
            for g, u, tau in zip(gammas, indices, local)
        )

        u_index += segment_fatigue_index(params, gamma_cem, segment, mode)
        gamma_cem = float(advance(params, gamma_cem, segment))
        t0 += segment.duration

    states.append(JointCapacityState(gamma_cem=gamma_cem, u_index=u_index, t=t0))
    logger.debug(f"Sampled {len(states)} states over {t0:.4g} min")
    return states
