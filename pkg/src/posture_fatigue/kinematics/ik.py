"""Two-link inverse kinematics in the sagittal plane."""

import logging
import math
from typing import Sequence, Tuple

import numpy as np

from posture_fatigue.exceptions import ReachabilityError
from posture_fatigue.kinematics.chain import (
    ELBOW_JOINT,
    N_JOINTS,
    SHOULDER_JOINT,
    KinematicChain,
    PostureVector,
)

logger = logging.getLogger(__name__)

_REACH_TOL = 1e-12


def planar_flexion_for_point(
    upper: float,
    lower: float,
    x: float,
    z: float
) -> Tuple[float, float]:
    """
    Shoulder and elbow flexion (rad) placing the hand at (x, z).

    The shoulder is the origin, x points forward and z up; flexion angles are
    measured from the hanging arm. The elbow-down branch is returned.
    """
    distance = math.hypot(x, z)
    if distance > upper + lower + _REACH_TOL or distance <= abs(upper - lower):
        raise ReachabilityError(
            f"Hand target at {distance:.4f} m is outside the reachable annulus "
            f"({abs(upper - lower):.4f}, {upper + lower:.4f}] m"
        )

    cos_elbow = (distance ** 2 - upper ** 2 - lower ** 2) / (2 * upper * lower)
    elbow = math.acos(min(1.0, max(-1.0, cos_elbow)))
    shoulder = math.atan2(x, -z) - math.atan2(lower * math.sin(elbow), upper + lower * math.cos(elbow))
    return shoulder, elbow


def sagittal_posture_for_distance(
    chain: KinematicChain,
    horizontal_distance: float,
    tool_offset: Sequence[float] = (0.0, 0.0)
) -> PostureVector:
    """
    Posture that puts the working point at shoulder height a given distance ahead.

    The working point is the tool tip, which sits `tool_offset` (forward, up)
    metres from the hand. With a zero offset the hand itself is placed at
    shoulder height.

    Args:
        chain: Right-arm chain
        horizontal_distance: Shoulder-to-target distance, m
        tool_offset: Tool tip position relative to the hand, (forward, up), m

    Returns:
        PostureVector with q1, q4 solved and the other joints at zero

    Raises:
        ReachabilityError: The hand target is out of reach
        JointLimitError: The solution leaves the joint limits
    """
    forward, up = tool_offset
    upper, lower = chain.segment_lengths
    shoulder, elbow = planar_flexion_for_point(upper, lower, horizontal_distance - forward, -up)

    # out-of-plane joints at zero keep the arm in the sagittal plane
    q = np.zeros(N_JOINTS)
    q[SHOULDER_JOINT] = -shoulder
    q[ELBOW_JOINT] = -elbow
    posture = PostureVector(q)
    chain.check_limits(posture)

    logger.debug(
        f"Distance {horizontal_distance:.4f} m -> shoulder {np.degrees(shoulder):.2f} deg, "
        f"elbow {np.degrees(elbow):.2f} deg"
    )
    return posture
