"""
Joint torques by the recursive Newton-Euler method.

All quantities are expressed in the base frame. Gravity enters as an upward
acceleration of the base, so the static case needs no special handling: with
zero joint velocities and accelerations the recursion reduces to summing
segment weights and the hand wrench from the hand back to the shoulder.

Torque signs follow each joint's z axis: τ_j is the moment the joint has to
supply to hold the posture.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from posture_fatigue.exceptions import DomainError
from posture_fatigue.kinematics.chain import (
    ELBOW_JOINT,
    SHOULDER_JOINT,
    KinematicChain,
    PostureVector,
    SegmentAttachment,
    forward_kinematics,
)

logger = logging.getLogger(__name__)

STANDARD_GRAVITY = 9.81

DOWN = np.array([0.0, 0.0, -1.0])


@dataclass(frozen=True, eq=False)
class ExternalWrench:
    """
    Force and moment the environment applies at the hand point, base frame.

    Attributes:
        force: N
        moment: N·m
    """
    force: np.ndarray
    moment: np.ndarray

    def __post_init__(self):
        force = np.asarray(self.force, dtype=float).reshape(3)
        moment = np.asarray(self.moment, dtype=float).reshape(3)
        if not (np.all(np.isfinite(force)) and np.all(np.isfinite(moment))):
            raise DomainError("Wrench components must be finite")
        object.__setattr__(self, "force", force)
        object.__setattr__(self, "moment", moment)

    @classmethod
    def zero(cls) -> "ExternalWrench":
        return cls(np.zeros(3), np.zeros(3))

    @classmethod
    def from_tool(
        cls,
        tool_mass: float,
        force_magnitude: float,
        force_direction: Sequence[float] = (1.0, 0.0, 0.0),
        split: float = 0.5,
        g: float = STANDARD_GRAVITY
    ) -> "ExternalWrench":
        """
        Hand wrench of a hand-held tool pushed against a workpiece.

        The arm carries `split` of the tool weight (vertical, down) and of the
        reaction to the process force, which pushes the hand back along
        -direction.

        Args:
            tool_mass: Tool mass, kg
            force_magnitude: Process force the tool applies to the workpiece, N
            force_direction: Direction of the process force (normalised here)
            split: Share of the load carried by this arm
            g: Gravitational acceleration, m/s²
        """
        if tool_mass < 0 or force_magnitude < 0:
            raise DomainError("Tool mass and process force must be non-negative")
        if not 0 < split <= 1:
            raise DomainError(f"Load split factor must lie in (0, 1], got {split}")

        direction = np.asarray(force_direction, dtype=float)
        norm = np.linalg.norm(direction)
        if norm == 0:
            if force_magnitude:
                raise DomainError("Process force direction must be non-zero")
            direction, norm = np.zeros(3), 1.0

        weight = split * tool_mass * g * DOWN
        reaction = -split * force_magnitude * direction / norm
        return cls(weight + reaction, np.zeros(3))

    def __add__(self, other: "ExternalWrench") -> "ExternalWrench":
        return ExternalWrench(self.force + other.force, self.moment + other.moment)

    def scaled(self, factor: float) -> "ExternalWrench":
        return ExternalWrench(self.force * factor, self.moment * factor)


@dataclass(frozen=True, eq=False)
class JointTorques:
    """Signed torque about each joint's z axis, N·m."""
    tau: np.ndarray

    @property
    def shoulder(self) -> float:
        return float(self.tau[SHOULDER_JOINT])

    @property
    def elbow(self) -> float:
        return float(self.tau[ELBOW_JOINT])

    def flexion_loads(self) -> np.ndarray:
        """Magnitudes of the shoulder and elbow flexion torques."""
        return np.abs(self.tau[[SHOULDER_JOINT, ELBOW_JOINT]])


def _link_table(chain: KinematicChain, segments: Optional[Sequence[SegmentAttachment]]):
    attachments = chain.attachments if segments is None else tuple(segments)
    by_link = {}
    for attachment in attachments:
        if not 0 <= attachment.link < chain.n_joints:
            raise DomainError(f"Segment attached to unknown link {attachment.link}")
        by_link[attachment.link] = attachment
    return by_link


def inverse_dynamics(
    chain: KinematicChain,
    q: PostureVector,
    qd: Optional[Sequence[float]] = None,
    qdd: Optional[Sequence[float]] = None,
    wrench: Optional[ExternalWrench] = None,
    g: float = STANDARD_GRAVITY,
    segments: Optional[Sequence[SegmentAttachment]] = None,
    check: bool = True
) -> JointTorques:
    """
    Joint torques for a motion state under gravity and a hand wrench.

    Args:
        chain: Kinematic chain with segment attachments
        q: Joint angles
        qd: Joint velocities, rad/s (default zero)
        qdd: Joint accelerations, rad/s² (default zero)
        wrench: Wrench the environment applies at the hand (default none)
        g: Gravitational acceleration, m/s²
        segments: Override for the chain's attachments
        check: Enforce joint limits

    Returns:
        JointTorques
    """
    n = chain.n_joints
    qd = np.zeros(n) if qd is None else np.asarray(qd, dtype=float)
    qdd = np.zeros(n) if qdd is None else np.asarray(qdd, dtype=float)
    wrench = ExternalWrench.zero() if wrench is None else wrench
    links = _link_table(chain, segments)

    frames = forward_kinematics(chain, q, check=check)
    origins = [frame[:3, 3] for frame in frames[:n]]
    axes = [frame[:3, 2] for frame in frames[:n]]
    hand = frames[n][:3, 3]

    # Forward pass: link velocities and accelerations
    omega = np.zeros(3)
    omega_dot = np.zeros(3)
    accel = np.array([0.0, 0.0, g])
    previous_origin = np.zeros(3)

    forces = []
    moments = []
    coms = []
    for j in range(n):
        lever = origins[j] - previous_origin
        accel = accel + np.cross(omega_dot, lever) + np.cross(omega, np.cross(omega, lever))
        spin = qd[j] * axes[j]
        omega_dot = omega_dot + qdd[j] * axes[j] + np.cross(omega, spin)
        omega = omega + spin
        previous_origin = origins[j]

        attachment = links.get(j)
        if attachment is None:
            forces.append(np.zeros(3))
            moments.append(np.zeros(3))
            coms.append(origins[j])
            continue

        rotation = frames[j][:3, :3]
        com = frames[j][:3, :3] @ attachment.com_local + origins[j]
        r = com - origins[j]
        com_accel = accel + np.cross(omega_dot, r) + np.cross(omega, np.cross(omega, r))
        inertia = rotation @ attachment.segment.inertia @ rotation.T

        forces.append(attachment.segment.m * com_accel)
        moments.append(inertia @ omega_dot + np.cross(omega, inertia @ omega))
        coms.append(com)

    # Backward pass: force and moment each link transmits to its parent
    f = -wrench.force
    m = -wrench.moment
    child_origin = hand
    tau = np.zeros(n)
    for j in reversed(range(n)):
        m = m + np.cross(child_origin - origins[j], f) + np.cross(coms[j] - origins[j], forces[j]) + moments[j]
        f = f + forces[j]
        child_origin = origins[j]
        tau[j] = axes[j] @ m

    return JointTorques(tau)


def static_joint_torques(
    chain: KinematicChain,
    q: PostureVector,
    wrench: Optional[ExternalWrench] = None,
    g: float = STANDARD_GRAVITY,
    segments: Optional[Sequence[SegmentAttachment]] = None,
    check: bool = True
) -> JointTorques:
    """
    Holding torques for a static posture.

    Args:
        chain: Kinematic chain with segment attachments
        q: Joint angles
        wrench: Wrench the environment applies at the hand
        g: Gravitational acceleration, m/s²
        segments: Override for the chain's attachments
        check: Enforce joint limits

    Returns:
        JointTorques
    """
    return inverse_dynamics(chain, q, wrench=wrench, g=g, segments=segments, check=check)
