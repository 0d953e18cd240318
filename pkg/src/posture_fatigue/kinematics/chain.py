"""
Five-joint right-arm chain.

Base frame at the shoulder: x points anterior, z points up. Joints 1-3 are the
shoulder (flexion/extension, adduction/abduction, upper-arm rotation), joint 4
is elbow flexion/extension and joint 5 forearm pronation/supination. With every
joint variable at zero the arm hangs straight down.

Joints 1 and 4 rotate about the lateral axis; anatomical flexion of the
shoulder and elbow is the negative of q1 and q4.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from posture_fatigue.anthropometry import BodyParams, SegmentParams, arm_segments
from posture_fatigue.exceptions import DomainError, JointLimitError
from posture_fatigue.kinematics.dh import DHRow, dh_transform, translation_z

logger = logging.getLogger(__name__)

N_JOINTS = 5

JOINT_NAMES = (
    "shoulder_flexion",
    "shoulder_abduction",
    "upper_arm_rotation",
    "elbow_flexion",
    "forearm_rotation",
)

# Joint coordinates, degrees; bounds are inclusive
DEFAULT_LIMITS_DEG = (
    (-180.0, 45.0),
    (-90.0, 90.0),
    (-90.0, 90.0),
    (-145.0, 0.0),
    (-90.0, 90.0),
)
DEFAULT_NEUTRAL_DEG = (0.0, 0.0, 0.0, 0.0, 0.0)

# Links carrying a segment: frame 3 holds the upper arm, frame 5 the forearm
UPPER_ARM_LINK = 2
FOREARM_LINK = 4

SHOULDER_JOINT = 0
ELBOW_JOINT = 3

_LIMIT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PostureVector:
    """Joint angles q1..q5 in radians."""
    q: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.q, dtype=float).reshape(-1)
        if q.shape != (N_JOINTS,):
            raise DomainError(f"Posture needs {N_JOINTS} joint angles, got {q.size}")
        if not np.all(np.isfinite(q)):
            raise DomainError("Posture contains non-finite joint angles")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_degrees(cls, angles: Sequence[float]) -> "PostureVector":
        return cls(np.radians(np.asarray(angles, dtype=float)))

    def degrees(self) -> np.ndarray:
        return np.degrees(self.q)

    def __getitem__(self, index: int) -> float:
        return float(self.q[index])


@dataclass(frozen=True, eq=False)
class SegmentAttachment:
    """A segment rigidly attached to a link, with its COM in link coordinates."""
    link: int
    segment: SegmentParams
    com_local: np.ndarray


@dataclass(frozen=True, eq=False)
class KinematicChain:
    """
    Serial chain described by modified-DH rows.

    Attributes:
        rows: DH rows, one per joint
        limits: (n, 2) array of inclusive [lower, upper] bounds, rad
        neutral: Neutral joint angles, rad
        segment_lengths: (RL3, RL5) upper arm and forearm-plus-hand lengths, m
        end_effector: Fixed transform from the last joint frame to the hand
        attachments: Mass-carrying segments
    """
    rows: Tuple[DHRow, ...]
    limits: np.ndarray
    neutral: np.ndarray
    segment_lengths: Tuple[float, float]
    end_effector: np.ndarray = field(default_factory=lambda: np.eye(4))
    attachments: Tuple[SegmentAttachment, ...] = ()

    def __post_init__(self):
        limits = np.asarray(self.limits, dtype=float)
        neutral = np.asarray(self.neutral, dtype=float)
        n = len(self.rows)
        if limits.shape != (n, 2) or neutral.shape != (n,):
            raise DomainError("Limits and neutral angles must match the number of rows")
        if np.any(limits[:, 0] >= limits[:, 1]):
            raise DomainError("Each joint needs lower < upper")
        if np.any(neutral < limits[:, 0]) or np.any(neutral > limits[:, 1]):
            raise DomainError("Neutral angles must lie within the joint limits")
        object.__setattr__(self, "limits", limits)
        object.__setattr__(self, "neutral", neutral)

    @property
    def n_joints(self) -> int:
        return len(self.rows)

    @property
    def reach(self) -> float:
        return sum(self.segment_lengths)

    def violations(self, q: PostureVector) -> List[Tuple[int, float, float, float]]:
        """Offending joints as (index, value, lower, upper)."""
        lower, upper = self.limits[:, 0], self.limits[:, 1]
        bad = (q.q < lower - _LIMIT_TOL) | (q.q > upper + _LIMIT_TOL)
        return [(int(i), float(q.q[i]), float(lower[i]), float(upper[i])) for i in np.flatnonzero(bad)]

    def check_limits(self, q: PostureVector) -> None:
        """Raise JointLimitError listing every joint outside its bounds."""
        violations = self.violations(q)
        if violations:
            raise JointLimitError(violations)

    def within_limits(self, q: PostureVector) -> bool:
        return not self.violations(q)


def build_right_arm(
    body: BodyParams,
    limits: Optional[Sequence[Sequence[float]]] = None,
    neutral: Optional[Sequence[float]] = None
) -> KinematicChain:
    """
    Build the right-arm chain for a body.

    Args:
        body: Whole-body parameters
        limits: Per-joint (lower, upper) bounds in radians
        neutral: Per-joint neutral angles in radians

    Returns:
        KinematicChain with the upper arm and forearm attached
    """
    segments = arm_segments(body)
    upper_arm, forearm = segments["upper_arm"], segments["forearm"]
    rl3, rl5 = upper_arm.h, forearm.h

    half_pi = np.pi / 2
    rows = (
        DHRow(alpha=-half_pi, d=0.0, r=0.0, theta_offset=-half_pi),
        DHRow(alpha=-half_pi, d=0.0, r=0.0, theta_offset=-half_pi),
        DHRow(alpha=-half_pi, d=0.0, r=-rl3, theta_offset=-half_pi),
        DHRow(alpha=-half_pi, d=0.0, r=0.0, theta_offset=0.0),
        DHRow(alpha=half_pi, d=0.0, r=0.0, theta_offset=0.0),
    )

    # Frame 3 sits at the elbow with the shoulder at +RL3 on its z axis;
    # frame 5 sits at the elbow with the hand at -RL5.
    attachments = (
        SegmentAttachment(
            link=UPPER_ARM_LINK,
            segment=upper_arm,
            com_local=np.array([0.0, 0.0, rl3 * (1 - upper_arm.com_offset)]),
        ),
        SegmentAttachment(
            link=FOREARM_LINK,
            segment=forearm,
            com_local=np.array([0.0, 0.0, -rl5 * forearm.com_offset]),
        ),
    )

    chain = KinematicChain(
        rows=rows,
        limits=np.radians(DEFAULT_LIMITS_DEG) if limits is None else np.asarray(limits, dtype=float),
        neutral=np.radians(DEFAULT_NEUTRAL_DEG) if neutral is None else np.asarray(neutral, dtype=float),
        segment_lengths=(rl3, rl5),
        end_effector=translation_z(-rl5),
        attachments=attachments,
    )
    logger.debug(f"Built right arm with RL3={rl3:.4f} m, RL5={rl5:.4f} m")
    return chain


def forward_kinematics(
    chain: KinematicChain,
    q: PostureVector,
    check: bool = True
) -> List[np.ndarray]:
    """
    Cumulative frames of the chain.

    Args:
        chain: Kinematic chain
        q: Joint angles
        check: Enforce joint limits first

    Returns:
        One 4x4 base-frame transform per joint, followed by the hand frame
    """
    if check:
        chain.check_limits(q)

    frames = []
    transform = np.eye(4)
    for row, q_j in zip(chain.rows, q.q):
        transform = transform @ dh_transform(row, q_j)
        frames.append(transform)
    frames.append(transform @ chain.end_effector)
    return frames


def hand_position(chain: KinematicChain, q: PostureVector, check: bool = True) -> np.ndarray:
    return forward_kinematics(chain, q, check)[-1][:3, 3]


def anatomical_flexion(q: PostureVector) -> Tuple[float, float]:
    """(shoulder, elbow) anatomical flexion in degrees."""
    return -float(np.degrees(q.q[SHOULDER_JOINT])), -float(np.degrees(q.q[ELBOW_JOINT]))


def posture_from_flexion(shoulder_deg: float, elbow_deg: float) -> PostureVector:
    """Sagittal posture from anatomical flexion angles; other joints at zero."""
    q = np.zeros(N_JOINTS)
    q[SHOULDER_JOINT] = -np.radians(shoulder_deg)
    q[ELBOW_JOINT] = -np.radians(elbow_deg)
    return PostureVector(q)
