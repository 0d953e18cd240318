"""Right-arm kinematics."""

from posture_fatigue.kinematics.chain import (
    ELBOW_JOINT,
    JOINT_NAMES,
    N_JOINTS,
    SHOULDER_JOINT,
    KinematicChain,
    PostureVector,
    SegmentAttachment,
    anatomical_flexion,
    build_right_arm,
    forward_kinematics,
    hand_position,
    posture_from_flexion,
)
from posture_fatigue.kinematics.dh import DHRow, dh_transform
from posture_fatigue.kinematics.ik import planar_flexion_for_point, sagittal_posture_for_distance

__all__ = [
    "ELBOW_JOINT",
    "JOINT_NAMES",
    "N_JOINTS",
    "SHOULDER_JOINT",
    "DHRow",
    "KinematicChain",
    "PostureVector",
    "SegmentAttachment",
    "anatomical_flexion",
    "build_right_arm",
    "dh_transform",
    "forward_kinematics",
    "hand_position",
    "planar_flexion_for_point",
    "posture_from_flexion",
    "sagittal_posture_for_distance",
]
