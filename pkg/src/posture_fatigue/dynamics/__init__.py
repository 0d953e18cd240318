"""Inverse dynamics of the arm chain."""

from posture_fatigue.dynamics.newton_euler import (
    STANDARD_GRAVITY,
    ExternalWrench,
    JointTorques,
    inverse_dynamics,
    static_joint_torques,
)
from posture_fatigue.dynamics.oracle import torque_oracle_jacobian

__all__ = [
    "STANDARD_GRAVITY",
    "ExternalWrench",
    "JointTorques",
    "inverse_dynamics",
    "static_joint_torques",
    "torque_oracle_jacobian",
]
