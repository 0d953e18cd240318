"""Modified Denavit-Hartenberg parameters and transforms."""

from dataclasses import dataclass

import numpy as np

from posture_fatigue.exceptions import DomainError


REVOLUTE = 0


@dataclass(frozen=True)
class DHRow:
    """
    One row of a modified-DH table.

    Attributes:
        alpha: Twist about the previous x axis, rad
        d: Offset along the previous x axis, m
        r: Offset along the new z axis, m
        theta_offset: Constant added to the joint variable, rad
        sigma: Joint kind (0 = revolute)
    """
    alpha: float
    d: float
    r: float
    theta_offset: float = 0.0
    sigma: int = REVOLUTE

    def __post_init__(self):
        if self.sigma != REVOLUTE:
            raise DomainError("Only revolute joints are supported")


def dh_transform(row: DHRow, q_j: float) -> np.ndarray:
    """
    Homogeneous transform from frame j-1 to frame j.

    Composes Rx(alpha) · Tx(d) · Rz(theta) · Tz(r) with theta = q_j + theta_offset.
    The translation column is (d, -r·sin(alpha), r·cos(alpha)), so the new
    origin lies at distance r along the new z axis.

    Args:
        row: DH parameters of joint j
        q_j: Joint variable, rad

    Returns:
        4x4 transform
    """
    theta = q_j + row.theta_offset
    ct, st = np.cos(theta), np.sin(theta)
    ca, sa = np.cos(row.alpha), np.sin(row.alpha)
    return np.array([
        [ct, -st, 0.0, row.d],
        [ca * st, ca * ct, -sa, -row.r * sa],
        [sa * st, sa * ct, ca, row.r * ca],
        [0.0, 0.0, 0.0, 1.0],
    ])


def translation_z(r: float) -> np.ndarray:
    """Pure translation along the local z axis."""
    transform = np.eye(4)
    transform[2, 3] = r
    return transform
