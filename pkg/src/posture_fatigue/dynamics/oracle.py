"""Static joint torques through numerically differentiated Jacobians."""

from typing import Optional, Sequence

import numpy as np

from posture_fatigue.dynamics.newton_euler import (
    STANDARD_GRAVITY,
    ExternalWrench,
    JointTorques,
)
from posture_fatigue.kinematics.chain import (
    KinematicChain,
    PostureVector,
    SegmentAttachment,
    forward_kinematics,
)

DEFAULT_STEP = 1e-6


def _points(chain, q, attachments):
    frames = forward_kinematics(chain, PostureVector(q), check=False)
    coms = [frames[a.link][:3, :3] @ a.com_local + frames[a.link][:3, 3] for a in attachments]
    return np.array(coms).reshape(-1, 3), frames[-1][:3, 3], frames[-1][:3, :3]


def _vee(skew: np.ndarray) -> np.ndarray:
    return np.array([skew[2, 1] - skew[1, 2], skew[0, 2] - skew[2, 0], skew[1, 0] - skew[0, 1]]) / 2


def torque_oracle_jacobian(
    chain: KinematicChain,
    q: PostureVector,
    wrench: Optional[ExternalWrench] = None,
    g: float = STANDARD_GRAVITY,
    segments: Optional[Sequence[SegmentAttachment]] = None,
    step: float = DEFAULT_STEP
) -> JointTorques:
    """
    Static torques by virtual work, τ = Σ J_cᵀ(-m·g) + J_handᵀ(-F) + J_ωᵀ(-M).

    Jacobians come from central differences of forward kinematics, so this
    shares nothing with the recursion beyond the chain geometry.
    """
    chain.check_limits(q)
    attachments = chain.attachments if segments is None else tuple(segments)
    wrench = ExternalWrench.zero() if wrench is None else wrench
    gravity = np.array([0.0, 0.0, -g])
    masses = np.array([a.segment.m for a in attachments])

    _, _, rotation = _points(chain, q.q, attachments)
    tau = np.zeros(chain.n_joints)
    for j in range(chain.n_joints):
        dq = np.zeros(chain.n_joints)
        dq[j] = step
        coms_plus, hand_plus, rot_plus = _points(chain, q.q + dq, attachments)
        coms_minus, hand_minus, rot_minus = _points(chain, q.q - dq, attachments)

        com_columns = (coms_plus - coms_minus) / (2 * step)
        hand_column = (hand_plus - hand_minus) / (2 * step)
        angular_column = _vee((rot_plus - rot_minus) / (2 * step) @ rotation.T)

        tau[j] = (
            np.sum(com_columns @ -gravity * masses)
            + hand_column @ -wrench.force
            + angular_column @ -wrench.moment
        )
    return JointTorques(tau)
