"""
Segment masses, lengths and inertia tensors of the right arm.

Segments are modelled as uniform solid cylinders whose proportions follow
occupational-biomechanics anthropometry. The hand is folded into the forearm.
"""

from dataclasses import dataclass
from typing import Dict, Literal

import numpy as np

from posture_fatigue.exceptions import DomainError


SegmentName = Literal["upper_arm", "forearm"]

# Whole-arm mass as a fraction of body mass, and its split between segments
ARM_MASS_FRACTION = 0.051
MASS_SPLIT = {"upper_arm": 0.549, "forearm": 0.451}

# Segment length as a fraction of body height
LENGTH_FRACTION = {"upper_arm": 0.186, "forearm": 0.146}

# Segment radius as a fraction of segment length
RADIUS_FRACTION = 0.125

DEFAULT_COM_OFFSET = 0.5


@dataclass(frozen=True)
class BodyParams:
    """Whole-body mass (kg) and height (m)."""
    M: float
    H: float

    def __post_init__(self):
        if not self.M > 0:
            raise DomainError(f"Body mass must be positive, got {self.M}")
        if not self.H > 0:
            raise DomainError(f"Body height must be positive, got {self.H}")


@dataclass(frozen=True, eq=False)
class SegmentParams:
    """
    Dynamic parameters of one arm segment.

    Attributes:
        name: Segment name
        m: Mass, kg
        h: Length, m
        r: Radius, m
        inertia: 3x3 diagonal inertia tensor about the COM, kg·m², long axis along Z
        com_offset: COM position as a fraction of length from the proximal joint
    """
    name: str
    m: float
    h: float
    r: float
    inertia: np.ndarray
    com_offset: float = DEFAULT_COM_OFFSET

    def __post_init__(self):
        if self.m <= 0 or self.h <= 0 or self.r <= 0:
            raise DomainError(f"Segment {self.name} needs positive mass, length and radius")
        if not 0 <= self.com_offset <= 1:
            raise DomainError(f"com_offset must lie in [0, 1], got {self.com_offset}")


def inertia_tensor(m: float, r: float, h: float) -> np.ndarray:
    """
    Inertia tensor of a solid cylinder about its centre of mass.

    Args:
        m: Mass, kg
        r: Radius, m
        h: Length, m (0 gives the disc limit)

    Returns:
        diag(m·r²/4 + m·h²/12, m·r²/4 + m·h²/12, m·r²/2)
    """
    if m <= 0 or r <= 0 or h < 0:
        raise DomainError("Inertia needs positive mass and radius and non-negative length")
    transverse = m * r ** 2 / 4 + m * h ** 2 / 12
    return np.diag([transverse, transverse, m * r ** 2 / 2])


def segment_params(
    body: BodyParams,
    segment: SegmentName,
    com_offset: float = DEFAULT_COM_OFFSET
) -> SegmentParams:
    """
    Derive the parameters of one arm segment from body mass and height.

    Args:
        body: Whole-body parameters
        segment: "upper_arm" or "forearm" (hand included)
        com_offset: COM position as a fraction of length from the proximal joint

    Returns:
        SegmentParams with the inertia tensor filled in
    """
    if segment not in MASS_SPLIT:
        raise DomainError(f"Unknown segment: {segment}")

    m = MASS_SPLIT[segment] * ARM_MASS_FRACTION * body.M
    h = LENGTH_FRACTION[segment] * body.H
    r = RADIUS_FRACTION * h
    return SegmentParams(
        name=segment,
        m=m,
        h=h,
        r=r,
        inertia=inertia_tensor(m, r, h),
        com_offset=com_offset
    )


def arm_segments(body: BodyParams) -> Dict[str, SegmentParams]:
    """Both arm segments keyed by name."""
    return {name: segment_params(body, name) for name in ("upper_arm", "forearm")}
