"""Tests for segment parameters."""

import numpy as np
import pytest

from posture_fatigue.anthropometry import (
    ARM_MASS_FRACTION,
    BodyParams,
    arm_segments,
    inertia_tensor,
    segment_params,
)
from posture_fatigue.exceptions import DomainError


def test_reference_body_segments(body):
    segments = arm_segments(body)
    upper, fore = segments["upper_arm"], segments["forearm"]
    assert upper.h == pytest.approx(0.3162)
    assert fore.h == pytest.approx(0.2482)
    assert upper.m + fore.m == pytest.approx(ARM_MASS_FRACTION * 70.0)
    assert upper.m > fore.m
    assert upper.r == pytest.approx(0.125 * upper.h)


def test_inertia_of_cylinder():
    inertia = inertia_tensor(2.0, 0.05, 0.3)
    transverse = 2.0 * 0.05 ** 2 / 4 + 2.0 * 0.3 ** 2 / 12
    np.testing.assert_allclose(np.diag(inertia), [transverse, transverse, 2.0 * 0.05 ** 2 / 2])
    assert np.count_nonzero(inertia - np.diag(np.diag(inertia))) == 0


def test_disc_limit():
    inertia = inertia_tensor(1.0, 0.1, 0.0)
    np.testing.assert_allclose(np.diag(inertia), [0.0025, 0.0025, 0.005])


def test_scaling_with_body(rng):
    for mass, height in zip(rng.uniform(40, 120, 1000), rng.uniform(1.4, 2.1, 1000)):
        segment = segment_params(BodyParams(M=mass, H=height), "forearm")
        assert segment.m == pytest.approx(0.451 * 0.051 * mass)
        assert segment.h == pytest.approx(0.146 * height)
        assert np.all(np.diag(segment.inertia) > 0)


@pytest.mark.parametrize("mass, height", [(0.0, 1.7), (70.0, 0.0), (-5.0, 1.7)])
def test_invalid_body(mass, height):
    with pytest.raises(DomainError):
        BodyParams(M=mass, H=height)


def test_invalid_inputs():
    with pytest.raises(DomainError):
        inertia_tensor(0.0, 0.1, 0.3)
    with pytest.raises(DomainError):
        segment_params(BodyParams(M=70.0, H=1.7), "hand")
