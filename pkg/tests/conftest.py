"""Shared fixtures and numerical helpers for the test suite."""

from importlib import resources
from pathlib import Path

import numpy as np
import pytest

from posture_fatigue.anthropometry import BodyParams
from posture_fatigue.dynamics.newton_euler import ExternalWrench
from posture_fatigue.kinematics.chain import build_right_arm
from posture_fatigue.optimizer.discomfort import DiscomfortParams
from posture_fatigue.optimizer.sweep import PostureProblem
from posture_fatigue.strength.grid import ConstantStrengthModel, GridStrengthModel


# Reference drilling task: 70 kg, 1.70 m worker
SHOULDER_MEAN, SHOULDER_SD = 75.620, 17.476
ELBOW_MEAN, ELBOW_SD = 75.141, 18.470
TORQUES_2_5KG = {"shoulder_flexion": 23.043, "elbow_flexion": 7.394}
TORQUES_3_5KG = {"shoulder_flexion": 26.873, "elbow_flexion": 9.672}
DRILL_OFFSET = (0.20, 0.17)
DRILL_REFERENCE = (0.51, 0.60, 0.01)


def rk4(rate, y0, t_end, step, checkpoints):
    """
    Classical fixed-step RK4, vectorised over the components of y0.

    Args:
        rate: f(y) -> dy/dt for an autonomous system
        y0: Initial state array
        t_end: Final time
        step: Step size
        checkpoints: Times at which to record the state (multiples of step)

    Returns:
        Array of shape (len(checkpoints), *y0.shape)
    """
    y = np.array(y0, dtype=float)
    marks = {int(round(t / step)): i for i, t in enumerate(checkpoints)}
    out = np.empty((len(checkpoints),) + y.shape)
    if 0 in marks:
        out[marks[0]] = y
    for n in range(1, int(round(t_end / step)) + 1):
        k1 = rate(y)
        k2 = rate(y + step / 2 * k1)
        k3 = rate(y + step / 2 * k2)
        k4 = rate(y + step * k3)
        y = y + step / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if n in marks:
            out[marks[n]] = y
    return out


@pytest.fixture
def body():
    return BodyParams(M=70.0, H=1.70)


@pytest.fixture
def chain(body):
    return build_right_arm(body)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def grid_model():
    return GridStrengthModel.builtin()


@pytest.fixture
def reference_strength():
    return ConstantStrengthModel({
        "shoulder_flexion": (SHOULDER_MEAN, SHOULDER_SD),
        "elbow_flexion": (ELBOW_MEAN, ELBOW_SD),
    })


@pytest.fixture
def drill_wrench():
    """Half of a 5 kg drill and half of the 49 N drilling reaction on the right hand."""
    return ExternalWrench.from_tool(tool_mass=5.0, force_magnitude=49.0)


@pytest.fixture
def drilling_problem(chain, drill_wrench, grid_model):
    return PostureProblem(
        chain=chain,
        wrench=drill_wrench,
        strength=grid_model,
        discomfort=DiscomfortParams.default(),
        tool_offset=DRILL_OFFSET,
        reference_range=DRILL_REFERENCE,
    )


@pytest.fixture
def scenario_dir():
    """Directory of the shipped scenarios."""
    with resources.as_file(resources.files("posture_fatigue").joinpath("data", "scenarios")) as path:
        yield Path(path)
