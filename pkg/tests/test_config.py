"""Tests for the model configuration layer."""

import numpy as np
import pytest

from posture_fatigue.exceptions import ScenarioError
from posture_fatigue.kinematics import ELBOW_JOINT, JOINT_NAMES, SHOULDER_JOINT
from posture_fatigue.utils.config import load_defaults, load_model_config, merge_overrides


def test_defaults():
    config = load_model_config()
    assert config.fatigue_rate == 1.0
    assert config.recovery_rate == 2.4
    assert config.recovery_target == 0.99
    assert config.fatigue_index_mode == "linear"
    assert config.rounding == "nearest"
    assert config.discomfort_G == 1e6
    assert [j.name for j in config.joints] == list(JOINT_NAMES)


def test_joint_table_in_radians():
    config = load_model_config()
    limits = config.joint_limits_rad()
    assert limits.shape == (5, 2)
    np.testing.assert_allclose(limits[ELBOW_JOINT], np.radians([-145.0, 0.0]))
    np.testing.assert_allclose(config.neutral_rad(), 0.0)


def test_discomfort_params():
    params = load_model_config().discomfort_params()
    assert set(params.joints) == {SHOULDER_JOINT, ELBOW_JOINT}
    assert params.joints[ELBOW_JOINT].neutral == -30.0


def test_capacity_params_carry_rates():
    params = load_model_config({"fatigue_rate": 1.5}).capacity_params(75.0)
    assert (params.gamma_max, params.k, params.R) == (75.0, 1.5, 2.4)


def test_nested_override_keeps_siblings():
    config = load_model_config({"joints": {"elbow_flexion": {"upper_deg": -5.0}}})
    elbow = config.joints[ELBOW_JOINT]
    assert (elbow.lower_deg, elbow.upper_deg) == (-145.0, -5.0)


def test_new_discomfort_joint():
    config = load_model_config({
        "discomfort": {"joints": {
            "shoulder_abduction": {"lower_deg": -90.0, "upper_deg": 90.0, "neutral_deg": 0.0, "gamma": 0.5},
        }},
    })
    assert len(config.discomfort_params().joints) == 3


def test_round_trip_through_dict():
    config = load_model_config({"recovery_target": 0.95, "rounding": "floor"})
    assert load_model_config(config.to_dict()) == config


def test_merge_does_not_touch_base():
    base = load_defaults()
    merge_overrides(base, {"gravity": 0.0})
    assert base["gravity"] == 9.81


@pytest.mark.parametrize("overrides, path", [
    ({"fatigue_speed": 1.0}, "model.fatigue_speed"),
    ({"joints": {"wrist": {"lower_deg": 0.0}}}, "model.joints.wrist"),
    ({"fatigue_rate": 0.0}, "model.fatigue_rate"),
    ({"fatigue_rate": "fast"}, "model.fatigue_rate"),
    ({"recovery_target": 1.0}, "model.recovery_target"),
    ({"fatigue_index_mode": "quadratic"}, "model.fatigue_index_mode"),
    ({"rounding": "ceil"}, "model.rounding"),
    ({"joints": {"elbow_flexion": {"neutral_deg": 10.0}}}, "model.joints.elbow_flexion"),
    ({"discomfort": {"joints": {"wrist": {"gamma": 1.0}}}}, "model.discomfort.joints.wrist"),
    ({"discomfort": {"joints": {"shoulder_abduction": {"gamma": 1.0}}}}, "model.discomfort.joints.shoulder_abduction"),
    ({"joints": {"shoulder_flexion": {"lower_deg": "x"}}}, "model.joints.shoulder_flexion.lower_deg"),
    ({"joints": {"elbow_flexion": {"upper_deg": None}}}, "model.joints.elbow_flexion.upper_deg"),
    ({"joints": {"shoulder_flexion": 5}}, "model.joints.shoulder_flexion"),
    ({"joints": []}, "model.joints"),
    ({"discomfort": {"G": "big"}}, "model.discomfort.G"),
    ({"discomfort": {"G": 0.0}}, "model.discomfort.G"),
    ({"discomfort": {"joints": {"elbow_flexion": {"gamma": "x"}}}}, "model.discomfort.joints.elbow_flexion.gamma"),
    ({"discomfort": {"joints": {"elbow_flexion": {"gamma": -1.0}}}}, "model.discomfort.joints.elbow_flexion.gamma"),
    ({"discomfort": {"joints": {"elbow_flexion": {"neutral_deg": 5.0}}}}, "model.discomfort.joints.elbow_flexion"),
    ({"discomfort": {"joints": {"forearm_rotation": {"lower_deg": -90.0, "upper_deg": 90.0, "gamma": 1.0}}}},
     "model.discomfort.joints.forearm_rotation"),
    ({"discomfort": {"joints": {"forearm_rotation": "on"}}}, "model.discomfort.joints.forearm_rotation"),
])
def test_invalid_overrides(overrides, path):
    with pytest.raises(ScenarioError) as excinfo:
        load_model_config(overrides)
    assert excinfo.value.path == path


def test_overrides_must_be_a_mapping():
    with pytest.raises(ScenarioError):
        load_model_config(["fatigue_rate"])
