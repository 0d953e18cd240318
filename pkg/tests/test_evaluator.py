"""Tests for the scenario evaluator."""

import logging

import numpy as np
import pytest

from conftest import SHOULDER_MEAN
from posture_fatigue.evaluator import (
    ENDURANCE_COLUMNS,
    REST_COLUMNS,
    TRAJECTORY_COLUMNS,
    UNITS_COLUMNS,
    PostureEvaluator,
    write_reports,
)
from posture_fatigue.exceptions import ScenarioError
from posture_fatigue.optimizer import PARETO_COLUMNS
from posture_fatigue.scenario import load_scenario


@pytest.fixture
def drill(scenario_dir):
    return PostureEvaluator(load_scenario(scenario_dir / "drill-2.5kg.json"))


@pytest.fixture
def reach(scenario_dir):
    return PostureEvaluator(load_scenario(scenario_dir / "drilling-reach.json"))


class TestEndurance:
    def test_tables(self, drill):
        joints, units = drill.endurance()
        assert list(joints.table.columns) == ENDURANCE_COLUMNS
        assert list(units.table.columns) == UNITS_COLUMNS
        assert len(joints) == 10
        assert units.name == "units"

    def test_mean_worker(self, drill):
        joints, units = drill.endurance([0])
        shoulder = joints.table[joints.table["joint"] == "shoulder_flexion"].iloc[0]
        assert shoulder["strength_Nm"] == pytest.approx(SHOULDER_MEAN)
        assert shoulder["endurance_s"] == pytest.approx(233.984, rel=0.005)
        assert shoulder["fatigue_index"] == pytest.approx(0.152, abs=0.002)
        assert units.table.iloc[0]["completable_units"] == 8
        assert units.table.iloc[0]["limiting_joint"] == "shoulder_flexion"

    def test_stronger_workers_last_longer(self, drill):
        joints, _ = drill.endurance()
        for _, rows in joints.table.groupby("joint"):
            assert np.all(np.diff(rows.sort_values("z")["endurance_s"]) > 0)

    def test_torques_from_dynamics_without_override(self, scenario_dir):
        scenario = load_scenario(scenario_dir / "drill-2.5kg.json")
        scenario.load_torques_Nm = None
        loads = PostureEvaluator(scenario).load_torques()
        assert loads["shoulder_flexion"] == pytest.approx(18.532, rel=0.05)
        assert loads["elbow_flexion"] > 0

    def test_unloaded_joint_warns(self, scenario_dir, caplog):
        scenario = load_scenario(scenario_dir / "drill-2.5kg.json")
        scenario.load_torques_Nm = {"shoulder_flexion": 20.0, "elbow_flexion": 0.0}
        with caplog.at_level(logging.WARNING):
            joints, _ = PostureEvaluator(scenario).endurance([0])
        assert "unbounded" in caplog.text
        assert np.isinf(joints.table["endurance_s"]).sum() == 1


class TestSchedule:
    def test_reports(self, drill):
        cycles, rest = drill.schedule()
        assert len(cycles) == 20
        assert list(rest.table.columns) == REST_COLUMNS
        assert cycles.summary["limiting_joint"] == "shoulder_flexion"
        assert cycles.summary["cumulative_fatigue"]

    def test_cumulative_fatigue_is_logged(self, drill, caplog):
        with caplog.at_level(logging.WARNING):
            drill.schedule()
        assert "cumulative fatigue" in caplog.text

    def test_needs_a_duty_cycle(self, drill):
        drill.scenario.duty_cycle = None
        with pytest.raises(ScenarioError) as excinfo:
            drill.schedule()
        assert excinfo.value.path == "duty_cycle"


class TestPostureSweep:
    def test_optimum_from_scenario_range(self, reach):
        (report,) = reach.posture_sweep()
        assert len(report) == 10
        assert 0.52 <= report.summary["optimum_distance_m"] <= 0.54
        assert report.summary["elbow_flexion_deg"] == pytest.approx(98.0, abs=3.0)

    def test_wider_override_keeps_the_optimum(self, reach):
        (shipped,) = reach.posture_sweep()
        (wide,) = reach.posture_sweep((0.45, 0.62), 0.01)
        assert len(wide) == 18
        assert wide.summary["optimum_distance_m"] == pytest.approx(shipped.summary["optimum_distance_m"], abs=1e-4)
        assert wide.summary["fatigue_norm"] == shipped.summary["fatigue_norm"]
        assert wide.summary["discomfort_norm"] == shipped.summary["discomfort_norm"]

    def test_range_override_and_pareto(self, reach):
        sweep, pareto = reach.posture_sweep((0.51, 0.55), 0.02, pareto=3)
        assert sweep.table["distance_m"].tolist() == pytest.approx([0.51, 0.53, 0.55])
        assert pareto.name == "pareto"
        assert list(pareto.table.columns) == PARETO_COLUMNS

    def test_needs_distance_mode(self, drill):
        with pytest.raises(ScenarioError) as excinfo:
            drill.posture_sweep((0.5, 0.6), 0.01)
        assert excinfo.value.path == "posture"

    def test_needs_a_range(self, reach):
        reach.scenario.sweep = None
        with pytest.raises(ScenarioError) as excinfo:
            reach.posture_sweep()
        assert excinfo.value.path == "sweep"


class TestTrajectory:
    def test_sampled_hold(self, drill):
        (report,) = drill.trajectory(duration_s=60.0, sample_s=10.0, percentiles=[0])
        assert list(report.table.columns) == TRAJECTORY_COLUMNS
        shoulder = report.table[report.table["joint"] == "shoulder_flexion"]
        assert shoulder["t_s"].tolist() == pytest.approx([0, 10, 20, 30, 40, 50, 60])
        assert np.all(np.diff(shoulder["gamma_cem_Nm"]) < 0)

    def test_default_duration_is_longest_endurance(self, drill):
        (report,) = drill.trajectory(sample_s=60.0, percentiles=[-2])
        assert report.summary["duration_s"] == pytest.approx(509.083, rel=0.005)

    def test_rejects_non_positive_duration(self, drill):
        with pytest.raises(ScenarioError):
            drill.trajectory(duration_s=0.0)


def test_write_reports_names_artifacts(drill, tmp_path):
    paths = write_reports(drill.endurance(), tmp_path, "drill-2.5kg", "endurance", "json")
    assert [p.name for p in paths] == ["drill-2.5kg_endurance.json", "drill-2.5kg_endurance_units.json"]
    assert all(p.exists() for p in paths)
