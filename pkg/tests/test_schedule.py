"""Tests for duty-cycle simulation, unit counting and rest recommendations."""

import math

import numpy as np
import pytest

from conftest import ELBOW_MEAN, SHOULDER_MEAN, TORQUES_2_5KG, TORQUES_3_5KG
from posture_fatigue.exceptions import DomainError
from posture_fatigue.fatigue import CapacityParams, decay_capacity
from posture_fatigue.schedule import (
    CYCLE_COLUMNS,
    DutyCycle,
    count_completable_units,
    recommend_rest,
    round_units,
    simulate_duty_cycle,
    steady_state_capacity,
)


SHOULDER = CapacityParams(gamma_max=SHOULDER_MEAN)
BOTH = {
    "shoulder_flexion": SHOULDER,
    "elbow_flexion": CapacityParams(gamma_max=ELBOW_MEAN),
}


def shoulder_cycle(rest_s, n_cycles=10, work_s=30.0):
    return DutyCycle(
        work_duration=work_s,
        rest_duration=rest_s,
        work_torque={"shoulder_flexion": TORQUES_3_5KG["shoulder_flexion"]},
        n_cycles=n_cycles,
    )


class TestDutyCycle:
    def test_first_cycle(self):
        report = simulate_duty_cycle({"shoulder_flexion": SHOULDER}, shoulder_cycle(30.0))
        first = report.cycles.iloc[0]
        assert list(report.cycles.columns) == CYCLE_COLUMNS
        assert first["cap_after_work_Nm"] == pytest.approx(63.310, abs=1e-3)
        assert first["cap_after_rest_Nm"] == pytest.approx(71.912, abs=1e-3)

    def test_equal_work_and_rest_accumulates(self):
        report = simulate_duty_cycle({"shoulder_flexion": SHOULDER}, shoulder_cycle(30.0))
        end_of_rest = report.end_of_rest("shoulder_flexion")
        np.testing.assert_allclose(end_of_rest[:3], [71.912, 70.977, 70.741], atol=1e-3)
        assert np.all(np.diff(end_of_rest) < 0)
        assert report.cumulative_fatigue["shoulder_flexion"]
        assert report.steady_state["shoulder_flexion"] == pytest.approx(70.662, abs=1e-3)
        assert end_of_rest[-1] == pytest.approx(report.steady_state["shoulder_flexion"], abs=1e-3)

    def test_double_rest_still_accumulates(self):
        report = simulate_duty_cycle({"shoulder_flexion": SHOULDER}, shoulder_cycle(60.0))
        assert report.cumulative_fatigue["shoulder_flexion"]
        assert report.steady_state["shoulder_flexion"] == pytest.approx(74.411, abs=1e-3)

    def test_long_rest_recovers_fully(self):
        report = simulate_duty_cycle({"shoulder_flexion": SHOULDER}, shoulder_cycle(600.0))
        assert not report.any_cumulative
        assert report.end_of_rest("shoulder_flexion")[-1] == pytest.approx(SHOULDER_MEAN, rel=1e-6)

    def test_steady_state_is_the_long_run_limit(self):
        cycle = shoulder_cycle(45.0, n_cycles=200)
        steady = steady_state_capacity(SHOULDER, TORQUES_3_5KG["shoulder_flexion"], cycle)
        report = simulate_duty_cycle({"shoulder_flexion": SHOULDER}, cycle)
        assert steady < SHOULDER_MEAN
        assert report.end_of_rest("shoulder_flexion")[-1] == pytest.approx(steady, rel=1e-9)

    def test_no_rest_is_allowed(self):
        report = simulate_duty_cycle({"shoulder_flexion": SHOULDER}, shoulder_cycle(0.0, n_cycles=3))
        rows = report.cycles
        np.testing.assert_allclose(rows["cap_after_rest_Nm"], rows["cap_after_work_Nm"])

    @pytest.mark.parametrize("joint", ["shoulder_flexion", "elbow_flexion"])
    def test_longer_rest_never_lowers_capacity(self, joint):
        rests = [0.0, 5.0, 15.0, 30.0, 60.0, 120.0]
        end_of_rest = np.array([
            simulate_duty_cycle(
                BOTH,
                DutyCycle(work_duration=30.0, rest_duration=rest, work_torque=TORQUES_3_5KG, n_cycles=10),
            ).end_of_rest(joint)
            for rest in rests
        ])
        assert np.all(np.diff(end_of_rest, axis=0) >= -1e-9)

    def test_cycle_start_times(self):
        report = simulate_duty_cycle(BOTH, DutyCycle(30.0, 60.0, TORQUES_3_5KG, n_cycles=4))
        shoulder = report.cycles[report.cycles["joint"] == "shoulder_flexion"]
        assert shoulder["t_start_s"].tolist() == [0.0, 90.0, 180.0, 270.0]
        assert len(report.cycles) == 8

    def test_limiting_joint_and_units(self):
        report = simulate_duty_cycle(BOTH, DutyCycle(30.0, 30.0, TORQUES_2_5KG))
        assert report.limiting_joint == "shoulder_flexion"
        assert report.completable_units == 8

    def test_unloaded_joints(self):
        report = simulate_duty_cycle(BOTH, DutyCycle(30.0, 30.0, {"shoulder_flexion": 0.0, "elbow_flexion": 0.0}))
        assert report.limiting_joint is None
        assert report.completable_units is None
        assert not report.any_cumulative

    def test_missing_torque(self):
        with pytest.raises(DomainError):
            simulate_duty_cycle(BOTH, shoulder_cycle(30.0))


class TestAbortedWork:
    def test_weak_member_fails_mid_phase(self):
        weak = CapacityParams(gamma_max=40.668)
        report = simulate_duty_cycle({"shoulder_flexion": weak}, shoulder_cycle(30.0, n_cycles=2, work_s=60.0))
        first = report.cycles.iloc[0]
        assert first["flag"] == "aborted"
        assert first["cap_after_work_Nm"] == pytest.approx(TORQUES_3_5KG["shoulder_flexion"])
        assert report.aborts[0].cycle == 1
        assert report.aborts[0].t_fail_s == pytest.approx(37.62, abs=0.01)

    def test_rest_includes_unfinished_work(self):
        weak = CapacityParams(gamma_max=40.668)
        load = TORQUES_3_5KG["shoulder_flexion"]
        report = simulate_duty_cycle({"shoulder_flexion": weak}, shoulder_cycle(30.0, n_cycles=1, work_s=60.0))
        t_fail_min = report.aborts[0].t_fail_s / 60
        rest_min = 0.5 + (1.0 - t_fail_min)
        expected = 40.668 + (load - 40.668) * math.exp(-weak.R * rest_min)
        assert report.cycles.iloc[0]["cap_after_rest_Nm"] == pytest.approx(expected)

    def test_load_above_strength_fails_at_once(self):
        weak = CapacityParams(gamma_max=20.0)
        report = simulate_duty_cycle({"shoulder_flexion": weak}, shoulder_cycle(30.0, n_cycles=1))
        assert report.aborts[0].t_fail_s == 0.0
        assert report.completable_units == 0


class TestUnits:
    @pytest.mark.parametrize("ratio, rounding, expected", [
        (7.8, "nearest", 8),
        (7.5, "nearest", 8),
        (7.49, "nearest", 7),
        (7.8, "floor", 7),
        (0.2, "nearest", 0),
    ])
    def test_round_units(self, ratio, rounding, expected):
        assert round_units(ratio, rounding) == expected

    def test_unknown_rounding(self):
        with pytest.raises(DomainError):
            round_units(1.0, "ceil")

    def test_heavier_tool_means_fewer_units(self):
        light = count_completable_units(BOTH, TORQUES_2_5KG, 30.0)
        heavy = count_completable_units(BOTH, TORQUES_3_5KG, 30.0)
        assert (light, heavy) == (8, 6)
        assert count_completable_units(BOTH, TORQUES_2_5KG, 30.0, rounding="floor") == 7

    def test_monotone_in_strength_load_and_duration(self, rng):
        for _ in range(200):
            strength = rng.uniform(60.0, 120.0, 2)
            params = {
                joint: CapacityParams(gamma_max=gamma_max)
                for joint, gamma_max in zip(BOTH, strength)
            }
            stronger = {joint: CapacityParams(gamma_max=p.gamma_max * 1.2) for joint, p in params.items()}
            scale = rng.uniform(0.2, 1.5)
            load = {joint: torque * scale for joint, torque in TORQUES_3_5KG.items()}
            heavier = {joint: torque * 1.3 for joint, torque in load.items()}
            duration = rng.uniform(5.0, 60.0)

            units = count_completable_units(params, load, duration)
            assert count_completable_units(stronger, load, duration) >= units
            assert count_completable_units(params, heavier, duration) <= units
            assert count_completable_units(params, load, duration * 1.5) <= units

    def test_unit_duration_must_be_positive(self):
        with pytest.raises(DomainError):
            count_completable_units(BOTH, TORQUES_2_5KG, 0.0)


class TestRecommendedRest:
    def test_after_one_work_unit(self):
        after_work = decay_capacity(SHOULDER, SHOULDER_MEAN, TORQUES_3_5KG["shoulder_flexion"], 0.5)
        assert recommend_rest(SHOULDER, after_work) == pytest.approx(69.75, abs=0.05)

    def test_already_recovered(self):
        assert recommend_rest(SHOULDER, SHOULDER_MEAN) == 0.0

    def test_stricter_target_needs_longer_rest(self):
        after_work = decay_capacity(SHOULDER, SHOULDER_MEAN, TORQUES_3_5KG["shoulder_flexion"], 0.5)
        assert recommend_rest(SHOULDER, after_work, p=0.999) > recommend_rest(SHOULDER, after_work, p=0.95)


class TestDutyCycleValidation:
    @pytest.mark.parametrize("work, rest, cycles", [(0.0, 30.0, 1), (30.0, -1.0, 1), (30.0, 30.0, 0)])
    def test_invalid(self, work, rest, cycles):
        with pytest.raises(DomainError):
            DutyCycle(work, rest, {"shoulder_flexion": 10.0}, n_cycles=cycles)

    def test_negative_torque(self):
        with pytest.raises(DomainError):
            DutyCycle(30.0, 30.0, {"shoulder_flexion": -1.0})
