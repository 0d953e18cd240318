"""Evaluator orchestrating the scenario pipeline."""

import logging
import math
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from posture_fatigue.dynamics.newton_euler import ExternalWrench, static_joint_torques
from posture_fatigue.exceptions import ScenarioError
from posture_fatigue.fatigue.capacity import (
    CapacityParams,
    LoadSegment,
    endurance_time,
    fatigue_index,
)
from posture_fatigue.fatigue.trajectory import integrate_trajectory
from posture_fatigue.kinematics.chain import (
    KinematicChain,
    PostureVector,
    anatomical_flexion,
    build_right_arm,
)
from posture_fatigue.kinematics.ik import sagittal_posture_for_distance
from posture_fatigue.optimizer.objective import ObjectiveWeights
from posture_fatigue.optimizer.sweep import PostureProblem, pareto_scan, sweep_distance, weight_pairs
from posture_fatigue.registry import writer_registry
from posture_fatigue.report import Report
from posture_fatigue.scenario import Scenario
from posture_fatigue.schedule import (
    DutyCycle,
    count_completable_units,
    recommend_rest,
    simulate_duty_cycle,
)
from posture_fatigue.strength.base import STRENGTH_JOINTS, StrengthModel
from posture_fatigue.strength.grid import load_strength_model
from posture_fatigue.strength.population import PercentileSelector, percentile_strength, selectors
from posture_fatigue.units import to_minutes, to_seconds
from posture_fatigue.utils.config import ModelConfig, load_model_config
from posture_fatigue.utils.naming import get_output_path

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(levelname)s: %(message)s')
logger = logging.getLogger(__name__)

ENDURANCE_COLUMNS = ["joint", "z", "percentile", "load_Nm", "strength_Nm", "endurance_s", "fatigue_index"]
UNITS_COLUMNS = ["z", "percentile", "limiting_joint", "endurance_s", "completable_units"]
REST_COLUMNS = ["joint", "strength_Nm", "load_Nm", "cap_after_work_Nm", "recommended_rest_s", "steady_state_Nm", "cumulative_fatigue"]
TRAJECTORY_COLUMNS = ["t_s", "joint", "z", "gamma_cem_Nm", "load_Nm"]

DEFAULT_TRAJECTORY_SAMPLE_S = 1.0


class PostureEvaluator:
    """
    Main class for scenario evaluation.

    Orchestrates the pipeline: Scenario → posture → torques → strengths →
    fatigue/schedule/sweep → Report → Writer
    """

    def __init__(
        self,
        scenario: Scenario,
        config: Optional[ModelConfig] = None,
        strength: Optional[StrengthModel] = None
    ):
        """
        Initialize the evaluator for one scenario.

        Args:
            scenario: Validated scenario
            config: Model constants (defaults merged with the scenario's model block)
            strength: Strength provider (defaults to the scenario's reference)
        """
        self.scenario = scenario
        self.config = config or load_model_config(scenario.model)
        self.strength = strength or load_strength_model(scenario.strength_model, scenario.base_dir)
        self.chain: KinematicChain = build_right_arm(
            scenario.body,
            limits=self.config.joint_limits_rad(),
            neutral=self.config.neutral_rad(),
        )
        self.wrench = ExternalWrench.from_tool(
            tool_mass=scenario.tool_mass_kg,
            force_magnitude=scenario.force_magnitude_N,
            force_direction=scenario.force_direction,
            split=scenario.load_split_factor,
            g=self.config.gravity,
        )

    def posture(self) -> PostureVector:
        """Working posture: the explicit joint angles or the sagittal IK solution."""
        if self.scenario.is_distance_mode:
            return sagittal_posture_for_distance(
                self.chain, self.scenario.distance_m, self.scenario.tool_tip_offset_m
            )
        posture = PostureVector.from_degrees(self.scenario.joint_angles_deg)
        self.chain.check_limits(posture)
        return posture

    def load_torques(self, posture: Optional[PostureVector] = None) -> Dict[str, float]:
        """Flexion load per joint, N·m; the scenario's reference torques win when given."""
        if self.scenario.load_torques_Nm is not None:
            return dict(self.scenario.load_torques_Nm)
        posture = self.posture() if posture is None else posture
        torques = static_joint_torques(self.chain, posture, self.wrench, self.config.gravity)
        shoulder, elbow = torques.flexion_loads()
        return {"shoulder_flexion": float(shoulder), "elbow_flexion": float(elbow)}

    def strengths(self, posture: Optional[PostureVector] = None) -> Dict[str, Tuple[float, float]]:
        """(mean, sd) strength per joint at the working posture."""
        posture = self.posture() if posture is None else posture
        shoulder_deg, elbow_deg = anatomical_flexion(posture)
        result = {}
        for joint in STRENGTH_JOINTS:
            entry = self.strength.lookup(joint, shoulder_deg, elbow_deg)
            result[joint] = (entry.mean, entry.sd)
        return result

    def capacity_params(self, z: int, posture: Optional[PostureVector] = None) -> Dict[str, CapacityParams]:
        """Per-joint capacity parameters of the population member z sd from the mean."""
        return {
            joint: self.config.capacity_params(percentile_strength(mean, sd, z))
            for joint, (mean, sd) in self.strengths(posture).items()
        }

    def _metadata(self, command: str) -> Dict[str, str]:
        return {
            "scenario": self.scenario.name,
            "command": command,
            "strength_model": self.strength.description,
        }

    def _percentiles(self, percentiles: Optional[Sequence[int]]) -> List[PercentileSelector]:
        return selectors(self.scenario.percentiles if percentiles is None else percentiles)

    def endurance(self, percentiles: Optional[Sequence[int]] = None) -> List[Report]:
        """
        Endurance time and fatigue index per joint and percentile.

        Returns:
            The per-joint table and the per-percentile work-unit table
        """
        posture = self.posture()
        loads = self.load_torques(posture)
        work_unit_min = to_minutes(self.scenario.work_unit_s)

        rows = []
        unit_rows = []
        for selector in self._percentiles(percentiles):
            params = self.capacity_params(selector.z, posture)
            for joint, joint_params in params.items():
                load = loads[joint]
                endurance_s = to_seconds(endurance_time(joint_params, load))
                if endurance_s == 0:
                    logger.warning(f"{joint} ({selector.label}): load {load:.3f} N·m is not sustainable at all")
                elif math.isinf(endurance_s):
                    logger.warning(f"{joint} ({selector.label}): unloaded, endurance is unbounded")
                rows.append({
                    "joint": joint,
                    "z": selector.z,
                    "percentile": selector.label,
                    "load_Nm": load,
                    "strength_Nm": float(joint_params.gamma_max),
                    "endurance_s": endurance_s,
                    "fatigue_index": fatigue_index(
                        joint_params,
                        [LoadSegment.work(load, work_unit_min)],
                        mode=self.config.fatigue_index_mode,
                    ),
                })

            joint_rows = [r for r in rows if r["z"] == selector.z]
            limiting = min(joint_rows, key=lambda r: r["endurance_s"])
            units = count_completable_units(params, loads, self.scenario.work_unit_s, self.config.rounding)
            unit_rows.append({
                "z": selector.z,
                "percentile": selector.label,
                "limiting_joint": limiting["joint"] if units is not None else None,
                "endurance_s": limiting["endurance_s"],
                "completable_units": units,
            })

        shoulder_deg, elbow_deg = anatomical_flexion(posture)
        summary = {
            "shoulder_flexion_deg": shoulder_deg,
            "elbow_flexion_deg": elbow_deg,
            "shoulder_load_Nm": loads["shoulder_flexion"],
            "elbow_load_Nm": loads["elbow_flexion"],
            "work_unit_s": self.scenario.work_unit_s,
            "fatigue_index_mode": self.config.fatigue_index_mode,
            "rounding": self.config.rounding,
        }
        return [
            Report(
                title=f"Endurance: {self.scenario.name}",
                table=pd.DataFrame(rows, columns=ENDURANCE_COLUMNS),
                summary=summary,
                metadata=self._metadata("endurance"),
            ),
            Report(
                title=f"Completable work units: {self.scenario.name}",
                table=pd.DataFrame(unit_rows, columns=UNITS_COLUMNS),
                metadata=self._metadata("endurance"),
                name="units",
            ),
        ]

    def schedule(self) -> List[Report]:
        """Duty-cycle simulation with the per-cycle table and recommended rests."""
        schedule_cfg = self.scenario.duty_cycle
        if schedule_cfg is None:
            raise ScenarioError("Scenario has no duty cycle", path="duty_cycle")

        posture = self.posture()
        loads = self.load_torques(posture)
        params = self.capacity_params(schedule_cfg.percentile, posture)
        duty = DutyCycle(
            work_duration=schedule_cfg.work_s,
            rest_duration=schedule_cfg.rest_s,
            work_torque=loads,
            n_cycles=schedule_cfg.n_cycles,
        )
        report = simulate_duty_cycle(params, duty, self.config.cumulative_tolerance, self.config.rounding)

        for abort in report.aborts:
            logger.warning(f"{abort.joint}: work phase {abort.cycle} aborted at {abort.t_fail_s:.2f} s")
        for joint, flagged in report.cumulative_fatigue.items():
            if flagged:
                logger.warning(f"{joint}: rest of {schedule_cfg.rest_s:g} s leaves cumulative fatigue")

        rest_rows = []
        for joint, joint_params in params.items():
            first = report.cycles[(report.cycles["joint"] == joint) & (report.cycles["cycle"] == 1)].iloc[0]
            after_work = float(first["cap_after_work_Nm"])
            rest_rows.append({
                "joint": joint,
                "strength_Nm": float(joint_params.gamma_max),
                "load_Nm": loads[joint],
                "cap_after_work_Nm": after_work,
                "recommended_rest_s": recommend_rest(joint_params, after_work, self.config.recovery_target),
                "steady_state_Nm": report.steady_state[joint],
                "cumulative_fatigue": report.cumulative_fatigue[joint],
            })

        summary = {
            "percentile": PercentileSelector(schedule_cfg.percentile).label,
            "work_s": schedule_cfg.work_s,
            "rest_s": schedule_cfg.rest_s,
            "n_cycles": schedule_cfg.n_cycles,
            "recovery_target": self.config.recovery_target,
            "limiting_joint": report.limiting_joint,
            "completable_units": report.completable_units,
            "cumulative_fatigue": report.any_cumulative,
            "aborted_work_phases": len(report.aborts),
        }
        return [
            Report(
                title=f"Duty cycle: {self.scenario.name}",
                table=report.cycles,
                summary=summary,
                metadata=self._metadata("schedule"),
            ),
            Report(
                title=f"Recommended rest: {self.scenario.name}",
                table=pd.DataFrame(rest_rows, columns=REST_COLUMNS),
                metadata=self._metadata("schedule"),
                name="rest",
            ),
        ]

    def posture_problem(self) -> PostureProblem:
        """Reaching task normalised over the scenario's sweep block, when it has one."""
        sweep = self.scenario.sweep
        return PostureProblem(
            chain=self.chain,
            wrench=self.wrench,
            strength=self.strength,
            discomfort=self.config.discomfort_params(),
            tool_offset=tuple(self.scenario.tool_tip_offset_m),
            gravity=self.config.gravity,
            reference_range=None if sweep is None else (sweep.start_m, sweep.stop_m, sweep.step_m),
        )

    def posture_sweep(
        self,
        distance_range: Optional[Tuple[float, float]] = None,
        step: Optional[float] = None,
        pareto: Optional[int] = None
    ) -> List[Report]:
        """
        Working-distance sweep and optimum.

        Args:
            distance_range: (start, stop) in metres; defaults to the scenario's sweep block
            step: Grid step in metres; defaults to the scenario's sweep block
            pareto: Number of weight pairs for an additional trade-off scan
        """
        if not self.scenario.is_distance_mode:
            raise ScenarioError("The posture sweep needs a distance-mode scenario", path="posture")
        sweep = self.scenario.sweep
        if distance_range is None or step is None:
            if sweep is None:
                raise ScenarioError("No sweep range given", path="sweep")
            distance_range = distance_range or (sweep.start_m, sweep.stop_m)
            step = step or sweep.step_m

        problem = self.posture_problem()
        result = sweep_distance(
            problem,
            distance_range,
            step,
            weights=ObjectiveWeights(w1=self.scenario.w1, w2=self.scenario.w2),
            tolerance=self.config.refine_tolerance,
        )
        optimum = result.optimum
        shoulder_deg, elbow_deg = optimum.flexion_deg
        summary = {
            "optimum_distance_m": optimum.distance,
            "shoulder_flexion_deg": shoulder_deg,
            "elbow_flexion_deg": elbow_deg,
            "objective": optimum.objective,
            "stress_index": optimum.stress,
            "discomfort": optimum.discomfort,
            "refined": optimum.refined,
            "w1": result.weights.w1,
            "w2": result.weights.w2,
            "fatigue_norm": result.weights.fatigue_norm,
            "discomfort_norm": result.weights.discomfort_norm,
        }
        reports = [
            Report(
                title=f"Posture sweep: {self.scenario.name}",
                table=result.table,
                summary=summary,
                metadata=self._metadata("posture"),
            )
        ]
        if pareto:
            table = pareto_scan(
                problem,
                result.table["distance_m"].to_numpy(),
                weight_pairs(pareto),
                tolerance=self.config.refine_tolerance,
            )
            reports.append(
                Report(
                    title=f"Stress/discomfort trade-off: {self.scenario.name}",
                    table=table,
                    metadata=self._metadata("posture"),
                    name="pareto",
                )
            )
        return reports

    def trajectory(
        self,
        duration_s: Optional[float] = None,
        sample_s: float = DEFAULT_TRAJECTORY_SAMPLE_S,
        percentiles: Optional[Sequence[int]] = None
    ) -> List[Report]:
        """
        Strength during continuous holding, per joint and percentile.

        Args:
            duration_s: Holding time; defaults to the longest finite endurance
            sample_s: Sampling step, s
            percentiles: z values; defaults to the scenario's
        """
        posture = self.posture()
        loads = self.load_torques(posture)
        chosen = self._percentiles(percentiles)
        params_by_z = {s.z: self.capacity_params(s.z, posture) for s in chosen}

        if duration_s is None:
            finite = [
                to_seconds(endurance_time(p, loads[joint]))
                for params in params_by_z.values()
                for joint, p in params.items()
            ]
            finite = [t for t in finite if 0 < t < math.inf]
            duration_s = max(finite) if finite else self.scenario.work_unit_s
        if duration_s <= 0:
            raise ScenarioError(f"Trajectory duration must be positive, got {duration_s}")

        rows = []
        for selector in chosen:
            for joint, joint_params in params_by_z[selector.z].items():
                states = integrate_trajectory(
                    joint_params,
                    [LoadSegment.work(loads[joint], to_minutes(duration_s))],
                    to_minutes(sample_s),
                    mode=self.config.fatigue_index_mode,
                )
                rows.extend(
                    {
                        "t_s": to_seconds(state.t),
                        "joint": joint,
                        "z": selector.z,
                        "gamma_cem_Nm": state.gamma_cem,
                        "load_Nm": loads[joint],
                    }
                    for state in states
                )

        return [
            Report(
                title=f"Strength trajectory: {self.scenario.name}",
                table=pd.DataFrame(rows, columns=TRAJECTORY_COLUMNS),
                summary={"duration_s": duration_s, "sample_s": sample_s},
                metadata=self._metadata("trajectory"),
            )
        ]


def write_reports(
    reports: Sequence[Report],
    out_dir: Path,
    scenario_name: str,
    command: str,
    target_format: str = "csv"
) -> List[Path]:
    """
    Write every report of a command.

    Returns:
        List of output file paths
    """
    writer = writer_registry.create(target_format)
    output_paths = []
    for report in reports:
        output_path = get_output_path(out_dir, scenario_name, command, writer.extension, suffix=report.name or "")
        writer.write(report, output_path)
        logger.info(f"Wrote {command} report: {output_path}")
        output_paths.append(output_path)
    return output_paths
