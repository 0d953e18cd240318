"""
Reproduction of the reference endurance table.

Recomputes every stored cell (endurance, fatigue index, completable work units
and recovery time, per load, joint and percentile) through the scenario
pipeline and compares it with the expected values in
data/reference_endurance.yaml.

Cell census over both loads, 70 cells in all:

    endurance_s    2 loads x 2 joints x 5 percentiles = 20
    fatigue_index  2 loads x 2 joints x 5 percentiles = 20
    holes          2 loads x 5 percentiles (limiting joint) = 10
    recovery_s     2 loads x 2 joints x 5 percentiles = 20

Endurance and fatigue index are usually quoted per load (10 each); they are
checked for both loads here. The source prints its four recovery rows as
shoulder, shoulder, elbow, elbow; they are stored and compared as shoulder
3.5 kg, elbow 3.5 kg, shoulder 2.5 kg, elbow 2.5 kg at p = 0.99.
"""

import logging
from dataclasses import dataclass
from importlib import resources
from typing import Any, Dict, List, Optional

import pandas as pd
import yaml

from posture_fatigue.anthropometry import BodyParams
from posture_fatigue.evaluator import PostureEvaluator
from posture_fatigue.exceptions import AcceptanceError
from posture_fatigue.fatigue.capacity import decay_capacity
from posture_fatigue.report import Report
from posture_fatigue.scenario import Scenario
from posture_fatigue.schedule import recommend_rest
from posture_fatigue.strength.grid import ConstantStrengthModel
from posture_fatigue.units import to_minutes

logger = logging.getLogger(__name__)

EXPECTED_FILE = "reference_endurance.yaml"

RESULT_COLUMNS = ["quantity", "load", "joint", "z", "expected", "computed", "difference", "tolerance", "passed"]


@dataclass(frozen=True)
class Cell:
    """One compared value."""
    quantity: str
    load: str
    joint: str
    z: int
    expected: float
    computed: float
    tolerance: float
    relative: bool = False

    @property
    def difference(self) -> float:
        return self.computed - self.expected

    @property
    def passed(self) -> bool:
        limit = self.tolerance * abs(self.expected) if self.relative else self.tolerance
        return abs(self.difference) <= limit + 1e-12

    def row(self) -> Dict[str, Any]:
        return {
            "quantity": self.quantity,
            "load": self.load,
            "joint": self.joint,
            "z": self.z,
            "expected": self.expected,
            "computed": self.computed,
            "difference": self.difference,
            "tolerance": f"{self.tolerance:g}{' rel' if self.relative else ''}",
            "passed": self.passed,
        }


@dataclass
class ReproductionResult:
    """Compared cells and the rendered report."""
    cells: List[Cell]
    report: Report
    failures: List[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def raise_for_failures(self) -> None:
        if self.failures:
            raise AcceptanceError(
                f"{len(self.failures)} reference check(s) out of tolerance", failures=self.failures
            )


def load_expected() -> Dict[str, Any]:
    """Packaged reference values."""
    text = resources.files("posture_fatigue").joinpath("data", EXPECTED_FILE).read_text(encoding="utf-8")
    return yaml.safe_load(text)


def _evaluator(expected: Dict[str, Any], load: Dict[str, Any], model: Dict[str, Any]) -> PostureEvaluator:
    body = expected["body"]
    scenario = Scenario(
        name="reference",
        body=BodyParams(M=body["mass_kg"], H=body["height_m"]),
        joint_angles_deg=list(expected["joint_angles_deg"]),
        load_torques_Nm=dict(load["torques_Nm"]),
        work_unit_s=float(expected["work_unit_s"]),
        percentiles=list(expected["percentiles"]),
        model=model,
    )
    strength = ConstantStrengthModel({
        joint: (values["mean_Nm"], values["sd_Nm"]) for joint, values in expected["strength"].items()
    })
    return PostureEvaluator(scenario, strength=strength)


def run_reproduction(
    expected: Optional[Dict[str, Any]] = None,
    fatigue_rate: Optional[float] = None
) -> ReproductionResult:
    """
    Recompute every reference cell.

    Args:
        expected: Reference values (the packaged file when None)
        fatigue_rate: Override of k, min⁻¹, for sensitivity checks

    Returns:
        ReproductionResult; call raise_for_failures() to turn failures into AcceptanceError
    """
    expected = load_expected() if expected is None else expected
    tolerances = expected["tolerances"]
    percentiles = list(expected["percentiles"])
    model: Dict[str, Any] = {"recovery_target": expected["recovery_target"], "rounding": "nearest"}
    if fatigue_rate is not None:
        model["fatigue_rate"] = fatigue_rate

    cells: List[Cell] = []
    for load_name, load in expected["loads"].items():
        evaluator = _evaluator(expected, load, model)
        endurance_report, units_report = evaluator.endurance(percentiles)
        table = endurance_report.table.set_index(["joint", "z"])

        for joint, values in load["endurance_s"].items():
            for z, value in zip(percentiles, values):
                cells.append(Cell("endurance_s", load_name, joint, z, value,
                                  float(table.loc[(joint, z), "endurance_s"]),
                                  tolerances["endurance_rel"], relative=True))

        for joint, values in load["fatigue_index"].items():
            for z, value in zip(percentiles, values):
                cells.append(Cell("fatigue_index", load_name, joint, z, value,
                                  float(table.loc[(joint, z), "fatigue_index"]),
                                  tolerances["fatigue_index_abs"]))

        units = units_report.table.set_index("z")
        for z, value in zip(percentiles, load["holes"]):
            cells.append(Cell("holes", load_name, "limiting", z, value,
                              float(units.loc[z, "completable_units"]),
                              tolerances["holes_abs"]))

        work_min = to_minutes(evaluator.scenario.work_unit_s)
        target = evaluator.config.recovery_target
        for z in percentiles:
            params = evaluator.capacity_params(z)
            for joint, values in load["recovery_s"].items():
                joint_params = params[joint]
                after_work = decay_capacity(joint_params, joint_params.gamma_max, load["torques_Nm"][joint], work_min)
                cells.append(Cell("recovery_s", load_name, joint, z, values[percentiles.index(z)],
                                  recommend_rest(joint_params, after_work, target),
                                  tolerances["recovery_abs_s"]))

    failures = [
        f"{c.quantity} {c.load} {c.joint} z={c.z:+d}: expected {c.expected:g}, got {c.computed:.6g}"
        for c in cells if not c.passed
    ]
    holes = [c for c in cells if c.quantity == "holes"]
    exact = sum(1 for c in holes if c.computed == c.expected)
    if exact < tolerances["holes_exact_min"]:
        failures.append(f"holes: only {exact} of {len(holes)} cells match exactly")

    counts = pd.Series([c.quantity for c in cells]).value_counts()
    summary = {
        "cells": len(cells),
        "endurance_cells": int(counts.get("endurance_s", 0)),
        "fatigue_index_cells": int(counts.get("fatigue_index", 0)),
        "holes_cells": int(counts.get("holes", 0)),
        "recovery_cells": int(counts.get("recovery_s", 0)),
        "holes_exact": exact,
        "failed": len(failures),
        "fatigue_rate": evaluator.config.fatigue_rate,
    }
    for failure in failures:
        logger.warning(failure)

    report = Report(
        title="Reference table reproduction",
        table=pd.DataFrame([c.row() for c in cells], columns=RESULT_COLUMNS),
        summary=summary,
        metadata={"scenario": "reference", "command": "reproduce"},
    )
    return ReproductionResult(cells=cells, report=report, failures=failures)
