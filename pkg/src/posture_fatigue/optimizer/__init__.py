"""Posture evaluation and working-distance optimisation."""

from posture_fatigue.optimizer.discomfort import (
    PENALTY_MAX,
    DiscomfortJoint,
    DiscomfortParams,
    discomfort_index,
    discomfort_terms,
    joint_discomfort,
    penalty_lower,
    penalty_upper,
)
from posture_fatigue.optimizer.objective import ObjectiveWeights, overall_objective, stress_index
from posture_fatigue.optimizer.sweep import (
    PARETO_COLUMNS,
    SWEEP_COLUMNS,
    PostureProblem,
    PosturePoint,
    SweepOptimum,
    SweepResult,
    distance_grid,
    pareto_scan,
    sweep_distance,
    weight_pairs,
)

__all__ = [
    "PARETO_COLUMNS",
    "PENALTY_MAX",
    "SWEEP_COLUMNS",
    "DiscomfortJoint",
    "DiscomfortParams",
    "ObjectiveWeights",
    "PostureProblem",
    "PosturePoint",
    "SweepOptimum",
    "SweepResult",
    "discomfort_index",
    "discomfort_terms",
    "distance_grid",
    "joint_discomfort",
    "overall_objective",
    "pareto_scan",
    "penalty_lower",
    "penalty_upper",
    "stress_index",
    "sweep_distance",
    "weight_pairs",
]
