"""
Working-distance sweep for a sagittal reaching task.

For every candidate distance the arm posture comes from sagittal inverse
kinematics; the holding torques, the stress index over the population band and
the discomfort are evaluated there, and the weighted objective picks the best
distance. The grid minimum is refined by a golden-section search between its
neighbours, keeping the grid normalisers.

The normalisers are the maxima of stress and discomfort over the task's
reference distances when the problem declares them, so widening or narrowing
the swept range moves the evaluation window but not the objective itself.
Without reference distances the swept grid normalises its own objective.
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.optimize import minimize_scalar

from posture_fatigue.dynamics.newton_euler import (
    STANDARD_GRAVITY,
    ExternalWrench,
    JointTorques,
    static_joint_torques,
)
from posture_fatigue.exceptions import DomainError
from posture_fatigue.kinematics.chain import (
    ELBOW_JOINT,
    SHOULDER_JOINT,
    KinematicChain,
    PostureVector,
    anatomical_flexion,
)
from posture_fatigue.kinematics.ik import sagittal_posture_for_distance
from posture_fatigue.optimizer.discomfort import DiscomfortParams, discomfort_terms
from posture_fatigue.optimizer.objective import ObjectiveWeights, overall_objective, stress_index
from posture_fatigue.strength.base import StrengthModel
from posture_fatigue.strength.population import percentile_strength

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    "distance_m",
    "q1_deg",
    "q4_deg",
    "stress_mean",
    "stress_lo",
    "stress_hi",
    "discomfort_shoulder",
    "discomfort_elbow",
    "discomfort_total",
    "objective",
]

PARETO_COLUMNS = ["w1", "w2", "distance_m", "q1_deg", "q4_deg", "stress_mean", "discomfort_total", "objective"]

DEFAULT_REFINE_TOLERANCE = 1e-6

_GRID_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class PosturePoint:
    """Everything evaluated at one working distance."""
    distance: float
    posture: PostureVector
    torques: JointTorques
    stress_mean: float
    stress_lo: float
    stress_hi: float
    discomfort_shoulder: float
    discomfort_elbow: float

    @property
    def discomfort_total(self) -> float:
        return self.discomfort_shoulder + self.discomfort_elbow

    @property
    def flexion_deg(self) -> Tuple[float, float]:
        return anatomical_flexion(self.posture)

    def row(self) -> Dict[str, float]:
        shoulder, elbow = self.flexion_deg
        return {
            "distance_m": self.distance,
            "q1_deg": shoulder,
            "q4_deg": elbow,
            "stress_mean": self.stress_mean,
            "stress_lo": self.stress_lo,
            "stress_hi": self.stress_hi,
            "discomfort_shoulder": self.discomfort_shoulder,
            "discomfort_elbow": self.discomfort_elbow,
            "discomfort_total": self.discomfort_total,
        }


@dataclass(frozen=True, eq=False)
class PostureProblem:
    """
    A sagittal reaching task.

    Attributes:
        chain: Right-arm chain
        wrench: Hand wrench of the tool
        strength: Strength provider
        discomfort: Discomfort parameters
        tool_offset: Working point relative to the hand, (forward, up), m
        gravity: m/s²
        band_z: Half-width of the population band in standard deviations
        reference_range: (start, stop, step) in metres of the distances that
            normalise the objective, or None to normalise over each sweep
    """
    chain: KinematicChain
    wrench: ExternalWrench
    strength: StrengthModel
    discomfort: DiscomfortParams
    tool_offset: Tuple[float, float] = (0.0, 0.0)
    gravity: float = STANDARD_GRAVITY
    band_z: int = 2
    reference_range: Optional[Tuple[float, float, float]] = None

    def posture(self, distance: float) -> PostureVector:
        return sagittal_posture_for_distance(self.chain, distance, self.tool_offset)

    def evaluate(self, distance: float) -> PosturePoint:
        posture = self.posture(distance)
        torques = static_joint_torques(self.chain, posture, self.wrench, self.gravity)
        shoulder_deg, elbow_deg = anatomical_flexion(posture)

        entries = [
            self.strength.lookup(joint, shoulder_deg, elbow_deg)
            for joint in ("shoulder_flexion", "elbow_flexion")
        ]
        means = np.array([e.mean for e in entries])
        sds = np.array([e.sd for e in entries])

        terms = discomfort_terms(posture, self.discomfort)
        return PosturePoint(
            distance=float(distance),
            posture=posture,
            torques=torques,
            stress_mean=stress_index(torques, means),
            stress_lo=stress_index(torques, percentile_strength(means, sds, self.band_z)),
            stress_hi=stress_index(torques, percentile_strength(means, sds, -self.band_z)),
            discomfort_shoulder=terms.get(SHOULDER_JOINT, 0.0),
            discomfort_elbow=terms.get(ELBOW_JOINT, 0.0),
        )

    def normalize(self, weights: ObjectiveWeights, points: Sequence[PosturePoint]) -> ObjectiveWeights:
        """Weights with normalisers from the reference distances, or from `points` without them."""
        if self.reference_range is not None:
            points = [self.evaluate(d) for d in distance_grid(*self.reference_range)]
        return weights.normalized_over(
            [p.stress_mean for p in points],
            [p.discomfort_total for p in points],
        )


@dataclass(frozen=True, eq=False)
class SweepOptimum:
    """Best working distance found by a sweep."""
    distance: float
    posture: PostureVector
    objective: float
    stress: float
    discomfort: float
    refined: bool

    @property
    def flexion_deg(self) -> Tuple[float, float]:
        return anatomical_flexion(self.posture)


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Sweep table in SWEEP_COLUMNS order plus the optimum."""
    table: pd.DataFrame
    optimum: SweepOptimum
    weights: ObjectiveWeights


def distance_grid(start: float, stop: float, step: float) -> np.ndarray:
    """Evenly spaced distances from start to stop inclusive."""
    if step <= 0:
        raise DomainError(f"Sweep step must be positive, got {step}")
    if stop < start:
        raise DomainError(f"Sweep range is empty: [{start}, {stop}]")
    # floor keeps the last point at or below stop
    count = int(np.floor((stop - start) / step + _GRID_EPS))
    return start + step * np.arange(count + 1)


def _optimize(
    problem: PostureProblem,
    points: Sequence[PosturePoint],
    weights: ObjectiveWeights,
    refine: bool,
    tolerance: float
) -> Tuple[np.ndarray, SweepOptimum]:
    stress = np.array([p.stress_mean for p in points])
    discomfort = np.array([p.discomfort_total for p in points])
    objective = overall_objective(stress, discomfort, weights)

    # argmin returns the first minimum, so ties go to the smaller distance
    best = int(np.argmin(objective))
    point = points[best]
    optimum = SweepOptimum(
        distance=point.distance,
        posture=point.posture,
        objective=float(objective[best]),
        stress=point.stress_mean,
        discomfort=point.discomfort_total,
        refined=False,
    )

    if refine and 0 < best < len(points) - 1:
        def evaluate(distance: float) -> float:
            candidate = problem.evaluate(distance)
            return overall_objective(candidate.stress_mean, candidate.discomfort_total, weights)

        bracket = (points[best - 1].distance, point.distance, points[best + 1].distance)
        try:
            result = minimize_scalar(evaluate, bracket=bracket, method="golden", tol=tolerance)
        except ValueError:
            # Flat neighbourhood: the grid values do not bracket a minimum
            return objective, optimum
        if bracket[0] <= result.x <= bracket[2] and result.fun < optimum.objective:
            refined = problem.evaluate(float(result.x))
            optimum = SweepOptimum(
                distance=refined.distance,
                posture=refined.posture,
                objective=float(result.fun),
                stress=refined.stress_mean,
                discomfort=refined.discomfort_total,
                refined=True,
            )
            logger.debug(f"Refined optimum {point.distance:.4f} m -> {refined.distance:.6f} m")

    return objective, optimum


def sweep_distance(
    problem: PostureProblem,
    distance_range: Tuple[float, float],
    step: float,
    weights: Optional[ObjectiveWeights] = None,
    refine: bool = True,
    tolerance: float = DEFAULT_REFINE_TOLERANCE
) -> SweepResult:
    """
    Evaluate a range of working distances and find the best one.

    Args:
        problem: Reaching task
        distance_range: (start, stop) in metres, inclusive
        step: Grid step, m
        weights: Objective weights (default w1 = w2 = 1)
        refine: Refine the grid minimum by golden-section search
        tolerance: Relative tolerance of the refinement

    Returns:
        SweepResult with the table in SWEEP_COLUMNS order
    """
    weights = ObjectiveWeights() if weights is None else weights
    distances = distance_grid(*distance_range, step)
    points = [problem.evaluate(d) for d in distances]

    weights = problem.normalize(weights, points)
    objective, optimum = _optimize(problem, points, weights, refine, tolerance)

    table = pd.DataFrame([p.row() for p in points])
    table["objective"] = objective
    logger.debug(f"Swept {len(points)} distances, optimum at {optimum.distance:.4f} m")
    return SweepResult(table=table[SWEEP_COLUMNS], optimum=optimum, weights=weights)


def weight_pairs(count: int) -> List[Tuple[float, float]]:
    """`count` weight pairs from pure discomfort (0, 1) to pure fatigue (1, 0)."""
    if count < 2:
        raise DomainError(f"A Pareto scan needs at least 2 weight pairs, got {count}")
    return [(float(w1), float(1 - w1)) for w1 in np.linspace(0.0, 1.0, count)]


def pareto_scan(
    problem: PostureProblem,
    distances: Iterable[float],
    pairs: Sequence[Tuple[float, float]],
    refine: bool = True,
    tolerance: float = DEFAULT_REFINE_TOLERANCE
) -> pd.DataFrame:
    """
    Optimum distance for each weight pair over a common set of distances.

    Every pair shares the same normalisers, so the rows trace the trade-off
    between stress and discomfort at the optimum.

    Returns:
        DataFrame in PARETO_COLUMNS order, one row per weight pair

    Raises:
        DomainError: No distances to scan
    """
    points = [problem.evaluate(d) for d in distances]
    if not points:
        raise DomainError("Pareto scan needs at least one distance")
    reference = problem.normalize(ObjectiveWeights(), points)

    rows = []
    for w1, w2 in pairs:
        weights = replace(reference, w1=w1, w2=w2)
        _, optimum = _optimize(problem, points, weights, refine, tolerance)
        shoulder, elbow = optimum.flexion_deg
        rows.append({
            "w1": w1,
            "w2": w2,
            "distance_m": optimum.distance,
            "q1_deg": shoulder,
            "q4_deg": elbow,
            "stress_mean": optimum.stress,
            "discomfort_total": optimum.discomfort,
            "objective": optimum.objective,
        })
    logger.debug(f"Pareto scan over {len(pairs)} weight pairs")
    return pd.DataFrame(rows, columns=PARETO_COLUMNS)
