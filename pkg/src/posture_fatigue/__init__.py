"""
Posture Fatigue - Joint-level fatigue and posture evaluation for manual tasks.

Evaluates a static working posture of the right arm: holding torques from a
modified Denavit-Hartenberg chain and Newton-Euler dynamics, population joint
strength, endurance time and fatigue index, work-rest schedules and the
working distance that best balances stress against discomfort.
"""

# Import parsers (triggers registration)
from posture_fatigue.parsers import JSONParser, YAMLParser

# Import writers (triggers registration)
from posture_fatigue.writers import CSVWriter, JSONWriter, TextWriter, YAMLWriter

# Import strength providers (triggers registration)
from posture_fatigue.strength import ConstantStrengthModel, GridStrengthModel

# Import main API
from posture_fatigue.evaluator import PostureEvaluator
from posture_fatigue.scenario import Scenario, load_scenario
from posture_fatigue.utils.config import load_model_config
from posture_fatigue.cli import main


__version__ = "0.1.0"

__all__ = [
    "PostureEvaluator",
    "Scenario",
    "load_scenario",
    "load_model_config",
    "main",
]
