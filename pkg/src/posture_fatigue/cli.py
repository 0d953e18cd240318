"""
Command-line front end.

    posture-fatigue endurance  --scenario drill-2.5kg.json --out results/
    posture-fatigue schedule   --scenario drill-3.5kg.json --out results/ --format text
    posture-fatigue posture    --scenario drilling-reach.json --out results/ --pareto 11
    posture-fatigue trajectory --scenario drill-2.5kg.json --out results/ --percentiles -2 0 2
    posture-fatigue reproduce  --out results/

Exit codes: 0 success, 1 invalid scenario or input, 2 reference check failed.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from posture_fatigue.evaluator import PostureEvaluator, write_reports
from posture_fatigue.exceptions import AcceptanceError, DomainError, ScenarioError
from posture_fatigue.registry import writer_registry
from posture_fatigue.reproduce import run_reproduction
from posture_fatigue.scenario import load_scenario
from posture_fatigue.strength.population import ALLOWED_Z
from posture_fatigue.utils.config import load_model_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_ACCEPTANCE = 2

COMMANDS = ("endurance", "schedule", "posture", "trajectory", "reproduce")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posture-fatigue",
        description="Joint fatigue, work-rest and working-posture evaluation for manual tasks.",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Log debug messages")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def common(sub: argparse.ArgumentParser, scenario: bool = True) -> None:
        if scenario:
            sub.add_argument("--scenario", required=True, type=Path, help="Scenario file (JSON or YAML)")
        sub.add_argument("--out", type=Path, default=Path("."), help="Output directory")
        sub.add_argument(
            "--format",
            default="csv",
            choices=writer_registry.list_keys(),
            help="Report format (default: csv)",
        )

    endurance = subparsers.add_parser("endurance", help="Endurance time, fatigue index and completable work units")
    common(endurance)
    endurance.add_argument("--percentiles", type=int, nargs="+", choices=ALLOWED_Z, help="z values, e.g. -2 0 2")
    endurance.add_argument("--rounding", choices=("nearest", "floor"), help="Work-unit rounding")

    schedule = subparsers.add_parser("schedule", help="Simulate the scenario's duty cycle")
    common(schedule)
    schedule.add_argument("--rounding", choices=("nearest", "floor"), help="Work-unit rounding")

    posture = subparsers.add_parser("posture", help="Sweep the working distance for the best posture")
    common(posture)
    posture.add_argument("--range", type=float, nargs=2, metavar=("START", "STOP"), help="Distance range, m")
    posture.add_argument("--step", type=float, help="Distance step, m")
    posture.add_argument("--pareto", type=int, metavar="N", help="Also scan N weight pairs")

    trajectory = subparsers.add_parser("trajectory", help="Strength during continuous holding")
    common(trajectory)
    trajectory.add_argument("--percentiles", type=int, nargs="+", choices=ALLOWED_Z, help="z values, e.g. -2 0 2")
    trajectory.add_argument("--duration", type=float, help="Holding time, s (default: longest endurance)")
    trajectory.add_argument("--sample", type=float, default=1.0, help="Sampling step, s")

    reproduce = subparsers.add_parser("reproduce", help="Check the reference endurance table")
    common(reproduce, scenario=False)
    reproduce.add_argument("--fatigue-rate", type=float, help="Override k, min^-1")

    return parser


def _evaluator(args: argparse.Namespace) -> PostureEvaluator:
    scenario = load_scenario(args.scenario)
    overrides = dict(scenario.model)
    if getattr(args, "rounding", None):
        overrides["rounding"] = args.rounding
    return PostureEvaluator(scenario, config=load_model_config(overrides))


def run(args: argparse.Namespace) -> List[Path]:
    """Execute one parsed command and return the written artifacts."""
    if args.command == "reproduce":
        result = run_reproduction(fatigue_rate=args.fatigue_rate)
        paths = write_reports([result.report], args.out, "reference", "reproduce", args.format)
        result.raise_for_failures()
        return paths

    evaluator = _evaluator(args)
    if args.command == "endurance":
        reports = evaluator.endurance(args.percentiles)
    elif args.command == "schedule":
        reports = evaluator.schedule()
    elif args.command == "posture":
        reports = evaluator.posture_sweep(
            tuple(args.range) if args.range else None,
            args.step,
            args.pareto,
        )
    else:
        reports = evaluator.trajectory(args.duration, args.sample, args.percentiles)
    return write_reports(reports, args.out, evaluator.scenario.name, args.command, args.format)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI entry point.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_VALIDATION

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        output_paths = run(args)
    except AcceptanceError as e:
        print(f"✗ {e}", file=sys.stderr)
        for failure in e.failures:
            print(f"  {failure}", file=sys.stderr)
        return EXIT_ACCEPTANCE
    except (ScenarioError, DomainError, FileNotFoundError) as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        return EXIT_VALIDATION

    print(f"✓ Wrote {len(output_paths)} file(s)")
    for path in output_paths:
        print(f"  → {path}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
