"""Exception hierarchy for posture-fatigue errors."""

from typing import Optional, Sequence, Tuple


class PostureFatigueError(Exception):
    """Base exception for all posture-fatigue errors."""
    pass


class DomainError(PostureFatigueError, ValueError):
    """Raised when an input violates the domain of a model operation."""
    pass


class JointLimitError(DomainError):
    """Raised when a posture leaves the joint limits of the chain."""

    def __init__(self, violations: Sequence[Tuple[int, float, float, float]]):
        """
        Args:
            violations: (joint index, value, lower, upper) per offending joint, radians
        """
        self.violations = list(violations)
        joints = ", ".join(
            f"q{index + 1}={value:.6g} not in [{lower:.6g}, {upper:.6g}]"
            for index, value, lower, upper in self.violations
        )
        super().__init__(f"Posture outside joint limits: {joints}")

    @property
    def joints(self) -> list:
        return [v[0] for v in self.violations]


class ReachabilityError(DomainError):
    """Raised when an inverse-kinematics target cannot be reached by the arm."""
    pass


class ExtrapolationError(DomainError):
    """Raised when a strength query falls outside the grid of the strength model."""
    pass


class DegeneratePopulationError(DomainError):
    """Raised when a percentile strength is not strictly positive."""
    pass


class ScenarioError(PostureFatigueError, ValueError):
    """Raised when a scenario file cannot be parsed or fails validation."""

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        source: Optional[str] = None
    ):
        self.message = message
        self.path = path
        self.line = line
        self.source = source
        location = ""
        if source:
            location = f"{source}"
            if line is not None:
                location += f":{line}"
            location += ": "
        elif line is not None:
            location = f"line {line}: "
        field = f" (at '{path}')" if path else ""
        super().__init__(f"{location}{message}{field}")


class AcceptanceError(PostureFatigueError):
    """Raised when reproduced reference values fall outside their tolerance."""

    def __init__(self, message: str, failures: Optional[list] = None):
        self.failures = failures or []
        super().__init__(message)
