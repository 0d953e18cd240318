"""Unit conversions at the file and CLI boundary (seconds outside, minutes inside)."""

from typing import Union

import numpy as np

SECONDS_PER_MINUTE = 60.0

Number = Union[float, np.ndarray]


def to_minutes(seconds: Number) -> Number:
    return seconds / SECONDS_PER_MINUTE


def to_seconds(minutes: Number) -> Number:
    return minutes * SECONDS_PER_MINUTE
