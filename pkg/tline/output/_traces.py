"""Shared checks for labeled trace collections."""

from typing import Dict

from ..errors import ValidationError
from ..model import Trace


def check_traces(traces: Dict[str, Trace]) -> Trace:
    """
    Validate a labeled trace collection before anything is written.

    Returns:
        The first trace, whose grid every other trace shares

    Raises:
        ValidationError: no traces, an empty trace, or mismatched grids
    """
    if not traces:
        raise ValidationError("traces", "nothing to emit")
    names = list(traces)
    reference = traces[names[0]]
    for name in names:
        if len(traces[name]) == 0:
            raise ValidationError("traces", f"{name} trace is empty")
        if not reference.same_grid(traces[name]):
            raise ValidationError("traces", f"{name} is not on the same grid as {names[0]}")
    return reference
