"""
Error Types

Exceptions raised by the simulation core and mapped to process exit codes
by the command-line front end.
"""

from typing import Optional


class TlineError(Exception):
    """Base class for every error raised by tline"""

    exit_code = 1


class ValidationError(TlineError, ValueError):
    """A parameter, config key, or invariant was violated"""

    exit_code = 1

    def __init__(self, key: str, constraint: str):
        """
        Args:
            key: Name of the offending field or config key (e.g. "wave.tb_s")
            constraint: Human-readable statement of the violated constraint
        """
        self.key = key
        self.constraint = constraint
        super().__init__(f"{key}: {constraint}")


class UnsupportedFormulaError(TlineError):
    """No closed form is available for the requested scenario"""

    exit_code = 2

    def __init__(self, formula: str, reason: str):
        self.formula = formula
        self.reason = reason
        super().__init__(f"{formula} does not apply: {reason}")


class PoleError(TlineError, ZeroDivisionError):
    """An s-domain expression was evaluated at (or numerically on) a pole"""

    exit_code = 1

    def __init__(self, where: str, magnitude: Optional[float] = None):
        self.where = where
        self.magnitude = magnitude
        detail = f" (|denominator| = {magnitude:.3e})" if magnitude is not None else ""
        super().__init__(f"pole in {where}{detail}")
