"""
Method Constraints

Defines which solution methods apply to a scenario and resolves a method
selection ("all" or an explicit list) against those rules.
"""

import logging
from typing import Iterable, List, Tuple

from ..analytic import is_matched_source
from ..errors import UnsupportedFormulaError, ValidationError
from ..model import Scenario, Step

# Get logger for this module
logger = logging.getLogger(__name__)

METHODS = ("analytic", "bounce", "fdtd")
ALL_METHODS = "all"


class MethodConstraints:
    """Applicability rules for the analytic, bounce and fdtd methods"""

    def __init__(self, scenario: Scenario):
        """
        Args:
            scenario: The scenario every method would be run on
        """
        self.scenario = scenario

    def validate(self, method: str) -> Tuple[bool, str]:
        """
        Check whether a method can produce a trace for the scenario.

        Args:
            method: One of analytic, bounce, fdtd

        Returns:
            Tuple of (is_valid: bool, reason: str)
        """
        if method not in METHODS:
            return False, f"unknown method '{method}' (choose from {', '.join(METHODS)})"

        termination = self.scenario.termination
        if method == "analytic" and termination.reactive:
            if not is_matched_source(self.scenario):
                return False, f"{termination.kind} closed form needs a matched generator (Z_g = Z_c)"
            if not isinstance(self.scenario.waveform, Step):
                return False, f"{termination.kind} closed form needs a step input"

        if method == "bounce" and termination.reactive:
            return False, f"bounce lattice handles resistive, open and short loads only, not {termination.kind}"

        return True, "Valid method"

    def resolve(self, requested: Iterable[str]) -> List[str]:
        """
        Turn a method selection into the methods to run, in canonical order.

        "all" keeps every applicable method and logs the ones it skips. A method
        named explicitly must apply.

        Raises:
            ValidationError: unknown method name or empty selection
            UnsupportedFormulaError: an explicitly named method does not apply
        """
        requested = list(requested)
        if not requested:
            raise ValidationError("run.methods", "must name at least one method")

        if ALL_METHODS in requested:
            selected = []
            for method in METHODS:
                is_valid, reason = self.validate(method)
                if is_valid:
                    selected.append(method)
                else:
                    logger.warning(f"⚠️  Skipping {method}: {reason}")
            return selected

        for method in requested:
            if method not in METHODS:
                raise ValidationError("run.methods", f"unknown method '{method}' (choose from {', '.join(METHODS)} or all)")
            is_valid, reason = self.validate(method)
            if not is_valid:
                raise UnsupportedFormulaError(method, reason)
        return [method for method in METHODS if method in requested]
