"""
Figure Presets

Ready-made run configurations for the six reference scenarios. All share an
8 m, 50 Ω line with v_0 = 0.7c:

- fig4a / fig4b: 1 kΩ generator, 1 V step at 0.1 µs, open / short load, 0-1 µs
- fig5a / fig5b: matched generator, 1 V pulse from 50 ns to 65 ns, open / short load, 0-200 ns
- fig6a / fig6b: matched generator, 1 V step at 5 ns, 3 µH / 1 nF load, 0-400 ns
"""

import os
from typing import Callable, Dict, Tuple

from .analytic import SamplingGrid
from .config import TLINE_CONFIG
from .errors import ValidationError
from .model import Capacitive, Inductive, LineSpec, Open, Pulse, Scenario, Short, Step
from .runconfig import RunConfig

LINE_LENGTH = 8.0  # m
CHAR_IMPEDANCE = 50.0  # Ω
SPEED_FRACTION = 0.7  # of c

PRESET_SAMPLES = 2000
# Reactive loads need a finer FDTD mesh to resolve the exponential at the load
REACTIVE_NX = 2048

BOUNCE_METHODS = ("analytic", "bounce", "fdtd")
REACTIVE_METHODS = ("analytic", "fdtd")


def _line() -> LineSpec:
    return LineSpec.from_fraction_of_c(LINE_LENGTH, CHAR_IMPEDANCE, SPEED_FRACTION)


def _config(name: str, scenario: Scenario, t_end: float, methods: Tuple[str, ...], fdtd_nx: int) -> RunConfig:
    return RunConfig(
        scenario=scenario,
        grid=SamplingGrid(0.0, t_end, PRESET_SAMPLES),
        methods=methods,
        fdtd_nx=fdtd_nx,
        output_path=os.path.join(TLINE_CONFIG["output_dir"], name),
        emit=tuple(TLINE_CONFIG["emit"]),
    )


def _fig4(name: str, termination) -> RunConfig:
    scenario = Scenario(_line(), 1000.0, termination, Step(v0=1.0, tc=1e-7))
    return _config(name, scenario, 1e-6, BOUNCE_METHODS, TLINE_CONFIG["fdtd_nx"])


def _fig5(name: str, termination) -> RunConfig:
    scenario = Scenario(_line(), CHAR_IMPEDANCE, termination, Pulse(v0=1.0, ta=50e-9, tb=65e-9))
    return _config(name, scenario, 200e-9, BOUNCE_METHODS, TLINE_CONFIG["fdtd_nx"])


def _fig6(name: str, termination) -> RunConfig:
    scenario = Scenario(_line(), CHAR_IMPEDANCE, termination, Step(v0=1.0, tc=5e-9))
    return _config(name, scenario, 400e-9, REACTIVE_METHODS, max(REACTIVE_NX, TLINE_CONFIG["fdtd_nx"]))


PRESETS: Dict[str, Callable[[], RunConfig]] = {
    "fig4a": lambda: _fig4("fig4a", Open()),
    "fig4b": lambda: _fig4("fig4b", Short()),
    "fig5a": lambda: _fig5("fig5a", Open()),
    "fig5b": lambda: _fig5("fig5b", Short()),
    "fig6a": lambda: _fig6("fig6a", Inductive(3e-6)),
    "fig6b": lambda: _fig6("fig6b", Capacitive(1e-9)),
}


def run_preset(name: str) -> RunConfig:
    """
    Run configuration of a named reference scenario.

    Args:
        name: One of fig4a, fig4b, fig5a, fig5b, fig6a, fig6b

    Raises:
        ValidationError: unknown preset name
    """
    builder = PRESETS.get(name)
    if builder is None:
        raise ValidationError("preset", f"unknown preset '{name}' (choose from {', '.join(PRESETS)})")
    return builder()
