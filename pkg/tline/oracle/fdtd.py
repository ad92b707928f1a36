"""
FDTD Oracle

Leapfrog integration of the lossless telegrapher equations

    ∂v/∂x = −L' ∂i/∂t,    ∂i/∂x = −C' ∂v/∂t

on a staggered grid: voltages at nodes j·dx and integer steps, currents at
half nodes (j+½)·dx and half steps. The step is fixed at dt = dx/v_0, for
which interior transport is exact, so every deviation from the closed forms
comes from the end nodes.

End nodes own half a cell of line capacitance. The generator node solves
KCL with the Thevenin source (v_s, Z_g); the load node solves KCL with a
resistor, or with a trapezoidal companion model of the inductor/capacitor
whose state is carried in FdtdState.aux. Both are averaged over the step
(trapezoidal), which keeps resistive terminations reflection-exact.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..analytic import SamplingGrid
from ..errors import ValidationError
from ..model import (
    Capacitive,
    Inductive,
    Open,
    Resistive,
    Scenario,
    Short,
    Trace,
    per_unit_length,
    waveform_value,
)

# Get logger for this module
logger = logging.getLogger(__name__)

MIN_CELLS = 16


@dataclass
class FdtdState:
    """
    Mutable field state of one run.

    Attributes:
        v: Node voltages, nx + 1 values at x = j·dx
        i: Half-node currents, nx values at x = (j+½)·dx
        dx: Cell length in meters
        dt: Time step in seconds (dx/v_0)
        aux: Inductor current or capacitor voltage at the load
        step: Completed time steps
    """

    v: np.ndarray
    i: np.ndarray
    dx: float
    dt: float
    aux: float = 0.0
    step: int = 0


class FdtdSolver:
    """Steppable 1-D FDTD solver for one scenario; owns its state exclusively."""

    def __init__(self, scenario: Scenario, nx: int):
        """
        Initialize a de-energized line.

        Args:
            scenario: Any termination, resistive or reactive
            nx: Number of cells along the line (>= 16)
        """
        if isinstance(nx, bool) or not isinstance(nx, (int, np.integer)) or nx < MIN_CELLS:
            raise ValidationError("fdtd.nx", f"must be an integer >= {MIN_CELLS}")
        self.scenario = scenario
        self.nx = int(nx)
        line = scenario.line
        dx = line.length / self.nx
        self.state = FdtdState(
            v=np.zeros(self.nx + 1),
            i=np.zeros(self.nx),
            dx=dx,
            dt=dx / line.speed,
        )
        self.per_unit_length = per_unit_length(line)
        # The clock starts one step before t = 0 so a waveform with onset 0 enters a quiet line
        self.t_first = -self.state.dt

    @property
    def time(self) -> float:
        """Time of the current voltage samples."""
        return self.t_first + self.state.step * self.state.dt

    def _source(self, t):
        """v_s at time(s) t; the line is quiet for t < 0."""
        t = np.asarray(t, dtype=float)
        return np.where(t >= 0.0, waveform_value(self.scenario.waveform, t), 0.0)

    def advance(self):
        """Advance one time step: currents to n+½, then voltages to n+1."""
        t_now = self.time
        self._advance(float(self._source(t_now) + self._source(t_now + self.state.dt)))

    def _advance(self, source_sum: float):
        state = self.state
        z_c = self.scenario.line.char_impedance
        v, i = state.v, state.i

        # dt/(L'dx) = 1/Z_c and dt/(C'dx) = Z_c at the magic step
        i -= (v[1:] - v[:-1]) / z_c

        v_load_old = v[-1]
        v[1:-1] -= z_c * (i[1:] - i[:-1])
        v[0] = self._generator_node(v[0], i[0], source_sum)
        v[-1] = self._load_node(v_load_old, i[-1])
        state.step += 1

    def _generator_node(self, v_old: float, i_line: float, source_sum: float) -> float:
        """
        KCL at node 0 with half-cell capacitance C'dx/2 and series Z_g:
        (Z_g + Z_c)·v⁺ = (Z_g − Z_c)·v + Z_c·(v_s⁺ + v_s) − 2·Z_g·Z_c·i.
        """
        z_c = self.scenario.line.char_impedance
        z_g = self.scenario.source_impedance
        return ((z_g - z_c) * v_old + z_c * source_sum - 2.0 * z_g * z_c * i_line) / (z_g + z_c)

    def _load_node(self, v_old: float, i_line: float) -> float:
        """KCL at node nx with half-cell capacitance and the termination."""
        state = self.state
        z_c = self.scenario.line.char_impedance
        termination = self.scenario.termination
        if isinstance(termination, Short):
            return 0.0
        if isinstance(termination, Open):
            return v_old + 2.0 * z_c * i_line
        if isinstance(termination, Resistive):
            r = termination.r
            return ((r - z_c) * v_old + 2.0 * r * z_c * i_line) / (r + z_c)
        if isinstance(termination, Inductive):
            # i_L⁺ = i_L + (dt/2L)(v⁺ + v), solved together with KCL
            k = state.dt / (2.0 * termination.l)
            v_new = ((1.0 - z_c * k) * v_old + 2.0 * z_c * (i_line - state.aux)) / (1.0 + z_c * k)
            state.aux = state.aux + k * (v_new + v_old)
            return v_new
        if isinstance(termination, Capacitive):
            # v_C⁺ = v_C + (dt/2C)(i_C⁺ + i_C), with i_C from KCL and v_C the node voltage
            conductance = 1.0 / (2.0 * z_c) + termination.c / state.dt
            v_new = v_old + i_line / conductance
            state.aux = v_new
            return v_new
        raise ValidationError("termination", f"unsupported termination {termination!r}")

    def run(self, t_end: float) -> Trace:
        """
        Integrate until t_end and return v at node 0 on the native grid t = k·dt, k >= 0.
        """
        dt = self.state.dt
        start = self.time
        n_steps = max(1, int(math.ceil((t_end - start) / dt - 1e-9)))
        source = self._source(start + np.arange(n_steps + 1) * dt)
        samples = np.empty(n_steps)
        for n in range(n_steps):
            self._advance(float(source[n] + source[n + 1]))
            samples[n] = self.state.v[0]
        logger.debug("fdtd: nx=%d, dt=%.4e s, %d steps", self.nx, dt, n_steps)
        return Trace(t0=start + dt, dt=dt, samples=samples)


def resample_nearest(trace: Trace, grid: SamplingGrid) -> Trace:
    """Pick, for each grid time, the trace sample closest in time."""
    index = np.rint((grid.times() - trace.t0) / trace.dt).astype(int)
    index = np.clip(index, 0, len(trace) - 1)
    return grid.trace(trace.samples[index])


def simulate_fdtd(scenario: Scenario, nx: int, t_end: float, grid: Optional[SamplingGrid] = None) -> Trace:
    """
    Generator voltage from a fresh FDTD run.

    Args:
        scenario: Any termination
        nx: Cells along the line (>= 16)
        t_end: Last time to integrate to
        grid: When given, the native trace is resampled onto it by nearest sample

    Returns:
        v_g(t) on the native dt = dx/v_0 grid starting at t = 0, or on `grid`
    """
    solver = FdtdSolver(scenario, nx)
    native = solver.run(t_end)
    if grid is None:
        return native
    return resample_nearest(native, grid)
