"""
Bounce-Diagram Oracle

Event-driven lattice of wavefronts travelling between the generator and the
load. Each wavefront is an amplitude-scaled, delayed copy of the launch
waveform; reflections multiply it by Γ_L at the load and Γ_g at the
generator. The generator voltage is the launched wave plus every backward
arrival weighted by (1 + Γ_g).

Only frequency-independent (resistive, open, short) loads are handled.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List

import numpy as np

from ..analytic import SamplingGrid
from ..errors import UnsupportedFormulaError
from ..model import (
    Scenario,
    Trace,
    Waveform,
    scale_waveform,
    shift_waveform,
    source_reflection_coefficient,
    termination_reflection,
    waveform_value,
)

# Get logger for this module
logger = logging.getLogger(__name__)

# Wavefronts below this fraction of the launch amplitude are dropped
_NEGLIGIBLE = 1e-18


class Direction(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class BounceEvent:
    """
    A wavefront reaching one end of the line.

    Attributes:
        arrival_time: Delay after the launch edge, in seconds
        amplitude: Wavefront amplitude in volts (launch amplitude times the reflection products)
        direction: FORWARD arrivals hit the load, BACKWARD arrivals hit the generator
        generation: Completed round trips before this arrival
    """

    arrival_time: float
    amplitude: float
    direction: Direction
    generation: int

    def wavefront(self, waveform: Waveform) -> Waveform:
        """The launch waveform scaled to this amplitude and delayed to this arrival."""
        scale = self.amplitude / waveform.v0 if waveform.v0 != 0 else 0.0
        return shift_waveform(scale_waveform(waveform, scale), self.arrival_time)


def _require_resistive(scenario: Scenario) -> None:
    termination = scenario.termination
    if termination.reactive:
        raise UnsupportedFormulaError(
            "simulate_bounce",
            f"{termination.kind} load reflects a convolution, not a scaled copy; use simulate_fdtd",
        )


def bounce_events(scenario: Scenario, t_end: float) -> List[BounceEvent]:
    """
    All wavefront arrivals whose delayed edge lies at or before t_end.

    Events come out of a time-ordered queue: a forward arrival at the load
    schedules its reflection back to the generator one transit later, and a
    backward arrival at the generator schedules the next forward wave.

    Returns:
        Events ordered by arrival time
    """
    _require_resistive(scenario)
    line, waveform = scenario.line, scenario.waveform
    gamma_l = termination_reflection(scenario.termination, line.char_impedance)
    gamma_g = source_reflection_coefficient(scenario)
    transit = line.transit_time
    horizon = t_end - waveform.onset
    launch = scenario.divider_ratio * waveform.v0
    cutoff = abs(launch) * _NEGLIGIBLE

    # (arrival, sequence, event); arrival of generation g: (2g+1)·ℓ/v_0 forward, (2g+2)·ℓ/v_0 backward
    queue = []
    sequence = 0
    if launch != 0 and transit <= horizon:
        heapq.heappush(queue, (transit, sequence, BounceEvent(transit, launch, Direction.FORWARD, 0)))

    events: List[BounceEvent] = []
    while queue:
        _, _, event = heapq.heappop(queue)
        events.append(event)
        if event.direction is Direction.FORWARD:
            amplitude = event.amplitude * gamma_l
            arrival = (2 * event.generation + 2) * transit
            follow = BounceEvent(arrival, amplitude, Direction.BACKWARD, event.generation)
        else:
            amplitude = event.amplitude * gamma_g
            arrival = (2 * event.generation + 3) * transit
            follow = BounceEvent(arrival, amplitude, Direction.FORWARD, event.generation + 1)
        if arrival > horizon or abs(amplitude) <= cutoff:
            continue
        sequence += 1
        heapq.heappush(queue, (arrival, sequence, follow))

    logger.debug("bounce lattice: %d events up to %.4e s", len(events), t_end)
    return events


def simulate_bounce(scenario: Scenario, t_end: float, grid: SamplingGrid) -> Trace:
    """
    Generator voltage from the bounce lattice, sampled on a grid.

    Args:
        scenario: Resistive, open or short termination
        t_end: Last echo arrival to include
        grid: Sample times

    Returns:
        Sampled v_g(t)
    """
    _require_resistive(scenario)
    waveform = scenario.waveform
    gamma_g = source_reflection_coefficient(scenario)
    t = grid.times()

    launched = scale_waveform(waveform, scenario.divider_ratio)
    samples = waveform_value(launched, t)
    arrivals = np.zeros_like(t)
    for event in bounce_events(scenario, t_end):
        if event.direction is Direction.BACKWARD:
            arrivals += waveform_value(event.wavefront(waveform), t)
    samples = samples + (1.0 + gamma_g) * arrivals
    return grid.trace(samples)
