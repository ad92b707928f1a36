"""
Closed-Form Transients

Time-domain solutions v_g(t) at the generator end of the line, obtained by
inverting the echo series of Vg(s) term by term: every factor
e^(−2(k+1)sℓ/v_0) becomes a copy of the source waveform delayed by
(k+1)·2ℓ/v_0.

- transient_resistive: general resistive generator and load, truncated echo sum
- transient_matched: Z_g = Z_c, only the first echo survives
- transient_inductive / transient_capacitive: Z_g = Z_c, step input, reactive load
- transient: picks the most specific formula for a scenario

Samples at a discontinuity take the value just after it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import UnsupportedFormulaError, ValidationError
from .model import (
    Capacitive,
    Inductive,
    LineSpec,
    Scenario,
    Step,
    Trace,
    heaviside,
    shift_waveform,
    source_reflection_coefficient,
    termination_reflection,
    waveform_value,
)

# Get logger for this module
logger = logging.getLogger(__name__)

# |Z_g − Z_c|/Z_c at or below this counts as a matched generator
MATCH_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SamplingGrid:
    """
    Uniform time grid [t_start, t_end] with n_samples points.

    Attributes:
        t_start: First sample time in seconds
        t_end: Last sample time in seconds
        n_samples: Number of samples (>= 2)
    """

    t_start: float
    t_end: float
    n_samples: int

    def __post_init__(self):
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
            raise ValidationError("grid", "t_start and t_end must be finite")
        if not self.t_end > self.t_start:
            raise ValidationError("grid.t_end_s", "must be greater than grid.t_start_s")
        if isinstance(self.n_samples, bool) or not isinstance(self.n_samples, (int, np.integer)):
            raise ValidationError("grid.n", "must be an integer")
        if self.n_samples < 2:
            raise ValidationError("grid.n", "must be >= 2")
        if not self.dt > 0:
            raise ValidationError("grid", "sample spacing underflows to zero")

    @property
    def dt(self) -> float:
        return (self.t_end - self.t_start) / (self.n_samples - 1)

    def times(self) -> np.ndarray:
        return self.t_start + np.arange(self.n_samples) * self.dt

    def trace(self, samples: np.ndarray) -> Trace:
        return Trace(t0=self.t_start, dt=self.dt, samples=samples)


@dataclass(frozen=True)
class TruncationPlan:
    """Echo terms kept (k = 0..n_terms) and the time up to which that sum is exact."""

    n_terms: int
    valid_until: float


def is_matched_source(scenario: Scenario) -> bool:
    z_c = scenario.line.char_impedance
    return abs(scenario.source_impedance - z_c) <= MATCH_TOLERANCE * z_c


def echo_delay(line: LineSpec, k: int) -> float:
    """Arrival delay (k+1)·2ℓ/v_0 of the k-th echo at the generator."""
    return (k + 1) * line.round_trip_time


def terms_needed(scenario: Scenario, t_end: float) -> TruncationPlan:
    """
    Smallest N such that t_onset + 2(N+1)ℓ/v_0 > t_end.

    A t_end before the waveform onset needs no echoes and gives N = 0.
    """
    onset = scenario.waveform.onset
    round_trip = scenario.line.round_trip_time
    n_terms = 0
    if t_end >= onset:
        n_terms = int(math.floor((t_end - onset) / round_trip))
        while onset + (n_terms + 1) * round_trip <= t_end:
            n_terms += 1
        while n_terms > 0 and onset + n_terms * round_trip > t_end:
            n_terms -= 1
    return TruncationPlan(n_terms=n_terms, valid_until=onset + (n_terms + 1) * round_trip)


def discontinuities(scenario: Scenario, t_end: float) -> np.ndarray:
    """
    Times at which v_g(t) may jump: waveform edges and their echoes up to t_end.

    A matched generator absorbs the first echo, so only one echo per edge is listed.
    """
    line = scenario.line
    edges = list(scenario.waveform.edges)
    max_echoes = 1 if is_matched_source(scenario) else None
    times = []
    for edge in edges:
        times.append(edge)
        k = 0
        while max_echoes is None or k < max_echoes:
            arrival = edge + echo_delay(line, k)
            if arrival > t_end:
                break
            times.append(arrival)
            k += 1
    return np.array(sorted(t for t in times if t <= t_end))


# ==================== Resistive loads ====================

def _reject_reactive(scenario: Scenario, formula: str) -> None:
    termination = scenario.termination
    if termination.reactive:
        raise UnsupportedFormulaError(
            formula,
            f"{termination.kind} load reflection depends on s; "
            "use transient_inductive / transient_capacitive (matched step only)",
        )


def transient_resistive(scenario: Scenario, grid: SamplingGrid, n_terms: Optional[int] = None) -> Trace:
    """
    General solution for resistive Z_g and Z_L:

        v_g(t) = [Z_c/(Z_g+Z_c)]·{v_s(t) + (1+Γ_g)·Σ_{k=0}^{N} Γ_g^k·Γ_L^(k+1)·v_s[t − 2(k+1)ℓ/v_0]}

    Args:
        scenario: Resistive, open or short termination
        grid: Sample times
        n_terms: Override N; by default terms_needed(grid.t_end), which is exact on the grid

    Returns:
        Sampled v_g(t)
    """
    _reject_reactive(scenario, "transient_resistive")
    line, waveform = scenario.line, scenario.waveform
    if n_terms is None:
        n_terms = terms_needed(scenario, grid.t_end).n_terms
    elif n_terms < 0:
        raise ValidationError("n_terms", "must be >= 0")

    gamma_l = termination_reflection(scenario.termination, line.char_impedance)
    gamma_g = source_reflection_coefficient(scenario)
    t = grid.times()

    echoes = np.zeros_like(t)
    for k in range(n_terms + 1):
        coefficient = gamma_g ** k * gamma_l ** (k + 1)
        if coefficient == 0.0:
            break
        echoes += coefficient * waveform_value(shift_waveform(waveform, echo_delay(line, k)), t)

    logger.debug(
        "resistive solution: Γ_g=%.6f Γ_L=%.6f N=%d over %d samples",
        gamma_g, gamma_l, n_terms, grid.n_samples,
    )
    samples = scenario.divider_ratio * (waveform_value(waveform, t) + (1.0 + gamma_g) * echoes)
    return grid.trace(samples)


def transient_matched(scenario: Scenario, grid: SamplingGrid) -> Trace:
    """v_g(t) = ½·[v_s(t) + Γ_L·v_s(t − 2ℓ/v_0)] for a matched generator."""
    _reject_reactive(scenario, "transient_matched")
    _require_matched(scenario, "transient_matched")
    line, waveform = scenario.line, scenario.waveform
    gamma_l = termination_reflection(scenario.termination, line.char_impedance)
    t = grid.times()
    echo = waveform_value(shift_waveform(waveform, line.round_trip_time), t)
    return grid.trace(0.5 * (waveform_value(waveform, t) + gamma_l * echo))


# ==================== Reactive loads ====================

def _require_matched(scenario: Scenario, formula: str) -> None:
    if not is_matched_source(scenario):
        raise UnsupportedFormulaError(
            formula,
            f"closed form is derived only for a matched generator "
            f"(Z_g = {scenario.source_impedance:g} Ω, Z_c = {scenario.line.char_impedance:g} Ω)",
        )


def _require_matched_step(scenario: Scenario, formula: str, load_type: type) -> Step:
    if not isinstance(scenario.termination, load_type):
        raise UnsupportedFormulaError(formula, f"load is {scenario.termination.kind}")
    _require_matched(scenario, formula)
    if not isinstance(scenario.waveform, Step):
        raise UnsupportedFormulaError(formula, "closed form is derived only for a step input")
    return scenario.waveform


def _reactive_echo(scenario: Scenario, grid: SamplingGrid, step: Step, tau: float, sign: float) -> Trace:
    """
    ½V_0·{u(t−t_c) + u(t−t_e)·sign·[2e^(−(t−t_e)/τ) − 1]} with t_e = t_c + 2ℓ/v_0.

    sign = +1 gives the inductive response, −1 the capacitive one.
    """
    t = grid.times()
    t_echo = shift_waveform(step, scenario.line.round_trip_time).tc
    elapsed = np.maximum(t - t_echo, 0.0)
    bracket = sign * (2.0 * np.exp(-elapsed / tau) - 1.0)
    samples = 0.5 * (waveform_value(step, t) + step.v0 * heaviside(t - t_echo) * bracket)
    return grid.trace(samples)


def transient_inductive(scenario: Scenario, grid: SamplingGrid) -> Trace:
    """Matched generator, step input, inductive load; τ_L = L/Z_c."""
    step = _require_matched_step(scenario, "transient_inductive", Inductive)
    tau = scenario.termination.l / scenario.line.char_impedance
    logger.debug("inductive echo: τ_L=%.4e s", tau)
    return _reactive_echo(scenario, grid, step, tau, sign=1.0)


def transient_capacitive(scenario: Scenario, grid: SamplingGrid) -> Trace:
    """Matched generator, step input, capacitive load; τ_C = Z_c·C."""
    step = _require_matched_step(scenario, "transient_capacitive", Capacitive)
    tau = scenario.line.char_impedance * scenario.termination.c
    logger.debug("capacitive echo: τ_C=%.4e s", tau)
    return _reactive_echo(scenario, grid, step, tau, sign=-1.0)


# ==================== Dispatch ====================

def select_formula(scenario: Scenario) -> Callable[[Scenario, SamplingGrid], Trace]:
    """Most specific closed form for a scenario (not yet checked for applicability)."""
    termination = scenario.termination
    if isinstance(termination, Inductive):
        return transient_inductive
    if isinstance(termination, Capacitive):
        return transient_capacitive
    if is_matched_source(scenario):
        return transient_matched
    return transient_resistive


def transient(scenario: Scenario, grid: SamplingGrid) -> Trace:
    """
    Sample v_g(t) with the most specific supported closed form.

    Raises:
        UnsupportedFormulaError: reactive load with an unmatched generator or a pulse input
    """
    formula = select_formula(scenario)
    logger.info("analytic: using %s", formula.__name__)
    return formula(scenario, grid)


# ==================== Time-constant extraction ====================

def fit_time_constant(trace: Trace, t_from: float, t_to: float, asymptote: float = 0.0) -> float:
    """
    Time constant of an exponential approach to `asymptote`, by a least-squares
    fit of ln|v − asymptote| against t over [t_from, t_to].
    """
    t = trace.times
    mask = (t >= t_from) & (t <= t_to)
    distance = np.abs(trace.samples[mask] - asymptote)
    if mask.sum() < 2 or np.any(distance <= 0):
        raise ValidationError("fit window", "needs at least two samples away from the asymptote")
    slope, _ = np.polyfit(t[mask], np.log(distance), 1)
    if slope >= 0:
        raise ValidationError("fit window", "samples do not decay towards the asymptote")
    return -1.0 / slope

