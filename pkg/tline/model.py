"""
Line Model

Domain types for a lossless transmission line connected to a resistive
signal generator, together with reflection coefficients, per-unit-length
parameters and time-domain evaluation of the generator waveforms.

All quantities are SI base units: meters, seconds, ohms, volts, henries,
farads. Every type is an immutable value and every function is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import ClassVar, NamedTuple, Union

import numpy as np

from .errors import UnsupportedFormulaError, ValidationError

SPEED_OF_LIGHT = 299_792_458.0  # m/s


def _require(condition: bool, key: str, constraint: str) -> None:
    if not condition:
        raise ValidationError(key, constraint)


def _is_real(value) -> bool:
    return isinstance(value, (int, float, np.floating, np.integer)) and math.isfinite(value)


# ==================== Line ====================

@dataclass(frozen=True)
class LineSpec:
    """
    Physical description of a lossless line.

    Attributes:
        length: Line length in meters
        char_impedance: Characteristic impedance Z_c in ohms
        speed: Propagation speed v_0 in m/s, at most the vacuum speed of light
    """

    length: float
    char_impedance: float
    speed: float

    def __post_init__(self):
        _require(_is_real(self.length) and self.length > 0, "length", "must be a finite value > 0")
        _require(
            _is_real(self.char_impedance) and self.char_impedance > 0,
            "char_impedance", "must be a finite value > 0",
        )
        _require(
            _is_real(self.speed) and 0 < self.speed <= SPEED_OF_LIGHT,
            "speed", f"must satisfy 0 < speed <= {SPEED_OF_LIGHT} m/s",
        )

    @classmethod
    def from_fraction_of_c(cls, length: float, char_impedance: float, fraction: float) -> "LineSpec":
        """Build a line whose speed is given as a fraction of the vacuum speed of light."""
        _require(_is_real(fraction) and 0 < fraction <= 1, "speed", "fraction of c must be in (0, 1]")
        return cls(length=length, char_impedance=char_impedance, speed=fraction * SPEED_OF_LIGHT)

    @property
    def transit_time(self) -> float:
        """One-way travel time ℓ/v_0."""
        return self.length / self.speed

    @property
    def round_trip_time(self) -> float:
        """Echo spacing 2ℓ/v_0."""
        return 2.0 * self.length / self.speed


# ==================== Terminations ====================

@dataclass(frozen=True)
class Resistive:
    r: float

    kind: ClassVar[str] = "resistive"
    reactive: ClassVar[bool] = False

    def __post_init__(self):
        _require(_is_real(self.r) and self.r >= 0, "r", "load resistance must be a finite value >= 0")


@dataclass(frozen=True)
class Open:
    kind: ClassVar[str] = "open"
    reactive: ClassVar[bool] = False


@dataclass(frozen=True)
class Short:
    kind: ClassVar[str] = "short"
    reactive: ClassVar[bool] = False


@dataclass(frozen=True)
class Inductive:
    l: float  # noqa: E741

    kind: ClassVar[str] = "inductive"
    reactive: ClassVar[bool] = True

    def __post_init__(self):
        _require(_is_real(self.l) and self.l > 0, "l", "load inductance must be a finite value > 0")


@dataclass(frozen=True)
class Capacitive:
    c: float

    kind: ClassVar[str] = "capacitive"
    reactive: ClassVar[bool] = True

    def __post_init__(self):
        _require(_is_real(self.c) and self.c > 0, "c", "load capacitance must be a finite value > 0")


Termination = Union[Resistive, Open, Short, Inductive, Capacitive]
TERMINATION_TYPES = (Resistive, Open, Short, Inductive, Capacitive)

# Marker for an infinite impedance
OPEN = Open()


# ==================== Waveforms ====================

@dataclass(frozen=True)
class Step:
    """Voltage step V_0·u(t − t_c)."""

    v0: float
    tc: float = 0.0

    kind: ClassVar[str] = "step"

    def __post_init__(self):
        _require(_is_real(self.v0), "v0", "amplitude must be finite")
        _require(_is_real(self.tc) and self.tc >= 0, "tc", "step time must be a finite value >= 0")

    @property
    def onset(self) -> float:
        return self.tc

    @property
    def edges(self) -> tuple:
        return (self.tc,)


@dataclass(frozen=True)
class Pulse:
    """Rectangular pulse V_0·[u(t − t_a) − u(t − t_b)]."""

    v0: float
    ta: float
    tb: float

    kind: ClassVar[str] = "pulse"

    def __post_init__(self):
        _require(_is_real(self.v0), "v0", "amplitude must be finite")
        _require(_is_real(self.ta) and self.ta >= 0, "ta", "pulse start must be a finite value >= 0")
        _require(_is_real(self.tb) and self.tb > self.ta, "tb", "pulse end must be greater than ta")

    @property
    def onset(self) -> float:
        return self.ta

    @property
    def edges(self) -> tuple:
        return (self.ta, self.tb)


Waveform = Union[Step, Pulse]


# ==================== Scenario & Trace ====================

@dataclass(frozen=True)
class Scenario:
    """
    A complete transient problem: line, generator and load.

    Attributes:
        line: The transmission line
        source_impedance: Generator output resistance Z_g in ohms (>= 0)
        termination: Load at the far end of the line
        waveform: Open-circuit generator voltage v_s(t)
    """

    line: LineSpec
    source_impedance: float
    termination: Termination
    waveform: Waveform

    def __post_init__(self):
        _require(isinstance(self.line, LineSpec), "line", "must be a LineSpec")
        _require(
            _is_real(self.source_impedance) and self.source_impedance >= 0,
            "source_impedance", "must be a finite value >= 0",
        )
        _require(isinstance(self.termination, TERMINATION_TYPES), "termination", "unknown termination type")
        _require(isinstance(self.waveform, (Step, Pulse)), "waveform", "must be a step or a pulse")

    @property
    def divider_ratio(self) -> float:
        """Launch fraction Z_c/(Z_g + Z_c)."""
        z_c = self.line.char_impedance
        return z_c / (self.source_impedance + z_c)


@dataclass(frozen=True, eq=False)
class Trace:
    """
    Uniformly sampled v_g(t): sample k is the value at t0 + k·dt.

    The sample array is copied on construction and made read-only.
    """

    t0: float
    dt: float
    samples: np.ndarray

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float)
        _require(samples.ndim == 1, "samples", "must be one-dimensional")
        _require(_is_real(self.t0), "t0", "must be finite")
        _require(_is_real(self.dt) and self.dt > 0, "dt", "must be a finite value > 0")
        _require(bool(np.all(np.isfinite(samples))), "samples", "must be finite (no NaN or infinity)")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(len(self.samples)) * self.dt

    def same_grid(self, other: "Trace", rel_tol: float = 1e-12) -> bool:
        """True when both traces have the same length, start and spacing."""
        return (
            len(self) == len(other)
            and math.isclose(self.dt, other.dt, rel_tol=rel_tol)
            and math.isclose(self.t0, other.t0, rel_tol=rel_tol, abs_tol=rel_tol * self.dt)
        )


# ==================== Reflection coefficients ====================

def reflection_coefficient(z_load: Union[float, Open], z_c: float) -> float:
    """
    Reflection coefficient (Z_L − Z_c)/(Z_L + Z_c) at a resistive discontinuity.

    Args:
        z_load: Terminating resistance in ohms, or the OPEN marker
        z_c: Characteristic impedance in ohms

    Returns:
        Γ in [−1, 1]; exactly 1.0 for an open and exactly −1.0 for zero ohms
    """
    _require(_is_real(z_c) and z_c > 0, "z_c", "characteristic impedance must be > 0")
    if isinstance(z_load, Open):
        return 1.0
    _require(not math.isnan(z_load) and z_load >= 0, "z_load", "must be >= 0 or OPEN")
    if math.isinf(z_load):
        return 1.0
    if z_load == 0:
        return -1.0
    return (z_load - z_c) / (z_load + z_c)


def termination_reflection(termination: Termination, z_c: float) -> float:
    """Frequency-independent Γ_L of a resistive, open or short termination."""
    if isinstance(termination, Open):
        return reflection_coefficient(OPEN, z_c)
    if isinstance(termination, Short):
        return reflection_coefficient(0.0, z_c)
    if isinstance(termination, Resistive):
        return reflection_coefficient(termination.r, z_c)
    raise UnsupportedFormulaError(
        "termination_reflection",
        f"{termination.kind} load reflection depends on s; use sdomain.load_reflection",
    )


def source_reflection_coefficient(scenario: Scenario) -> float:
    """Γ_g seen by backward-travelling waves at the generator."""
    return reflection_coefficient(scenario.source_impedance, scenario.line.char_impedance)


# ==================== Per-unit-length parameters ====================

class PerUnitLength(NamedTuple):
    inductance: float   # H/m
    capacitance: float  # F/m


def per_unit_length(line: LineSpec) -> PerUnitLength:
    """
    Per-unit-length L' and C' of a line.

    Inverts Z_c = √(L'/C') and v_0 = 1/√(L'C').
    """
    z_c, v_0 = line.char_impedance, line.speed
    return PerUnitLength(inductance=z_c / v_0, capacitance=1.0 / (z_c * v_0))


def line_from_per_unit_length(inductance: float, capacitance: float, length: float) -> LineSpec:
    """Build a LineSpec from per-unit-length L' (H/m) and C' (F/m)."""
    _require(_is_real(inductance) and inductance > 0, "inductance", "must be > 0")
    _require(_is_real(capacitance) and capacitance > 0, "capacitance", "must be > 0")
    return LineSpec(
        length=length,
        char_impedance=math.sqrt(inductance / capacitance),
        speed=1.0 / math.sqrt(inductance * capacitance),
    )


# ==================== Waveform evaluation ====================

def heaviside(x):
    """Unit step with u(0) = 1 (right-continuous); vectorised."""
    return np.where(np.asarray(x, dtype=float) >= 0.0, 1.0, 0.0)


def waveform_value(waveform: Waveform, t):
    """
    Evaluate v_s(t).

    Args:
        waveform: Step or pulse
        t: A time in seconds or an array of times

    Returns:
        A float for scalar t, otherwise an array shaped like t
    """
    t_arr = np.asarray(t, dtype=float)
    if isinstance(waveform, Step):
        value = waveform.v0 * heaviside(t_arr - waveform.tc)
    else:
        value = waveform.v0 * (heaviside(t_arr - waveform.ta) - heaviside(t_arr - waveform.tb))
    if value.ndim == 0:
        return float(value)
    return value


def shift_waveform(waveform: Waveform, delay: float) -> Waveform:
    """Delay a waveform by moving its edges: the time-domain translation theorem."""
    _require(_is_real(delay) and delay >= 0, "delay", "must be a finite value >= 0")
    if delay == 0:
        return waveform
    if isinstance(waveform, Step):
        return replace(waveform, tc=waveform.tc + delay)
    return replace(waveform, ta=waveform.ta + delay, tb=waveform.tb + delay)


def scale_waveform(waveform: Waveform, factor: float) -> Waveform:
    """Same edges, amplitude multiplied by factor."""
    return replace(waveform, v0=waveform.v0 * factor)
