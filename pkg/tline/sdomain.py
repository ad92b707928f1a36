"""
Complex-Frequency Domain

Evaluation of the generator transforms, the load impedance and reflection
coefficient, the input impedance of a terminated line, and the transfer
function Vg(s)/Vs(s) in closed form, as a truncated echo series, and as a
voltage divider.

Every delay factor is computed as e^(−2sℓ/v_0) (or its reciprocal when
Re(s) < 0) so that no exponential of a large positive argument is formed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .errors import PoleError, ValidationError
from .model import (
    OPEN,
    Inductive,
    LineSpec,
    Open,
    Resistive,
    Scenario,
    Short,
    Step,
    Termination,
    Waveform,
    reflection_coefficient,
    source_reflection_coefficient,
)


POLE_TOLERANCE = 1e-12

# Below this |s·(t_b − t_a)| the pulse transform switches to its Taylor form
_SMALL_ARGUMENT = 1e-5


@dataclass(frozen=True)
class ComplexFreq:
    """The complex frequency s = σ + jω (σ in 1/s, ω in rad/s)."""

    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValidationError("s", "complex frequency components must be finite")

    @classmethod
    def from_complex(cls, value: complex) -> "ComplexFreq":
        return cls(value.real, value.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


SLike = Union[ComplexFreq, complex, float, int]


def _as_complex(s: SLike) -> complex:
    if isinstance(s, ComplexFreq):
        return complex(s)
    value = complex(s)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValidationError("s", "complex frequency components must be finite")
    return value


def _check_pole(denominator: complex, numerator: complex, where: str) -> None:
    magnitude = abs(denominator)
    if magnitude < POLE_TOLERANCE * (1.0 + abs(numerator)):
        raise PoleError(where, magnitude)


def round_trip_factor(line: LineSpec, s: SLike) -> complex:
    """e^(−2sℓ/v_0), the s-domain image of one round-trip delay."""
    z = -_as_complex(s) * line.round_trip_time
    try:
        return cmath.exp(z)
    except OverflowError:
        raise ValidationError("s", "Re(s) is too negative: the round-trip factor overflows") from None


def _tanh_line(line: LineSpec, s: complex) -> complex:
    """tanh(sℓ/v_0) without forming e^(+sℓ/v_0) for large Re(s)."""
    x = s * line.transit_time
    if x.real >= 0:
        e = cmath.exp(-2.0 * x)
        return (1.0 - e) / (1.0 + e)
    e = cmath.exp(2.0 * x)
    return (e - 1.0) / (e + 1.0)


# ==================== Load ====================

def termination_impedance(termination: Termination, s: SLike) -> Union[complex, Open]:
    """
    Load impedance Z_L(s).

    Returns:
        R, sL, 1/(sC) or 0 as a complex number, or the OPEN marker

    Raises:
        PoleError: capacitive load evaluated at s = 0
    """
    s = _as_complex(s)
    if isinstance(termination, Open):
        return OPEN
    if isinstance(termination, Short):
        return 0j
    if isinstance(termination, Resistive):
        return complex(termination.r)
    if isinstance(termination, Inductive):
        return s * termination.l
    if s == 0:
        raise PoleError("capacitive load impedance 1/(sC) at s = 0")
    return 1.0 / (s * termination.c)


def load_reflection(termination: Termination, z_c: float, s: SLike) -> complex:
    """
    Load reflection coefficient Γ_L(s) for any termination.

    Resistive, open and short loads give the real Γ of reflection_coefficient.
    Reactive loads use (sL − Z_c)/(sL + Z_c) and (1 − sCZ_c)/(1 + sCZ_c); the
    capacitive form needs no division by s, so Γ_L(0) = 1 there.
    """
    s = _as_complex(s)
    if isinstance(termination, Open):
        return complex(reflection_coefficient(OPEN, z_c))
    if isinstance(termination, Short):
        return complex(reflection_coefficient(0.0, z_c))
    if isinstance(termination, Resistive):
        return complex(reflection_coefficient(termination.r, z_c))
    if isinstance(termination, Inductive):
        x = s * termination.l
        numerator, denominator = x - z_c, x + z_c
    else:
        x = s * termination.c * z_c
        numerator, denominator = 1.0 - x, 1.0 + x
    _check_pole(denominator, numerator, f"{termination.kind} load reflection")
    return numerator / denominator


def input_impedance(line: LineSpec, termination: Termination, s: SLike) -> complex:
    """
    Impedance looking into a terminated line:
    Z_c·[Z_L + Z_c·tanh(sℓ/v_0)] / [Z_c + Z_L·tanh(sℓ/v_0)].

    An open load uses the limit Z_c/tanh(sℓ/v_0).

    Raises:
        PoleError: the denominator vanishes (line resonance)
    """
    s = _as_complex(s)
    z_c = line.char_impedance
    th = _tanh_line(line, s)
    z_load = termination_impedance(termination, s)
    if isinstance(z_load, Open):
        _check_pole(th, complex(z_c), "open-line input impedance")
        return z_c / th
    numerator = z_load + z_c * th
    denominator = z_c + z_load * th
    _check_pole(denominator, numerator, "input impedance")
    return z_c * (numerator / denominator)


# ==================== Source ====================

def source_transform(waveform: Waveform, s: SLike) -> complex:
    """
    Laplace transform V_s(s) of the generator waveform.

    Step: V_0·e^(−s·t_c)/s. Pulse: (V_0/s)·(e^(−s·t_a) − e^(−s·t_b)), with the
    finite limit V_0·(t_b − t_a) at s = 0.

    Raises:
        PoleError: step evaluated at s = 0
    """
    s = _as_complex(s)
    if isinstance(waveform, Step):
        if s == 0:
            raise PoleError("step transform V_0/s at s = 0")
        return waveform.v0 * cmath.exp(-s * waveform.tc) / s
    width = waveform.tb - waveform.ta
    z = s * width
    if abs(z) < _SMALL_ARGUMENT:
        # (1 − e^(−z))/z = 1 − z/2 + z²/6 − ...
        return waveform.v0 * cmath.exp(-s * waveform.ta) * width * (1.0 - z / 2.0 + z * z / 6.0)
    return (waveform.v0 / s) * (cmath.exp(-s * waveform.ta) - cmath.exp(-s * waveform.tb))


# ==================== Transfer function ====================

def transfer_exact(scenario: Scenario, s: SLike) -> complex:
    """
    Closed-form Vg(s)/Vs(s):
    [Z_c/(Z_g+Z_c)]·(1 + Γ_L·e^(−2sℓ/v_0)) / (1 − Γ_g·Γ_L·e^(−2sℓ/v_0)).

    Reactive loads use Γ_L(s).

    Raises:
        PoleError: the denominator magnitude is below tolerance
    """
    s = _as_complex(s)
    line = scenario.line
    gamma_l = load_reflection(scenario.termination, line.char_impedance, s)
    gamma_g = source_reflection_coefficient(scenario)
    echo = gamma_l * round_trip_factor(line, s)
    numerator = scenario.divider_ratio * (1.0 + echo)
    denominator = 1.0 - gamma_g * echo
    _check_pole(denominator, numerator, "transfer function")
    return numerator / denominator


def transfer_series(scenario: Scenario, s: SLike, n_terms: int) -> complex:
    """
    Echo-series form of Vg(s)/Vs(s) truncated after k = n_terms:
    [Z_c/(Z_g+Z_c)]·[1 + (1+Γ_g)·Σ_{k=0}^{N} Γ_g^k·Γ_L^(k+1)·e^(−2(k+1)sℓ/v_0)].
    """
    if n_terms < 0:
        raise ValidationError("n_terms", "must be >= 0")
    s = _as_complex(s)
    line = scenario.line
    gamma_l = load_reflection(scenario.termination, line.char_impedance, s)
    gamma_g = source_reflection_coefficient(scenario)
    factor = round_trip_factor(line, s)

    term = gamma_l * factor
    ratio = gamma_g * gamma_l * factor
    total = 0j
    for _ in range(n_terms + 1):
        total += term
        term *= ratio
    return scenario.divider_ratio * (1.0 + (1.0 + gamma_g) * total)


def transfer_divider(scenario: Scenario, s: SLike) -> complex:
    """Vg/Vs as the voltage divider Z_in/(Z_g + Z_in) of the equivalent circuit."""
    s = _as_complex(s)
    z_in = input_impedance(scenario.line, scenario.termination, s)
    denominator = scenario.source_impedance + z_in
    _check_pole(denominator, z_in, "generator divider")
    return z_in / denominator


def vg_transform(scenario: Scenario, s: SLike) -> complex:
    """Vg(s) = Vs(s)·Vg(s)/Vs(s)."""
    return source_transform(scenario.waveform, s) * transfer_exact(scenario, s)
