"""Tests for the line model: types, reflection coefficients and waveforms."""

import math

import numpy as np
import pytest

from tline.errors import UnsupportedFormulaError, ValidationError
from tline.model import (
    OPEN,
    SPEED_OF_LIGHT,
    Capacitive,
    Inductive,
    LineSpec,
    Open,
    Pulse,
    Resistive,
    Scenario,
    Short,
    Step,
    Trace,
    heaviside,
    line_from_per_unit_length,
    per_unit_length,
    reflection_coefficient,
    scale_waveform,
    shift_waveform,
    source_reflection_coefficient,
    termination_reflection,
    waveform_value,
)


class TestLineSpec:
    """Construction and derived times"""

    def test_round_trip_of_reference_line(self, reference_line):
        assert reference_line.round_trip_time * 1e9 == pytest.approx(76.24, abs=0.01)
        assert reference_line.round_trip_time == 2.0 * reference_line.transit_time

    @pytest.mark.parametrize("kwargs, key", [
        (dict(length=0.0, char_impedance=50.0, speed=1e8), "length"),
        (dict(length=1.0, char_impedance=-5.0, speed=1e8), "char_impedance"),
        (dict(length=1.0, char_impedance=50.0, speed=1.01 * SPEED_OF_LIGHT), "speed"),
        (dict(length=math.nan, char_impedance=50.0, speed=1e8), "length"),
    ])
    def test_rejects_invalid_fields(self, kwargs, key):
        with pytest.raises(ValidationError) as excinfo:
            LineSpec(**kwargs)
        assert excinfo.value.key == key

    def test_speed_of_light_is_allowed(self):
        assert LineSpec(1.0, 50.0, SPEED_OF_LIGHT).speed == SPEED_OF_LIGHT

    def test_fraction_of_c(self):
        line = LineSpec.from_fraction_of_c(8.0, 50.0, 0.7)
        assert line.speed == pytest.approx(0.7 * SPEED_OF_LIGHT)
        with pytest.raises(ValidationError):
            LineSpec.from_fraction_of_c(8.0, 50.0, 1.5)


class TestReflection:
    """Γ = (Z − Z_c)/(Z + Z_c) and its exact limits"""

    def test_open_short_and_matched(self):
        assert reflection_coefficient(OPEN, 50.0) == 1.0
        assert reflection_coefficient(math.inf, 50.0) == 1.0
        assert reflection_coefficient(0.0, 50.0) == -1.0
        assert reflection_coefficient(50.0, 50.0) == 0.0

    def test_reference_generator(self, fig4a):
        assert source_reflection_coefficient(fig4a) == pytest.approx(0.904762, abs=1e-6)
        assert source_reflection_coefficient(fig4a) == pytest.approx(19.0 / 21.0, abs=1e-15)

    def test_range(self, rng):
        for z in rng.uniform(0.0, 1e6, size=200):
            assert -1.0 <= reflection_coefficient(z, 50.0) <= 1.0

    def test_increases_with_load_impedance(self, rng):
        loads = np.sort(np.concatenate([[0.0, 50.0], rng.uniform(0.0, 1e6, size=500)]))
        gammas = np.array([reflection_coefficient(z, 50.0) for z in loads] + [reflection_coefficient(OPEN, 50.0)])
        assert np.all(np.diff(gammas) >= 0.0)
        assert gammas[0] == -1.0 and gammas[-1] == 1.0

    def test_negative_impedance_rejected(self):
        with pytest.raises(ValidationError):
            reflection_coefficient(-1.0, 50.0)

    def test_termination_reflection(self):
        assert termination_reflection(Open(), 50.0) == 1.0
        assert termination_reflection(Short(), 50.0) == -1.0
        assert termination_reflection(Resistive(150.0), 50.0) == pytest.approx(0.5)
        with pytest.raises(UnsupportedFormulaError):
            termination_reflection(Inductive(1e-6), 50.0)


class TestPerUnitLength:
    """L' = Z_c/v_0, C' = 1/(Z_c·v_0) and back"""

    def test_reference_values(self, reference_line):
        params = per_unit_length(reference_line)
        assert params.inductance == pytest.approx(50.0 / reference_line.speed)
        assert params.capacitance == pytest.approx(1.0 / (50.0 * reference_line.speed))
        assert math.sqrt(params.inductance / params.capacitance) == pytest.approx(50.0)
        assert 1.0 / math.sqrt(params.inductance * params.capacitance) == pytest.approx(reference_line.speed)

    def test_inverse(self, reference_line):
        params = per_unit_length(reference_line)
        rebuilt = line_from_per_unit_length(params.inductance, params.capacitance, reference_line.length)
        assert rebuilt.char_impedance == pytest.approx(reference_line.char_impedance, rel=1e-12)
        assert rebuilt.speed == pytest.approx(reference_line.speed, rel=1e-12)


class TestWaveforms:
    """Evaluation, shifting and scaling of step and pulse"""

    def test_heaviside_is_right_continuous(self):
        np.testing.assert_array_equal(heaviside([-1e-30, 0.0, 1e-30]), [0.0, 1.0, 1.0])

    def test_step_value(self):
        step = Step(v0=2.0, tc=1e-9)
        assert waveform_value(step, 0.0) == 0.0
        assert waveform_value(step, 1e-9) == 2.0
        assert isinstance(waveform_value(step, 5e-9), float)

    def test_pulse_value(self):
        pulse = Pulse(v0=1.0, ta=50e-9, tb=65e-9)
        values = waveform_value(pulse, np.array([49e-9, 50e-9, 60e-9, 65e-9, 70e-9]))
        np.testing.assert_array_equal(values, [0.0, 1.0, 1.0, 0.0, 0.0])

    def test_pulse_end_must_follow_start(self):
        with pytest.raises(ValidationError) as excinfo:
            Pulse(v0=1.0, ta=50e-9, tb=50e-9)
        assert excinfo.value.key == "tb"

    def test_negative_step_time_rejected(self):
        with pytest.raises(ValidationError):
            Step(v0=1.0, tc=-1e-9)

    def test_shift_moves_edges(self):
        # Dyadic times keep the additions exact
        pulse = Pulse(v0=1.0, ta=0.25, tb=0.5)
        shifted = shift_waveform(pulse, 0.125)
        assert shifted.edges == (0.375, 0.625)
        t = np.arange(0, 64) / 64.0
        np.testing.assert_array_equal(waveform_value(shifted, t), waveform_value(pulse, t - 0.125))

    def test_zero_shift_returns_same_waveform(self):
        step = Step(v0=1.0, tc=1e-9)
        assert shift_waveform(step, 0.0) is step

    def test_negative_shift_rejected(self):
        with pytest.raises(ValidationError):
            shift_waveform(Step(v0=1.0), -1.0)

    def test_scale(self):
        assert scale_waveform(Step(v0=2.0, tc=1.0), 0.5) == Step(v0=1.0, tc=1.0)


class TestScenarioAndTrace:
    """Scenario validation, divider ratio and Trace immutability"""

    def test_divider_ratio(self, fig4a):
        assert fig4a.divider_ratio == pytest.approx(1.0 / 21.0)

    def test_negative_source_impedance_rejected(self, reference_line):
        with pytest.raises(ValidationError):
            Scenario(reference_line, -1.0, Open(), Step(v0=1.0))

    def test_reactive_fields_validated(self):
        with pytest.raises(ValidationError):
            Inductive(0.0)
        with pytest.raises(ValidationError):
            Capacitive(-1e-9)

    def test_trace_is_read_only_copy(self):
        data = np.array([0.0, 1.0, 2.0])
        trace = Trace(t0=0.0, dt=0.5, samples=data)
        data[0] = 9.0
        assert trace.samples[0] == 0.0
        with pytest.raises(ValueError):
            trace.samples[0] = 1.0
        np.testing.assert_allclose(trace.times, [0.0, 0.5, 1.0])

    def test_trace_rejects_nan(self):
        with pytest.raises(ValidationError):
            Trace(t0=0.0, dt=1.0, samples=[0.0, math.nan])

    def test_same_grid(self):
        a = Trace(0.0, 1e-9, np.zeros(4))
        assert a.same_grid(Trace(0.0, 1e-9, np.ones(4)))
        assert not a.same_grid(Trace(0.0, 1e-9, np.ones(5)))
        assert not a.same_grid(Trace(0.0, 2e-9, np.ones(4)))
