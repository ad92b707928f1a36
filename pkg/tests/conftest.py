"""Shared fixtures: the reference line, figure presets and seeded random scenarios."""

import numpy as np
import pytest

from tline.analytic import SamplingGrid, transient
from tline.config import TLINE_CONFIG
from tline.model import LineSpec, Open, Pulse, Resistive, Scenario, Short, Step
from tline.presets import run_preset


@pytest.fixture
def reference_line():
    """8 m, 50 Ω line with v_0 = 0.7c."""
    return LineSpec.from_fraction_of_c(8.0, 50.0, 0.7)


@pytest.fixture
def fig4a(reference_line):
    return Scenario(reference_line, 1000.0, Open(), Step(v0=1.0, tc=1e-7))


@pytest.fixture
def fig4b(reference_line):
    return Scenario(reference_line, 1000.0, Short(), Step(v0=1.0, tc=1e-7))


@pytest.fixture
def preset():
    """run_preset, for tests parametrized over preset names."""
    return run_preset


@pytest.fixture
def rng():
    return np.random.default_rng(20240229)


@pytest.fixture
def sample_at():
    """Value of the analytic solution at one instant."""

    def _sample(scenario, t):
        grid = SamplingGrid(t, t + 1e-12, 2)
        return float(transient(scenario, grid).samples[0])

    return _sample


def random_resistive_scenario(rng):
    """Random resistive scenario with its grid, covering 2 to 8 round trips after onset."""
    line = LineSpec.from_fraction_of_c(
        length=rng.uniform(0.5, 20.0),
        char_impedance=rng.uniform(20.0, 200.0),
        fraction=rng.uniform(0.3, 1.0),
    )
    choice = rng.integers(3)
    if choice == 0:
        termination = Open()
    elif choice == 1:
        termination = Short()
    else:
        termination = Resistive(rng.uniform(0.0, 1e4))

    round_trip = line.round_trip_time
    v0 = rng.uniform(0.1, 5.0) * rng.choice([-1.0, 1.0])
    if rng.random() < 0.5:
        waveform = Step(v0=v0, tc=rng.uniform(0.0, 2.0) * round_trip)
    else:
        ta = rng.uniform(0.0, 1.0) * round_trip
        waveform = Pulse(v0=v0, ta=ta, tb=ta + rng.uniform(0.05, 1.0) * round_trip)

    scenario = Scenario(line, rng.uniform(1.0, 1e4), termination, waveform)
    t_end = waveform.onset + rng.uniform(2.0, 8.0) * round_trip
    return scenario, SamplingGrid(0.0, t_end, 600)


@pytest.fixture
def random_scenarios(rng):
    """Factory: n random resistive (scenario, grid) pairs from the seeded generator."""
    return lambda n: [random_resistive_scenario(rng) for _ in range(n)]


@pytest.fixture
def isolated_output(tmp_path, monkeypatch):
    """Send default output and log directories into tmp_path."""
    monkeypatch.setitem(TLINE_CONFIG, "output_dir", str(tmp_path / "out"))
    monkeypatch.setitem(TLINE_CONFIG, "log_dir", str(tmp_path / "logs"))
    return tmp_path
