"""Tests for run-configuration parsing, serialization and overrides."""

import pytest

from tline.config import TLINE_CONFIG
from tline.errors import UnsupportedFormulaError, ValidationError
from tline.model import Inductive, Open, Pulse, Resistive, Step
from tline.runconfig import RunConfig, apply_overrides, parse_config, read_pairs, serialize_config
from tline.runner import run_methods

MINIMAL = """
# Reference line, open load
line.length_m = 8
line.zc_ohm = 50
line.v0_fraction_c = 0.7
load.kind = open
wave.kind = step
wave.v0_v = 1
wave.tc_s = 1e-7   # 0.1 µs
run.methods = analytic
"""


def _with(text: str, **replacements) -> str:
    pairs = read_pairs(text)
    for key, value in replacements.items():
        pairs[key.replace("__", ".")] = value
    return "".join(f"{k} = {v}\n" for k, v in pairs.items())


class TestParseConfig:
    """Grammar, defaults and validation"""

    def test_minimal_config(self):
        config = parse_config(MINIMAL)
        scenario = config.scenario
        assert scenario.line.length == 8.0
        assert scenario.source_impedance == 50.0
        assert isinstance(scenario.termination, Open)
        assert scenario.waveform == Step(v0=1.0, tc=1e-7)
        assert config.methods == ("analytic",)
        assert config.grid.t_start == 0.0
        assert config.grid.n_samples == TLINE_CONFIG["grid_samples"]
        assert config.grid.t_end == pytest.approx(1e-7 + TLINE_CONFIG["default_echoes"] * scenario.line.round_trip_time)
        assert config.fdtd_nx == TLINE_CONFIG["fdtd_nx"]
        assert config.emit == tuple(TLINE_CONFIG["emit"])

    def test_inductive_load(self):
        text = _with(MINIMAL, load__kind="inductive", load__l_h="3e-6")
        assert parse_config(text).scenario.termination == Inductive(3e-6)

    def test_pulse_end_before_start_names_tb(self):
        text = MINIMAL.replace("wave.kind = step", "wave.kind = pulse").replace(
            "wave.tc_s = 1e-7   # 0.1 µs", "wave.ta_s = 65e-9\nwave.tb_s = 50e-9"
        )
        with pytest.raises(ValidationError) as excinfo:
            parse_config(text)
        assert excinfo.value.key == "wave.tb_s"
        assert "tb" in str(excinfo.value)

    def test_pulse(self):
        text = MINIMAL.replace("wave.kind = step", "wave.kind = pulse").replace(
            "wave.tc_s = 1e-7   # 0.1 µs", "wave.ta_s = 50e-9\nwave.tb_s = 65e-9"
        )
        assert parse_config(text).scenario.waveform == Pulse(v0=1.0, ta=50e-9, tb=65e-9)

    def test_speed_in_meters_per_second(self):
        text = MINIMAL.replace("line.v0_fraction_c = 0.7", "line.v0_m_per_s = 2e8")
        assert parse_config(text).scenario.line.speed == 2e8

    @pytest.mark.parametrize("text, key", [
        (MINIMAL + "line.colour = red\n", "line.colour"),
        (MINIMAL.replace("line.zc_ohm = 50\n", ""), "line.zc_ohm"),
        (MINIMAL.replace("line.zc_ohm = 50", "line.zc_ohm = fifty"), "line.zc_ohm"),
        (MINIMAL.replace("line.zc_ohm = 50", "line.zc_ohm = -50"), "line.zc_ohm"),
        (MINIMAL.replace("line.length_m = 8", "line.length_m = 0"), "line.length_m"),
        (MINIMAL + "line.zc_ohm = 75\n", "line.zc_ohm"),
        (MINIMAL.replace("load.kind = open", "load.kind = lossy"), "load.kind"),
        (MINIMAL.replace("load.kind = open", "load.kind = resistive"), "load.r_ohm"),
        (MINIMAL + "load.r_ohm = 75\n", "load.r_ohm"),
        (MINIMAL + "source.zg_ohm = -1\n", "source.zg_ohm"),
        (MINIMAL + "grid.n = 1\n", "grid.n"),
        (MINIMAL + "grid.t_end_s = 0\n", "grid.t_end_s"),
        (MINIMAL + "fdtd.nx = 4\n", "fdtd.nx"),
        (MINIMAL.replace("run.methods = analytic", "run.methods = spice"), "run.methods"),
        (MINIMAL + "run.emit = pdf\n", "run.emit"),
        (MINIMAL + "line.v0_m_per_s = 2e8\n", "line.v0_fraction_c"),
        (MINIMAL.replace("line.v0_fraction_c = 0.7", "line.v0_fraction_c = 1.2"), "line.v0_fraction_c"),
    ])
    def test_errors_name_the_key(self, text, key):
        with pytest.raises(ValidationError) as excinfo:
            parse_config(text)
        assert excinfo.value.key == key

    def test_line_without_equals(self):
        with pytest.raises(ValidationError) as excinfo:
            parse_config(MINIMAL + "just words\n")
        assert "line" in excinfo.value.key

    def test_methods_all_skips_bounce_for_reactive(self):
        text = _with(MINIMAL, load__kind="capacitive", load__c_f="1e-9", run__methods="all")
        assert parse_config(text).methods == ("analytic", "fdtd")

    def test_methods_all_skips_analytic_for_unmatched_reactive(self):
        text = _with(MINIMAL, load__kind="inductive", load__l_h="3e-6", source__zg_ohm="100", run__methods="all")
        assert parse_config(text).methods == ("fdtd",)

    def test_methods_in_canonical_order(self):
        text = _with(MINIMAL, run__methods="fdtd, analytic, bounce")
        assert parse_config(text).methods == ("analytic", "bounce", "fdtd")

    def test_run_config_requires_methods(self):
        config = parse_config(MINIMAL)
        with pytest.raises(ValidationError):
            RunConfig(config.scenario, config.grid, methods=())


class TestSerialize:
    """serialize_config is the inverse of parse_config"""

    @pytest.mark.parametrize("extra", [
        {},
        {"load.kind": "resistive", "load.r_ohm": "75.5", "source.zg_ohm": "1000"},
        {"load.kind": "capacitive", "load.c_f": "1e-9", "run.methods": "analytic,fdtd", "fdtd.nx": "2048"},
        {"grid.t_start_s": "1e-9", "grid.t_end_s": "3e-7", "grid.n": "123", "run.emit": "csv", "run.out": "elsewhere"},
    ])
    def test_round_trip(self, extra):
        config = parse_config(apply_overrides(MINIMAL, extra))
        assert parse_config(serialize_config(config)) == config

    def test_round_trip_path_with_inner_spaces(self):
        config = parse_config(apply_overrides(MINIMAL, {"run.out": "my runs/out 1"}))
        assert config.output_path == "my runs/out 1"
        assert parse_config(serialize_config(config)) == config

    @pytest.mark.parametrize("path", ["out#1", " out", "out\nnext", ""])
    def test_unserializable_output_path_rejected(self, path):
        config = parse_config(MINIMAL)
        with pytest.raises(ValidationError) as excinfo:
            RunConfig(config.scenario, config.grid, methods=("analytic",), output_path=path)
        assert excinfo.value.key == "run.out"

    def test_round_trip_random(self, random_scenarios):
        for scenario, grid in random_scenarios(25):
            config = RunConfig(scenario, grid, methods=("analytic", "bounce"))
            assert parse_config(serialize_config(config)) == config


class TestOverrides:
    """--dotted.key value layering"""

    def test_override_value(self):
        text = apply_overrides(MINIMAL, {"source.zg_ohm": "1000"})
        assert parse_config(text).scenario.source_impedance == 1000.0

    def test_switching_load_kind_drops_stale_parameter(self):
        base = apply_overrides(MINIMAL, {"load.kind": "resistive", "load.r_ohm": "75"})
        assert parse_config(base).scenario.termination == Resistive(75.0)
        switched = apply_overrides(base, {"load.kind": "short"})
        assert "load.r_ohm" not in switched
        assert parse_config(switched).scenario.termination.kind == "short"

    def test_comment_marker_in_value_rejected(self):
        with pytest.raises(ValidationError) as excinfo:
            apply_overrides(MINIMAL, {"run.out": "out#1"})
        assert excinfo.value.key == "run.out"

    def test_switching_speed_form(self):
        text = apply_overrides(MINIMAL, {"line.v0_m_per_s": "1e8"})
        assert parse_config(text).scenario.line.speed == 1e8

    def test_unknown_override(self):
        with pytest.raises(ValidationError) as excinfo:
            apply_overrides(MINIMAL, {"line.width": "3"})
        assert excinfo.value.key == "line.width"

    def test_explicit_inapplicable_method_parses(self):
        # Applicability is enforced when methods run, with exit code 2
        text = apply_overrides(MINIMAL, {"load.kind": "inductive", "load.l_h": "3e-6", "run.methods": "bounce"})
        config = parse_config(text)
        with pytest.raises(UnsupportedFormulaError):
            run_methods(config)
