"""
Run Configuration

Parsing and serialization of run-configuration files: UTF-8 text with one
`key = value` per line, dotted section keys and `#` comments.

    line.length_m = 8
    line.zc_ohm = 50
    line.v0_fraction_c = 0.7        # or line.v0_m_per_s
    source.zg_ohm = 1000            # default: line.zc_ohm
    load.kind = open                # resistive|open|short|inductive|capacitive
    wave.kind = step                # step|pulse
    wave.v0_v = 1
    wave.tc_s = 1e-7
    run.methods = analytic, fdtd    # or all

Values left out fall back to TLINE_CONFIG; command-line `--<key> <value>`
flags are layered on top of the file by apply_overrides.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .analytic import SamplingGrid
from .config import TLINE_CONFIG
from .errors import ValidationError
from .model import (
    Capacitive,
    Inductive,
    LineSpec,
    Open,
    Pulse,
    Resistive,
    Scenario,
    Short,
    Step,
    Termination,
    Waveform,
)
from .oracle.fdtd import MIN_CELLS
from .utils.constraints import ALL_METHODS, METHODS, MethodConstraints

# Get logger for this module
logger = logging.getLogger(__name__)

EMIT_KINDS = ("csv", "svg", "report")

LOAD_PARAMETERS = {
    "resistive": "load.r_ohm",
    "open": None,
    "short": None,
    "inductive": "load.l_h",
    "capacitive": "load.c_f",
}
WAVE_PARAMETERS = {
    "step": ("wave.tc_s",),
    "pulse": ("wave.ta_s", "wave.tb_s"),
}
SPEED_KEYS = ("line.v0_fraction_c", "line.v0_m_per_s")

KNOWN_KEYS = (
    "line.length_m",
    "line.zc_ohm",
    "line.v0_fraction_c",
    "line.v0_m_per_s",
    "source.zg_ohm",
    "load.kind",
    "load.r_ohm",
    "load.l_h",
    "load.c_f",
    "wave.kind",
    "wave.v0_v",
    "wave.tc_s",
    "wave.ta_s",
    "wave.tb_s",
    "grid.t_start_s",
    "grid.t_end_s",
    "grid.n",
    "fdtd.nx",
    "run.methods",
    "run.emit",
    "run.out",
)

# Model field names reported back under the config key that set them
_FIELD_KEYS = {
    "length": "line.length_m",
    "char_impedance": "line.zc_ohm",
    "source_impedance": "source.zg_ohm",
    "r": "load.r_ohm",
    "l": "load.l_h",
    "c": "load.c_f",
    "v0": "wave.v0_v",
    "tc": "wave.tc_s",
    "ta": "wave.ta_s",
    "tb": "wave.tb_s",
}


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a single `tline` invocation needs.

    Attributes:
        scenario: Line, generator and load
        grid: Output sampling grid
        methods: Methods to run, in canonical order
        fdtd_nx: FDTD cells along the line
        output_path: Directory receiving CSV/SVG/report artifacts
        emit: Artifacts to write
    """

    scenario: Scenario
    grid: SamplingGrid
    methods: Tuple[str, ...]
    fdtd_nx: int = 1024
    output_path: str = "./out"
    emit: Tuple[str, ...] = EMIT_KINDS

    def __post_init__(self):
        if not self.methods:
            raise ValidationError("run.methods", "must name at least one method")
        for method in self.methods:
            if method not in METHODS:
                raise ValidationError("run.methods", f"unknown method '{method}'")
        for kind in self.emit:
            if kind not in EMIT_KINDS:
                raise ValidationError("run.emit", f"unknown artifact '{kind}' (choose from {', '.join(EMIT_KINDS)})")
        if isinstance(self.fdtd_nx, bool) or not isinstance(self.fdtd_nx, int) or self.fdtd_nx < MIN_CELLS:
            raise ValidationError("fdtd.nx", f"must be an integer >= {MIN_CELLS}")
        # Config lines end at '#' and newlines, and values are stripped
        path = str(self.output_path)
        if not path or "#" in path or "\n" in path or "\r" in path or path != path.strip():
            raise ValidationError("run.out", "must be non-empty, without '#', line breaks or surrounding spaces")


# ==================== Text handling ====================

def read_pairs(text: str) -> Dict[str, str]:
    """
    Split config text into raw key/value strings, in file order.

    Raises:
        ValidationError: malformed line, unknown key or duplicate key
    """
    pairs: Dict[str, str] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"line {number}", "expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ValidationError(key, "unknown key")
        if key in pairs:
            raise ValidationError(key, "duplicate key")
        if not value:
            raise ValidationError(key, "missing value")
        pairs[key] = value
    return pairs


def render_pairs(pairs: Dict[str, str]) -> str:
    return "".join(f"{key} = {value}\n" for key, value in pairs.items())


def _split_list(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _number(pairs: Dict[str, str], key: str, default: Optional[float] = None) -> float:
    if key not in pairs:
        if default is None:
            raise ValidationError(key, "missing required key")
        return default
    try:
        value = float(pairs[key])
    except ValueError:
        raise ValidationError(key, f"must be a number, got '{pairs[key]}'") from None
    if not math.isfinite(value):
        raise ValidationError(key, "must be finite")
    return value


def _integer(pairs: Dict[str, str], key: str, default: int) -> int:
    if key not in pairs:
        return default
    try:
        return int(pairs[key])
    except ValueError:
        raise ValidationError(key, f"must be an integer, got '{pairs[key]}'") from None


def _choice(pairs: Dict[str, str], key: str, choices) -> str:
    if key not in pairs:
        raise ValidationError(key, "missing required key")
    value = pairs[key].lower()
    if value not in choices:
        raise ValidationError(key, f"must be one of {', '.join(choices)}, got '{pairs[key]}'")
    return value


def _reject_unused(pairs: Dict[str, str], keys, reason: str) -> None:
    for key in keys:
        if key in pairs:
            raise ValidationError(key, f"not used {reason}")


def _rekeyed(error: ValidationError, fallback: str) -> ValidationError:
    if error.key in KNOWN_KEYS:
        return error
    return ValidationError(_FIELD_KEYS.get(error.key, fallback), error.constraint)


# ==================== Sections ====================

def _parse_line(pairs: Dict[str, str]) -> LineSpec:
    given = [key for key in SPEED_KEYS if key in pairs]
    if len(given) != 1:
        raise ValidationError("line.v0_fraction_c", "exactly one of line.v0_fraction_c and line.v0_m_per_s is required")
    length = _number(pairs, "line.length_m")
    z_c = _number(pairs, "line.zc_ohm")
    try:
        if given[0] == "line.v0_fraction_c":
            return LineSpec.from_fraction_of_c(length, z_c, _number(pairs, "line.v0_fraction_c"))
        return LineSpec(length=length, char_impedance=z_c, speed=_number(pairs, "line.v0_m_per_s"))
    except ValidationError as e:
        raise _rekeyed(e, given[0]) from None


def _parse_termination(pairs: Dict[str, str]) -> Termination:
    kind = _choice(pairs, "load.kind", tuple(LOAD_PARAMETERS))
    needed = LOAD_PARAMETERS[kind]
    _reject_unused(pairs, [k for k in ("load.r_ohm", "load.l_h", "load.c_f") if k != needed], f"by load.kind = {kind}")
    try:
        if kind == "open":
            return Open()
        if kind == "short":
            return Short()
        value = _number(pairs, needed)
        if kind == "resistive":
            return Resistive(value)
        if kind == "inductive":
            return Inductive(value)
        return Capacitive(value)
    except ValidationError as e:
        raise _rekeyed(e, "load.kind") from None


def _parse_waveform(pairs: Dict[str, str]) -> Waveform:
    kind = _choice(pairs, "wave.kind", tuple(WAVE_PARAMETERS))
    unused = [k for other, keys in WAVE_PARAMETERS.items() if other != kind for k in keys]
    _reject_unused(pairs, unused, f"by wave.kind = {kind}")
    v0 = _number(pairs, "wave.v0_v")
    try:
        if kind == "step":
            return Step(v0=v0, tc=_number(pairs, "wave.tc_s", 0.0))
        return Pulse(v0=v0, ta=_number(pairs, "wave.ta_s"), tb=_number(pairs, "wave.tb_s"))
    except ValidationError as e:
        raise _rekeyed(e, "wave.kind") from None


def _parse_grid(pairs: Dict[str, str], scenario: Scenario) -> SamplingGrid:
    # Default window: last edge plus a fixed number of round trips
    default_end = max(scenario.waveform.edges) + TLINE_CONFIG["default_echoes"] * scenario.line.round_trip_time
    return SamplingGrid(
        t_start=_number(pairs, "grid.t_start_s", 0.0),
        t_end=_number(pairs, "grid.t_end_s", default_end),
        n_samples=_integer(pairs, "grid.n", TLINE_CONFIG["grid_samples"]),
    )


def _parse_methods(pairs: Dict[str, str], scenario: Scenario) -> Tuple[str, ...]:
    requested = _split_list(pairs.get("run.methods", ",".join(TLINE_CONFIG["methods"])))
    if not requested:
        raise ValidationError("run.methods", "must name at least one method")
    for method in requested:
        if method != ALL_METHODS and method not in METHODS:
            raise ValidationError("run.methods", f"unknown method '{method}' (choose from {', '.join(METHODS)} or all)")
    if ALL_METHODS in requested:
        return tuple(MethodConstraints(scenario).resolve(requested))
    return tuple(method for method in METHODS if method in requested)


# ==================== Public API ====================

def parse_config(text: str) -> RunConfig:
    """
    Parse and fully validate a run-configuration file.

    Args:
        text: Config file contents

    Returns:
        RunConfig with every default applied

    Raises:
        ValidationError: naming the offending key and the violated constraint
    """
    pairs = read_pairs(text)
    line = _parse_line(pairs)
    try:
        scenario = Scenario(
            line=line,
            source_impedance=_number(pairs, "source.zg_ohm", line.char_impedance),
            termination=_parse_termination(pairs),
            waveform=_parse_waveform(pairs),
        )
    except ValidationError as e:
        raise _rekeyed(e, "source.zg_ohm") from None

    config = RunConfig(
        scenario=scenario,
        grid=_parse_grid(pairs, scenario),
        methods=_parse_methods(pairs, scenario),
        fdtd_nx=_integer(pairs, "fdtd.nx", TLINE_CONFIG["fdtd_nx"]),
        output_path=pairs.get("run.out", TLINE_CONFIG["output_dir"]),
        emit=tuple(_split_list(pairs.get("run.emit", ",".join(TLINE_CONFIG["emit"])))),
    )
    logger.debug(f"Parsed config: {len(pairs)} keys, methods={','.join(config.methods)}")
    return config


def serialize_config(config: RunConfig) -> str:
    """Render a RunConfig as config text that parses back to an equal RunConfig."""
    scenario = config.scenario
    line, termination, waveform = scenario.line, scenario.termination, scenario.waveform
    pairs = {
        "line.length_m": repr(float(line.length)),
        "line.zc_ohm": repr(float(line.char_impedance)),
        "line.v0_m_per_s": repr(float(line.speed)),
        "source.zg_ohm": repr(float(scenario.source_impedance)),
        "load.kind": termination.kind,
    }
    if isinstance(termination, Resistive):
        pairs["load.r_ohm"] = repr(float(termination.r))
    elif isinstance(termination, Inductive):
        pairs["load.l_h"] = repr(float(termination.l))
    elif isinstance(termination, Capacitive):
        pairs["load.c_f"] = repr(float(termination.c))

    pairs["wave.kind"] = waveform.kind
    pairs["wave.v0_v"] = repr(float(waveform.v0))
    if isinstance(waveform, Step):
        pairs["wave.tc_s"] = repr(float(waveform.tc))
    else:
        pairs["wave.ta_s"] = repr(float(waveform.ta))
        pairs["wave.tb_s"] = repr(float(waveform.tb))

    pairs.update({
        "grid.t_start_s": repr(float(config.grid.t_start)),
        "grid.t_end_s": repr(float(config.grid.t_end)),
        "grid.n": str(config.grid.n_samples),
        "fdtd.nx": str(config.fdtd_nx),
        "run.methods": ",".join(config.methods),
        "run.emit": ",".join(config.emit),
        "run.out": config.output_path,
    })
    return render_pairs(pairs)


def apply_overrides(text: str, overrides: Dict[str, str]) -> str:
    """
    Layer `--<key> <value>` command-line values over config text.

    Switching line speed form, load.kind or wave.kind drops the file's
    parameters that belonged to the replaced choice.

    Returns:
        Config text with the overrides applied
    """
    pairs = read_pairs(text)
    for key, value in overrides.items():
        if key not in KNOWN_KEYS:
            raise ValidationError(key, "unknown key")
        if "#" in str(value):
            raise ValidationError(key, "value cannot contain '#'")

    stale: List[str] = []
    if any(key in overrides for key in SPEED_KEYS):
        stale.extend(SPEED_KEYS)
    if "load.kind" in overrides:
        stale.extend(k for k in ("load.r_ohm", "load.l_h", "load.c_f"))
    if "wave.kind" in overrides:
        stale.extend(k for keys in WAVE_PARAMETERS.values() for k in keys)
    for key in stale:
        if key not in overrides:
            pairs.pop(key, None)

    for key, value in overrides.items():
        pairs[key] = str(value).strip()
    return render_pairs(pairs)
