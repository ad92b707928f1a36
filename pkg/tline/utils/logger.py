"""
Run Logger

Per-run transcript written next to the artifacts (`<out>/run.log`), one
`HH:MM:SS [TAG] message` line per entry: scenario summary, methods run or
skipped, artifacts written and the comparison table.
"""

from datetime import datetime
from pathlib import Path
from typing import Dict, Optional

from ..model import Inductive, Capacitive, Pulse, Resistive, Step


class RunLogger:
    """Logger for one simulation run"""

    def __init__(self, log_file):
        """
        Initialize the run logger.

        Args:
            log_file: Path to the log file
        """
        self.log_file = Path(log_file)
        self.log_file.parent.mkdir(parents=True, exist_ok=True)

        # Clear existing log file if it exists
        if self.log_file.exists():
            self.log_file.unlink()

    def _get_timestamp(self) -> str:
        """Get current timestamp in HH:MM:SS format"""
        return datetime.now().strftime("%H:%M:%S")

    def _write_log(self, message: str):
        """Append a message to the log file"""
        with open(self.log_file, 'a', encoding='utf-8') as f:
            f.write(f"{message}\n")

    def log(self, tag: str, message: str):
        self._write_log(f"{self._get_timestamp()} [{tag}] {message}")

    def log_scenario(self, config):
        """
        Log the scenario summary block at the start of a run.

        Args:
            config: RunConfig being executed
        """
        self._write_log("=" * 70)
        self.log("SCENARIO", "")
        self._write_log("=" * 70)
        self._write_log(scenario_summary(config))

    def log_method(self, method: str, n_samples: int, elapsed: float):
        self.log("METHOD", f"{method}: {n_samples} samples in {elapsed:.3f} s")

    def log_skipped(self, method: str, reason: str):
        self.log("SKIPPED", f"{method}: {reason}")

    def log_artifact(self, kind: str, path):
        self.log("ARTIFACT", f"{kind}: {path}")

    def log_comparison(self, report_text: str):
        self.log("COMPARISON", "")
        for line in report_text.rstrip("\n").splitlines():
            self._write_log(f"   {line}")

    def log_error(self, message: str):
        self.log("ERROR", message)


def scenario_summary(config) -> str:
    """Multi-line, human-readable description of a RunConfig."""
    scenario = config.scenario
    line, termination, waveform = scenario.line, scenario.termination, scenario.waveform

    if isinstance(termination, Resistive):
        load = f"resistive {termination.r:g} Ω"
    elif isinstance(termination, Inductive):
        load = f"inductive {termination.l:g} H"
    elif isinstance(termination, Capacitive):
        load = f"capacitive {termination.c:g} F"
    else:
        load = termination.kind

    if isinstance(waveform, Step):
        wave = f"step {waveform.v0:g} V at {waveform.tc:g} s"
    elif isinstance(waveform, Pulse):
        wave = f"pulse {waveform.v0:g} V from {waveform.ta:g} s to {waveform.tb:g} s"
    else:
        wave = str(waveform)

    rows: Dict[str, Optional[str]] = {
        "Line": f"ℓ = {line.length:g} m, Z_c = {line.char_impedance:g} Ω, v_0 = {line.speed:.6g} m/s",
        "Round trip": f"{line.round_trip_time:.6g} s",
        "Generator": f"Z_g = {scenario.source_impedance:g} Ω",
        "Load": load,
        "Waveform": wave,
        "Grid": f"{config.grid.t_start:g} s to {config.grid.t_end:g} s, {config.grid.n_samples} samples",
        "Methods": ", ".join(config.methods),
        "FDTD cells": str(config.fdtd_nx),
    }
    return "\n".join(f"   {name + ':':<12s} {value}" for name, value in rows.items())
