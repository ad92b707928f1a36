"""
Comparison Report

Pairwise differences between traces of the same scenario on one grid.
Samples within a guard band around every waveform edge and echo arrival
are left out: a sampled edge can disagree by the full step height at the
edge sample without any method being wrong.
"""

import itertools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from rich.console import Console
from rich.table import Table

from .analytic import discontinuities
from .config import TLINE_CONFIG
from .errors import ValidationError
from .model import Scenario, Trace

# Get logger for this module
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairError:
    """Error statistics for one method pair."""

    first: str
    second: str
    max_abs: float
    rms: float
    excluded: int
    compared: int


@dataclass(frozen=True)
class ComparisonReport:
    """
    Per-pair errors in volts.

    Attributes:
        pairs: One entry per method pair, in method order
        n_samples: Samples per trace
        guard_steps: Grid steps excluded on each side of a discontinuity
    """

    pairs: List[PairError] = field(default_factory=list)
    n_samples: int = 0
    guard_steps: int = 2

    def pair(self, first: str, second: str) -> PairError:
        for entry in self.pairs:
            if {entry.first, entry.second} == {first, second}:
                return entry
        raise KeyError(f"{first} vs {second}")

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "pair": f"{p.first} vs {p.second}",
                    "max_abs_V": p.max_abs,
                    "rms_V": p.rms,
                    "excluded": p.excluded,
                    "compared": p.compared,
                }
                for p in self.pairs
            ],
            columns=["pair", "max_abs_V", "rms_V", "excluded", "compared"],
        )

    def to_text(self) -> str:
        frame = self.to_frame()
        header = f"Comparison over {self.n_samples} samples, guard band ±{self.guard_steps} grid steps\n"
        if frame.empty:
            return header + "(single method: nothing to compare)\n"
        body = frame.to_string(index=False, float_format=lambda x: f"{x:.3e}")
        return header + body + "\n"


def guard_mask(scenario: Scenario, trace: Trace, guard_steps: int) -> np.ndarray:
    """True for samples at least guard_steps grid steps away from every discontinuity."""
    t = trace.times
    keep = np.ones(len(trace), dtype=bool)
    if len(trace) == 0:
        return keep
    band = guard_steps * trace.dt * (1.0 + 1e-9)
    for edge in discontinuities(scenario, float(t[-1]) + band):
        keep &= np.abs(t - edge) > band
    return keep


def compare(traces: Dict[str, Trace], scenario: Scenario, guard_steps: Optional[int] = None) -> ComparisonReport:
    """
    Max-abs and RMS differences for every pair of traces.

    Args:
        traces: Method name to Trace, at least two, all on one grid
        scenario: Scenario the traces were computed for (gives the discontinuity times)
        guard_steps: Grid steps excluded around discontinuities (default TLINE_CONFIG)

    Raises:
        ValidationError: fewer than two traces, mismatched grids, or nothing left to compare
    """
    if guard_steps is None:
        guard_steps = TLINE_CONFIG["guard_steps"]
    if len(traces) < 2:
        raise ValidationError("traces", "comparison needs at least two traces")
    names = list(traces)
    reference = traces[names[0]]
    for name in names[1:]:
        if not reference.same_grid(traces[name]):
            raise ValidationError("traces", f"{name} is not on the same grid as {names[0]}")

    keep = guard_mask(scenario, reference, guard_steps)
    compared = int(keep.sum())
    if compared == 0:
        raise ValidationError("traces", "every sample falls inside the discontinuity guard band")

    pairs = []
    for first, second in itertools.combinations(names, 2):
        diff = (traces[first].samples - traces[second].samples)[keep]
        pairs.append(PairError(
            first=first,
            second=second,
            max_abs=float(np.max(np.abs(diff))),
            rms=float(np.sqrt(np.mean(diff * diff))),
            excluded=len(reference) - compared,
            compared=compared,
        ))
        logger.info(f"📊 {first} vs {second}: max {pairs[-1].max_abs:.3e} V, rms {pairs[-1].rms:.3e} V")
    return ComparisonReport(pairs=pairs, n_samples=len(reference), guard_steps=guard_steps)


def render_report(report: ComparisonReport, console: Console, title: str = "Method comparison") -> None:
    """Print the report as a rich table."""
    table = Table(title=title)
    table.add_column("Pair", style="cyan")
    table.add_column("Max |Δ| (V)", justify="right")
    table.add_column("RMS (V)", justify="right")
    table.add_column("Excluded", justify="right")
    table.add_column("Compared", justify="right")
    for p in report.pairs:
        table.add_row(f"{p.first} vs {p.second}", f"{p.max_abs:.3e}", f"{p.rms:.3e}", str(p.excluded), str(p.compared))
    console.print(table)


def write_report(path, summary: str, report: Optional[ComparisonReport]) -> Path:
    """Write a plain-text report: scenario summary followed by the comparison table."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = summary.rstrip("\n") + "\n\n"
    text += report.to_text() if report is not None else "(single method: nothing to compare)\n"
    path.write_text(text, encoding="utf-8", newline="\n")
    return path
