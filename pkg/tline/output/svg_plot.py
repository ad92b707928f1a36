"""
SVG Trace Plot

Line chart of v_g(t) with time in µs and voltage in V, one line per method.
Rendering goes through a standalone matplotlib Figure (no pyplot state), with
a fixed hash salt and no date stamp so identical inputs give identical bytes.
"""

import logging
from pathlib import Path
from typing import Dict, Optional

import matplotlib
from matplotlib.figure import Figure

from ..model import Trace
from ._traces import check_traces

# Get logger for this module
logger = logging.getLogger(__name__)

# Line styles per method so overlapping traces stay distinguishable
STYLES = {
    "analytic": {"color": "tab:blue", "linestyle": "-", "linewidth": 1.6},
    "bounce": {"color": "tab:orange", "linestyle": "--", "linewidth": 1.2},
    "fdtd": {"color": "tab:green", "linestyle": ":", "linewidth": 1.4},
}

_RC = {"svg.hashsalt": "tline", "svg.fonttype": "none"}


def emit_svg(traces: Dict[str, Trace], path, title: Optional[str] = None) -> Path:
    """
    Render labeled traces as a self-contained SVG line chart.

    Args:
        traces: Method name to Trace, all on one grid
        path: Destination file
        title: Optional chart title

    Returns:
        The written path
    """
    check_traces(traces)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    with matplotlib.rc_context(_RC):
        fig = Figure(figsize=(8, 4.5))
        ax = fig.subplots()
        for name, trace in traces.items():
            ax.plot(trace.times * 1e6, trace.samples, label=name, **STYLES.get(name, {}))
        ax.set_xlabel("t (µs)")
        ax.set_ylabel("v_g (V)")
        if title:
            ax.set_title(title)
        ax.grid(True, alpha=0.3)
        ax.legend(loc="best")
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})

    logger.info(f"📈 SVG written: {path}")
    return path
