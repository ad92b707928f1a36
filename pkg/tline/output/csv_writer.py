"""
CSV Trace Writer

One row per grid point: `t_s,v_<method>[,v_<method>...]`, nine significant
digits, LF line endings, no index column.
"""

import logging
from pathlib import Path
from typing import Dict

import pandas as pd

from ..model import Trace
from ._traces import check_traces

# Get logger for this module
logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.9g"


def emit_csv(traces: Dict[str, Trace], path) -> Path:
    """
    Write labeled traces to a CSV file.

    Args:
        traces: Method name to Trace, all on one grid
        path: Destination file

    Returns:
        The written path
    """
    reference = check_traces(traces)
    columns = {"t_s": reference.times}
    columns.update({f"v_{name}": trace.samples for name, trace in traces.items()})
    frame = pd.DataFrame(columns)

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n", encoding="utf-8")
    logger.info(f"💾 CSV written: {path} ({len(frame)} rows)")
    return path
