"""
Simulation Configuration

Environment-driven defaults for the tline command-line front end. Values set
in a run-configuration file or on the command line take precedence over
everything here.

Environment Variables:
- TLINE_GRID_SAMPLES: Samples per trace when a config omits grid.n (default: 2000)
- TLINE_FDTD_NX: FDTD cells along the line when a config omits fdtd.nx (default: 1024)
- TLINE_OUTPUT_DIR: Directory for CSV/SVG/report artifacts (default: ./out)
- TLINE_EMIT: Comma list of artifacts to write: csv, svg, report (default: all three)
- TLINE_METHODS: Comma list of methods when a config omits run.methods (default: analytic)
- TLINE_LOG_DIR: Directory for timestamped log files (default: ./logs)
- TLINE_LOG_LEVEL: Root log level (default: INFO)
- TLINE_GUARD_STEPS: Grid steps excluded around discontinuities in comparisons (default: 2)
- TLINE_WORKERS: Thread pool size used to run methods concurrently (default: 3)
- TLINE_DEFAULT_ECHOES: Round trips covered by the default time window (default: 10)
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env file BEFORE reading any os.getenv() calls
load_dotenv()


def _split_list(value: str) -> list:
    """Split a comma list into stripped, non-empty items."""
    return [item.strip() for item in value.split(",") if item.strip()]


TLINE_CONFIG = {
    # Sampling
    "grid_samples": int(os.getenv("TLINE_GRID_SAMPLES", "2000")),
    "default_echoes": int(os.getenv("TLINE_DEFAULT_ECHOES", "10")),

    # FDTD oracle
    "fdtd_nx": int(os.getenv("TLINE_FDTD_NX", "1024")),

    # Run defaults
    "methods": _split_list(os.getenv("TLINE_METHODS", "analytic")),
    "emit": _split_list(os.getenv("TLINE_EMIT", "csv,svg,report")),
    "output_dir": os.getenv("TLINE_OUTPUT_DIR", "./out"),
    "workers": int(os.getenv("TLINE_WORKERS", "3")),

    # Comparison
    "guard_steps": int(os.getenv("TLINE_GUARD_STEPS", "2")),

    # Logging
    "log_dir": os.getenv("TLINE_LOG_DIR", "./logs"),
    "log_level": os.getenv("TLINE_LOG_LEVEL", "INFO"),
}
