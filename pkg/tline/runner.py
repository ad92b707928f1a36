"""
Method Runner

Runs the configured solution methods for one RunConfig. Methods share only
the immutable Scenario, so they run concurrently in a thread pool; results
come back keyed by method in canonical order (analytic, bounce, fdtd).
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Optional, Tuple

from .analytic import transient
from .config import TLINE_CONFIG
from .model import Trace
from .oracle import simulate_bounce, simulate_fdtd
from .runconfig import RunConfig
from .utils.constraints import METHODS, MethodConstraints

# Get logger for this module
logger = logging.getLogger(__name__)


def _analytic(config: RunConfig) -> Trace:
    return transient(config.scenario, config.grid)


def _bounce(config: RunConfig) -> Trace:
    return simulate_bounce(config.scenario, config.grid.t_end, config.grid)


def _fdtd(config: RunConfig) -> Trace:
    return simulate_fdtd(config.scenario, config.fdtd_nx, config.grid.t_end, config.grid)


METHOD_RUNNERS: Dict[str, Callable[[RunConfig], Trace]] = {
    "analytic": _analytic,
    "bounce": _bounce,
    "fdtd": _fdtd,
}


def _timed(method: str, config: RunConfig):
    started = time.perf_counter()
    trace = METHOD_RUNNERS[method](config)
    elapsed = time.perf_counter() - started
    logger.info(f"✅ {method}: {len(trace)} samples in {elapsed:.3f} s")
    return trace, elapsed


def run_methods(config: RunConfig, workers: Optional[int] = None) -> Dict[str, Trace]:
    """Produce one trace per configured method, all on config.grid, in canonical order."""
    traces, _ = run_methods_timed(config, workers)
    return traces


def run_methods_timed(config: RunConfig, workers: Optional[int] = None) -> Tuple[Dict[str, Trace], Dict[str, float]]:
    """
    Run every configured method concurrently and time each one.

    Args:
        config: Validated run configuration
        workers: Thread pool size (default TLINE_CONFIG["workers"])

    Returns:
        Tuple of (traces, seconds per method), both keyed in canonical method order

    Raises:
        UnsupportedFormulaError: a configured method does not apply to the scenario
    """
    methods = MethodConstraints(config.scenario).resolve(config.methods)
    workers = workers or TLINE_CONFIG["workers"]
    logger.info(f"Running {', '.join(methods)} with {min(workers, len(methods))} worker(s)")

    with ThreadPoolExecutor(max_workers=max(1, min(workers, len(methods)))) as pool:
        futures = {method: pool.submit(_timed, method, config) for method in methods}
        results = {method: futures[method].result() for method in METHODS if method in futures}

    traces = {method: trace for method, (trace, _) in results.items()}
    timings = {method: elapsed for method, (_, elapsed) in results.items()}
    return traces, timings
