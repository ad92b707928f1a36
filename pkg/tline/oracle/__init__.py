"""
Time-Domain Oracles

Two solvers that share no code path with the closed forms:
- bounce: event-driven reflection lattice (resistive, open and short loads)
- fdtd: leapfrog telegrapher integration (every termination)
"""

from .bounce import BounceEvent, Direction, bounce_events, simulate_bounce
from .fdtd import FdtdSolver, FdtdState, resample_nearest, simulate_fdtd

__all__ = [
    "BounceEvent",
    "Direction",
    "bounce_events",
    "simulate_bounce",
    "FdtdSolver",
    "FdtdState",
    "resample_nearest",
    "simulate_fdtd",
]
