"""
tline

Transient response of lossless transmission lines: closed-form Laplace-domain
solutions for v_g(t) at the generator, checked against a bounce-diagram
lattice and an FDTD integration of the telegrapher equations.
"""

from .analytic import SamplingGrid, transient
from .errors import PoleError, TlineError, UnsupportedFormulaError, ValidationError
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
    Trace,
)

__all__ = [
    'LineSpec',
    'Resistive',
    'Open',
    'Short',
    'Inductive',
    'Capacitive',
    'Step',
    'Pulse',
    'Scenario',
    'Trace',
    'SamplingGrid',
    'transient',
    'TlineError',
    'ValidationError',
    'UnsupportedFormulaError',
    'PoleError',
]
