"""Run transcript and method-selection utilities"""

from .constraints import MethodConstraints
from .logger import RunLogger

__all__ = ['RunLogger', 'MethodConstraints']
