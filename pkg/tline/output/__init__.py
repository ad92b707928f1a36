"""Trace artifacts: CSV tables and SVG plots"""

from .csv_writer import emit_csv
from .svg_plot import emit_svg

__all__ = ['emit_csv', 'emit_svg']
