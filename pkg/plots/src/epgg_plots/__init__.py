"""Rendering for epgg experiment CSVs: cooperation-curve figures and
formatted summary tables.  All numbers come from the input files; this
package computes nothing statistical."""

from .curves import FigureSpec, render_curves
from .io import SchemaError, read_series, read_summary
from .tables import render_tables

__all__ = [
    "FigureSpec",
    "SchemaError",
    "read_series",
    "read_summary",
    "render_curves",
    "render_tables",
]
