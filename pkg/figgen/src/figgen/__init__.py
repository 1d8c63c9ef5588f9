"""Turn entanglement-scan CSV tables into publication-style figures."""

from .figures import FigureSpec, render_plane, render_spin
from .reader import (
    COLUMNS,
    HEADER,
    MEASURES,
    MalformedCsv,
    plane_grid,
    read_rows,
    spin_curves,
)

__all__ = [
    "COLUMNS",
    "HEADER",
    "MEASURES",
    "FigureSpec",
    "MalformedCsv",
    "plane_grid",
    "read_rows",
    "render_plane",
    "render_spin",
    "spin_curves",
]

__version__ = "0.1.0"
