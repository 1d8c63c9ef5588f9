"""Figure assembly: CSV tables in, image files out.

No physics happens here; every number plotted comes straight from the
input tables.
"""

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .reader import plane_grid, read_rows, spin_curves

PI_TICKS = (0.0, np.pi / 4, np.pi / 2, 3 * np.pi / 4, np.pi)
PI_LABELS = ("0", "$\\pi/4$", "$\\pi/2$", "$3\\pi/4$", "$\\pi$")
ALPHA_TICKS = (0.0, np.pi / 2, np.pi, 3 * np.pi / 2, 2 * np.pi)
ALPHA_LABELS = ("0", "$\\pi/2$", "$\\pi$", "$3\\pi/2$", "$2\\pi$")

# caption legend: measure -> (colour, line style, legend text)
VECTOR_STYLES = (
    ("f3", "red", "-", "$F_3$"),
    ("c1_23", "blue", "--", "$C_{1(23)}$"),
    ("c2_13", "green", "--", "$C_{2(13)}=C_{3(12)}$"),
    ("c23", "purple", ":", "$C_{23}$"),
    ("m1", "orange", ":", "$M_i=C_{1(23)}^2$"),
)
TENSOR_STYLES = (("f3", "black", "-", "$F_3$ (tensor)"),)


@dataclass(frozen=True)
class FigureSpec:
    """Layout and output description shared by both figure kinds."""

    output: str
    layout: tuple = (1, 1)
    titles: tuple = ()
    color_bounds: tuple = (0.0, 1.0)
    colormap: str = "viridis"
    dpi: int = 150
    panel_size: tuple = (4.0, 3.4)

    def __post_init__(self):
        rows, cols = self.layout
        if rows < 1 or cols < 1:
            raise ValueError("layout must have at least one panel")
        # fixed scale keeps panels comparable
        if tuple(self.color_bounds) != (0.0, 1.0):
            raise ValueError("color scale is fixed to [0, 1]")
        object.__setattr__(self, "titles", tuple(self.titles))


def _panel_axes(spec, count):
    rows, cols = spec.layout
    if count > rows * cols:
        raise ValueError(f"{count} panels do not fit a {rows}x{cols} layout")
    w, h = spec.panel_size
    fig, axes = plt.subplots(
        rows, cols, figsize=(cols * w, rows * h), squeeze=False
    )
    flat = axes.ravel()
    for ax in flat[count:]:
        ax.set_visible(False)
    return fig, flat[:count]


def _title(spec, k):
    return spec.titles[k] if k < len(spec.titles) else None


def render_plane(csv_paths, spec):
    """Heatmap figure: one panel per plane-scan CSV.

    Unphysical nodes are masked, so the lower-left triangle stays blank.
    """
    if not csv_paths:
        raise ValueError("no input tables")
    fig, axes = _panel_axes(spec, len(csv_paths))
    vmin, vmax = spec.color_bounds
    mesh = None
    for k, (path, ax) in enumerate(zip(csv_paths, axes)):
        axis2, axis3, grid = plane_grid(read_rows(path))
        # theta2 on x: transpose so rows of the image run along theta3
        mesh = ax.pcolormesh(
            axis2,
            axis3,
            grid.T,
            cmap=spec.colormap,
            vmin=vmin,
            vmax=vmax,
            shading="nearest",
        )
        ax.set_xlim(0.0, np.pi)
        ax.set_ylim(0.0, np.pi)
        ax.set_xticks(PI_TICKS, PI_LABELS)
        ax.set_yticks(PI_TICKS, PI_LABELS)
        ax.set_xlabel("$\\theta_2$")
        ax.set_ylabel("$\\theta_3$")
        ax.set_aspect("equal")
        if _title(spec, k):
            ax.set_title(_title(spec, k))
    fig.colorbar(mesh, ax=axes, label="$F_3$", fraction=0.046)
    fig.savefig(spec.output, dpi=spec.dpi, bbox_inches="tight")
    plt.close(fig)
    return spec.output


def render_spin(panels, spec):
    """Line-plot figure of measures against the spin rotation angle.

    Each panel is a sequence of (csv_path, role) pairs with role "vector"
    or "tensor"; the role picks which columns are drawn and how.
    """
    if not panels:
        raise ValueError("no input tables")
    fig, axes = _panel_axes(spec, len(panels))
    for k, (panel, ax) in enumerate(zip(panels, axes)):
        for path, role in panel:
            if role == "vector":
                styles = VECTOR_STYLES
            elif role == "tensor":
                styles = TENSOR_STYLES
            else:
                raise ValueError(f"unknown role {role!r}")
            alpha, curves = spin_curves(read_rows(path))
            for name, colour, dash, label in styles:
                ax.plot(alpha, curves[name], color=colour, ls=dash, label=label)
        ax.set_xlim(0.0, 2.0 * np.pi)
        ax.set_ylim(-0.02, 1.05)
        ax.set_xticks(ALPHA_TICKS, ALPHA_LABELS)
        ax.set_xlabel("$\\alpha$")
        ax.grid(alpha=0.25)
        if _title(spec, k):
            ax.set_title(_title(spec, k))
        if k == 0:
            ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(spec.output, dpi=spec.dpi)
    plt.close(fig)
    return spec.output
