"""ASCII and SVG rendering of periodic colorings.

ASCII output is one digit per node in brick rows. SVG output draws one
hexagonal cell per node: the cell is the node's Voronoi region (a
triangle, apex up for one vertex class and apex down for the other)
with its corners trimmed, so each cell's three long edges are shared
exactly with the three graph neighbors. Output bytes are deterministic
for a fixed coloring and window.
"""

from __future__ import annotations

from math import sqrt

from .coloring import PeriodicColoring

# Light-to-dark ramp; index = color. Ten colors bounds the palette.
PALETTE = (
    "#fcf4cf",
    "#f7dd72",
    "#f2a85c",
    "#e36a47",
    "#c43f4b",
    "#93305c",
    "#5f2a63",
    "#39305e",
    "#23254a",
    "#121330",
)

_SCALE = 36.0
_TRIM = 0.125  # corner fraction removed to leave hexagonal cells


def _check_window(
    coloring: PeriodicColoring, window: tuple[int, int] | None
) -> tuple[int, int]:
    if window is None:
        return coloring.H, coloring.W
    rows, cols = window
    if rows < coloring.H or cols < coloring.W:
        raise ValueError(
            f"window {rows}x{cols} is smaller than the fundamental "
            f"domain {coloring.H}x{coloring.W}"
        )
    return rows, cols


def render_ascii(
    coloring: PeriodicColoring, window: tuple[int, int] | None = None
) -> str:
    rows, cols = _check_window(coloring, window)
    return "\n".join(
        "".join(str(coloring.color(r, c)) for c in range(cols))
        for r in range(rows)
    )


def _cell_points(r: int, c: int) -> list[tuple[float, float]]:
    """Hexagon vertices for the cell of node (r, c), in pixel units."""
    s = _SCALE
    x = s * (sqrt(3) / 2.0) * (c + 1)
    if (r + c) % 2 == 0:
        y = s * (1.5 * r + 0.5) + s
        corners = [(x - s * sqrt(3) / 2, y + s * 0.5),
                   (x, y - s),
                   (x + s * sqrt(3) / 2, y + s * 0.5)]
    else:
        y = s * 1.5 * r + s
        corners = [(x - s * sqrt(3) / 2, y - s * 0.5),
                   (x + s * sqrt(3) / 2, y - s * 0.5),
                   (x, y + s)]
    points = []
    for i in range(3):
        ax, ay = corners[i]
        bx, by = corners[(i + 1) % 3]
        points.append((ax + _TRIM * (bx - ax), ay + _TRIM * (by - ay)))
        points.append((bx - _TRIM * (bx - ax), by - _TRIM * (by - ay)))
    return points


def render_svg(
    coloring: PeriodicColoring, window: tuple[int, int] | None = None
) -> str:
    if coloring.k > len(PALETTE):
        raise ValueError(f"palette supports up to {len(PALETTE)} colors")
    rows, cols = _check_window(coloring, window)
    polygons = []
    xs: list[float] = []
    ys: list[float] = []
    for r in range(rows):
        for c in range(cols):
            pts = _cell_points(r, c)
            xs.extend(p[0] for p in pts)
            ys.extend(p[1] for p in pts)
            text = " ".join(f"{px:.2f},{py:.2f}" for px, py in pts)
            fill = PALETTE[coloring.color(r, c)]
            polygons.append(f'<polygon points="{text}" fill="{fill}"/>')
    pad = _SCALE * 0.25
    x0, y0 = min(xs) - pad, min(ys) - pad
    width, height = max(xs) + pad - x0, max(ys) + pad - y0
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.2f} {y0:.2f} {width:.2f} {height:.2f}" '
        f'width="{width:.0f}" height="{height:.0f}">'
    )
    bg = (
        f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{width:.2f}" '
        f'height="{height:.2f}" fill="#ffffff"/>'
    )
    return "\n".join([head, bg, *polygons, "</svg>"])


def render(
    coloring: PeriodicColoring,
    fmt: str = "ascii",
    window: tuple[int, int] | None = None,
) -> str:
    """Render a coloring window as 'ascii' digit rows or an 'svg' image."""
    if fmt == "ascii":
        return render_ascii(coloring, window)
    if fmt == "svg":
        return render_svg(coloring, window)
    raise ValueError(f"unknown format {fmt!r}")
