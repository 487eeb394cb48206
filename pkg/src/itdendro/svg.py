"""Static SVG rendering: dendrograms with cap-shaped links, and 2-d scatters.

Output is deterministic: identical inputs produce byte-identical
documents. Leaves are placed by the recursive order that walks the
final merge downward, left child subtree before right child subtree;
large trees simply pack leaves at sub-pixel pitch.
"""

from __future__ import annotations

import numpy as np

from .dendro import MergeTable
from .partition import Assignment

PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
]
GRAY = "#555555"
THRESHOLD_COLOR = "#d62728"


def _fmt(x: float) -> str:
    return format(float(x), ".2f")


def leaf_order(z: MergeTable) -> list[int]:
    """Leaves in drawing order: depth-first from the final merge, left first."""
    n = z.n_leaves
    if n == 1:
        return [0]
    order: list[int] = []
    stack = [2 * n - 2]
    while stack:
        node = stack.pop()
        if node < n:
            order.append(node)
        else:
            left, right, _ = z.rows[node - n]
            stack.append(right)  # popped after left
            stack.append(left)
    return order


def _uniform_clusters(z: MergeTable, coloring: Assignment | None) -> dict[int, int]:
    """node id -> cluster id, for nodes whose leaves share one cluster."""
    if coloring is None:
        return {}
    uniform: dict[int, int] = {
        leaf: int(coloring.cluster_of[leaf]) for leaf in range(z.n_leaves)
    }
    for k, (left, right, _) in enumerate(z.rows):
        cl, cr = uniform.get(left), uniform.get(right)
        if cl is not None and cl == cr:
            uniform[z.n_leaves + k] = cl
    return uniform


def render_dendrogram_svg(z: MergeTable, highlight: float | None = None,
                          coloring: Assignment | None = None,
                          width: int = 800, height: int = 500) -> str:
    n = z.n_leaves
    margin = 45.0
    plot_w = width - 2 * margin
    plot_h = height - 2 * margin
    max_h = max(z.heights, default=0.0)
    y_scale = plot_h / max_h if max_h > 0 else 0.0

    order = leaf_order(z)
    slot = {leaf: k for k, leaf in enumerate(order)}
    pitch = plot_w / max(n - 1, 1)
    x = {leaf: margin + slot[leaf] * pitch for leaf in order}
    top = {leaf: 0.0 for leaf in order}

    def ypix(h: float) -> float:
        return height - margin - h * y_scale

    uniform = _uniform_clusters(z, coloring)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]

    # y axis with a handful of ticks
    parts.append(
        f'<line x1="{_fmt(margin)}" y1="{_fmt(margin)}" x2="{_fmt(margin)}" '
        f'y2="{_fmt(height - margin)}" stroke="#999" stroke-width="1"/>'
    )
    if max_h > 0:
        for k in range(5):
            hv = max_h * k / 4
            y = ypix(hv)
            parts.append(
                f'<line x1="{_fmt(margin - 4)}" y1="{_fmt(y)}" '
                f'x2="{_fmt(margin)}" y2="{_fmt(y)}" stroke="#999" stroke-width="1"/>'
            )
            parts.append(
                f'<text x="{_fmt(margin - 7)}" y="{_fmt(y + 3)}" font-size="10" '
                f'text-anchor="end" fill="#333">{format(hv, ".4g")}</text>'
            )

    for k, (left, right, h) in enumerate(z.rows):
        node = n + k
        xl, xr = x[left], x[right]
        yl, yr = ypix(top[left]), ypix(top[right])
        yh = ypix(h)
        cluster = uniform.get(node)
        color = PALETTE[cluster % len(PALETTE)] if cluster is not None else GRAY
        parts.append(
            f'<path d="M {_fmt(xl)} {_fmt(yl)} L {_fmt(xl)} {_fmt(yh)} '
            f'L {_fmt(xr)} {_fmt(yh)} L {_fmt(xr)} {_fmt(yr)}" '
            f'fill="none" stroke="{color}" stroke-width="1.2"/>'
        )
        x[node] = (xl + xr) / 2.0
        top[node] = h

    if n <= 40:
        for leaf in order:
            parts.append(
                f'<text x="{_fmt(x[leaf])}" y="{_fmt(height - margin + 14)}" '
                f'font-size="10" text-anchor="middle" fill="#333">{leaf}</text>'
            )

    if highlight is not None and max_h > 0:
        y = ypix(highlight)
        parts.append(
            f'<line x1="{_fmt(margin)}" y1="{_fmt(y)}" x2="{_fmt(width - margin)}" '
            f'y2="{_fmt(y)}" stroke="{THRESHOLD_COLOR}" stroke-width="1" '
            f'stroke-dasharray="6,4"/>'
        )
        parts.append(
            f'<text x="{_fmt(width - margin + 3)}" y="{_fmt(y + 3)}" font-size="10" '
            f'fill="{THRESHOLD_COLOR}">{format(highlight, ".6g")}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_scatter_svg(coords: np.ndarray, coloring: Assignment | None = None,
                       width: int = 520, height: int = 520) -> str:
    coords = np.asarray(coords, dtype=np.float64)
    margin = 25.0
    lo = coords.min(axis=0)
    hi = coords.max(axis=0)
    span = np.where(hi > lo, hi - lo, 1.0)
    scale = min((width - 2 * margin) / span[0], (height - 2 * margin) / span[1])

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for i, (px, py) in enumerate(coords):
        cx = margin + (px - lo[0]) * scale
        cy = height - margin - (py - lo[1]) * scale
        if coloring is not None:
            color = PALETTE[int(coloring.cluster_of[i]) % len(PALETTE)]
        else:
            color = GRAY
        parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="2.2" fill="{color}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
