"""Deterministic SVG figures: table with orbit, and the unfolded view.

All rendering goes through matplotlib's Agg/SVG backends with a fixed hash
salt and no embedded date, so repeated runs produce byte-identical files.
"""

from __future__ import annotations

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .geometry import ARC_IDS, CAP_IDS, Table  # noqa: E402
from .unfolding import lift_y  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "billiard-entropy"
matplotlib.rcParams["svg.fonttype"] = "none"

_BOUNDARY_SAMPLES = 256


def _curve_xy(curve, n=_BOUNDARY_SAMPLES):
    ss = np.linspace(0.0, curve.length, n)
    pts = np.array([curve.point(s) for s in ss])
    return pts[:, 0], pts[:, 1]


def _draw_table(ax, table: Table, y_shift=0.0, mirror=False, alpha=1.0):
    for arc in ARC_IDS:
        xs, ys = _curve_xy(table.curve(arc))
        if mirror:
            ys = -ys
        color = "tab:blue" if arc in CAP_IDS else "black"
        ax.plot(xs, ys + y_shift, color=color, lw=1.0, alpha=alpha)
    for cap in CAP_IDS:
        rng = table.tracked[cap]
        if rng is None:
            continue
        ss = np.linspace(rng[0], rng[1], 64)
        pts = np.array([table.curve(cap).point(s) for s in ss])
        ys = -pts[:, 1] if mirror else pts[:, 1]
        ax.plot(pts[:, 0], ys + y_shift, color="tab:red", lw=2.0, alpha=alpha)


def _save(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def plot_orbit(table: Table, segments, path: str) -> None:
    """Table boundary with the orbit polyline; tracked subarcs highlighted."""
    fig, ax = plt.subplots(figsize=(8.0, 3.0))
    _draw_table(ax, table)
    if segments:
        xs = [segments[0].p0[0]] + [seg.p1[0] for seg in segments]
        ys = [segments[0].p0[1]] + [seg.p1[1] for seg in segments]
        ax.plot(xs, ys, color="tab:green", lw=0.8)
        ax.plot(xs, ys, ".", color="tab:green", ms=3)
    ax.set_aspect("equal")
    ax.set_axis_off()
    _save(fig, path)


def unfolded_polyline(table: Table, orbit, segments):
    """Unfolded collision points (x, ybar) and the geometric levels used.

    Walks the folded orbit, moving to the adjacent mirrored copy after each
    wall collision.
    """
    k = 0
    pts = []
    levels = {0}
    if segments:
        chain = [(orbit[0], segments[0].p0)] + \
            [(q, seg.p1) for q, seg in zip(orbit[1:], segments)]
    else:
        chain = [(orbit[0], None)]
    for p, xy in chain:
        if xy is None:
            break
        x, y = xy
        ybar = lift_y(y, k)
        pts.append((x, ybar))
        if p.arc in ("bottom", "top"):
            m = round(ybar)
            k = k - 1 if k == m else k + 1
            levels.add(k)
    return pts, sorted(levels)


def plot_unfolded(table: Table, orbit, segments, path: str) -> None:
    """Straightened flight through stacked mirrored copies of the table."""
    pts, levels = unfolded_polyline(table, orbit, segments)
    fig, ax = plt.subplots(figsize=(8.0, max(3.0, 1.5 * len(levels))))
    for k in levels:
        _draw_table(ax, table, y_shift=float(k) if k % 2 == 0 else k + 1.0,
                    mirror=(k % 2 == 1), alpha=0.5)
    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        ax.plot(xs, ys, color="tab:green", lw=0.8)
        ax.plot(xs, ys, ".", color="tab:green", ms=3)
    ax.set_aspect("equal")
    ax.set_axis_off()
    _save(fig, path)
