"""Straightened cap-to-cap flights through mirrored copies of the table.

Reflections off the horizontal walls are replaced by straight flights
through vertically stacked copies of the table.  Geometric level k occupies
unfolded heights [k, k+1]; even copies are translates, odd copies are
mirrored.  Publicly reported levels use the coding sign convention: a block
whose first wall collision is on the bottom wall has a POSITIVE level
difference, so public level = -(geometric level).

For semistadium tables the flat vertical cap is handled by mirroring the
whole table about it; all flights are then cap-to-cap in the doubled table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoCollision
from .geometry import (
    CAP_IDS,
    LineSegment,
    PhasePoint,
    Table,
)


@dataclass(frozen=True)
class LiftedSegment:
    """One straight flight between lifted cap copies.

    ``source`` and ``target`` are (cap_id, level, r) triples with levels in
    the coding sign convention.  ``wall_collisions`` lists the folded wall
    reflections as (wall_id, x) in flight order.
    """

    source: tuple
    target: tuple
    argument: float
    wall_collisions: tuple
    crossed_midline: bool = False

    @property
    def level_difference(self) -> int:
        return self.target[1] - self.source[1]


def lift_y(y: float, k: int) -> float:
    """Unfolded height of table point height y placed in geometric level k."""
    return k + y if k % 2 == 0 else k + 1.0 - y


def unlift_ray(origin, direction, k: int):
    """Map an unfolded ray into the frame of geometric level copy k."""
    x, ybar = origin
    dx, dy = direction
    if k % 2 == 0:
        return (x, ybar - k), (dx, dy)
    return (x, k + 1.0 - ybar), (dx, -dy)


def fold_unfolded_y(ybar: float):
    """Geometric level and table height of an unfolded height."""
    k = math.floor(ybar)
    y = ybar - k
    if k % 2 == 1:
        y = 1.0 - y
    return k, y


def doubled_table(table: Table) -> Table:
    """Mirror a semistadium about its flat vertical cap into a full table."""
    if table.table_class != "semistadium":
        raise DomainError("only semistadium tables can be doubled")
    vcap = table.vertical_cap_id()
    x0 = float(table.curve(vcap).p0[0])
    curved_id = "right" if vcap == "left" else "left"
    cap = table.curve(curved_id)
    if not hasattr(cap, "mirrored_about"):
        raise DomainError("doubling supports line and circular-arc caps only")
    if vcap == "left":
        new_left, new_right = cap.mirrored_about(x0), cap
    else:
        new_left, new_right = cap, cap.mirrored_about(x0)
    wb = table.wall_bottom
    xs = sorted([wb.p0[0], wb.p1[0], 2 * x0 - wb.p0[0], 2 * x0 - wb.p1[0]])
    lo, hi = xs[0], xs[-1]
    return Table(
        wall_bottom=LineSegment((lo, 0.0), (hi, 0.0), interior_side=1),
        wall_top=LineSegment((lo, 1.0), (hi, 1.0), interior_side=-1),
        cap_left=new_left,
        cap_right=new_right,
        table_class="full",
        eps=table.eps,
    )


def _direction_sign(cap_id: str) -> float:
    return 1.0 if cap_id == "left" else -1.0


def _table_span(table: Table) -> float:
    return (table.wall_bottom.length + table.cap_left.length
            + table.cap_right.length)


def cast_to_cap_copies(table: Table, origin, direction, target_cap: str,
                       restrict=None, level: int | None = None):
    """First intersection of an unfolded ray with lifted copies of a cap.

    Returns (geometric level, arclength s on the base cap, travel t,
    unfolded hit point).  ``restrict`` optionally limits s to a subrange;
    ``level`` restricts the search to one geometric level.
    """
    cap = table.curve(target_cap)
    d = np.asarray(direction, dtype=float)
    d = d / math.hypot(d[0], d[1])
    span = _table_span(table)
    kmax = min(
        int(math.ceil((span + 2.0) * abs(d[1]) / max(abs(d[0]), 1e-12))) + 2,
        1000)
    levels = range(-kmax, kmax + 1) if level is None else (level,)
    best = None
    for k in levels:
        o_k, d_k = unlift_ray(origin, d, k)
        for t, s in cap.ray_hits(o_k, d_k, tmin=1e-9):
            if restrict is not None and not (
                    restrict[0] - 1e-9 <= s <= restrict[1] + 1e-9):
                continue
            if best is None or t < best[2]:
                best = (k, s, t)
    if best is None:
        raise NoCollision(
            f"unfolded ray missed all lifted copies of the {target_cap} cap")
    k, s, t = best
    hit = (origin[0] + t * d[0], origin[1] + t * d[1])
    return k, s, t, hit


def _wall_crossings(origin, hit):
    """Folded wall collisions along a straight unfolded flight."""
    y0, y1 = origin[1], hit[1]
    x0, x1 = origin[0], hit[0]
    if y1 == y0:
        return ()
    lo, hi = sorted((y0, y1))
    ms = range(math.ceil(lo), math.floor(hi) + 1)
    out = []
    for m in ms:
        if m == y0 or m == y1:
            continue
        frac = (m - y0) / (y1 - y0)
        x = x0 + frac * (x1 - x0)
        wall = "bottom" if m % 2 == 0 else "top"
        out.append((frac, wall, float(x)))
    out.sort()
    return tuple((wall, x) for _, wall, x in out)


def unfold_flight(table: Table, start: PhasePoint,
                  outgoing_arg: float) -> LiftedSegment:
    """One straight lifted flight from a cap collision.

    ``outgoing_arg`` is the argument of the lifted outgoing line; the flight
    travels toward the opposite cap.  Levels are reported in the coding
    convention (positive when the first folded wall hit is the bottom wall).
    """
    if abs(outgoing_arg) >= math.pi / 2:
        raise DomainError("|outgoing argument| must be below pi/2")
    crossed = False
    work = table
    start_cap = start.arc
    if table.table_class == "semistadium":
        work = doubled_table(table)
        vcap = table.vertical_cap_id()
        if start.arc == vcap:
            raise DomainError("lifted flights start on the curved cap")
        start_cap = start.arc  # same coordinates in the doubled table
    if start_cap not in CAP_IDS:
        raise DomainError("flight must start on a cap")
    cap = work.curve(start_cap)
    origin_xy = cap.point(start.r)
    sigma = _direction_sign(start_cap)
    d = (sigma * math.cos(outgoing_arg), sigma * math.sin(outgoing_arg))
    origin = (float(origin_xy[0]), float(origin_xy[1]))
    best = None
    for cand in CAP_IDS:
        try:
            k, s, t, hit = cast_to_cap_copies(work, origin, d, cand)
        except NoCollision:
            continue
        if best is None or t < best[3]:
            best = (cand, k, s, t, hit)
    if best is None:
        raise NoCollision("lifted flight missed every cap copy")
    hit_cap, k, s, t, hit = best
    walls = _wall_crossings(origin, hit)
    target_cap = hit_cap
    target_r = s
    if table.table_class == "semistadium":
        vcap = table.vertical_cap_id()
        real_cap = "right" if vcap == "left" else "left"
        x_mirror = float(table.curve(vcap).p0[0])
        crossed = (origin[0] - x_mirror) * (hit[0] - x_mirror) < 0.0
        if hit_cap == vcap:
            # the hit landed on the mirror copy; fold it back
            _, y_fold = fold_unfolded_y(hit[1])
            folded_xy = (2.0 * x_mirror - hit[0], y_fold)
            target_r = table.curve(real_cap).param_of_point(folded_xy)
            target_cap = real_cap
        else:
            target_cap = real_cap
    level = -k  # coding sign convention
    return LiftedSegment(
        source=(start.arc, 0, float(start.r)),
        target=(target_cap, level, float(target_r)),
        argument=float(outgoing_arg),
        wall_collisions=walls,
        crossed_midline=crossed,
    )


def level_differences(table: Table, orbit) -> tuple:
    """Signed wall-reflection counts of the cap-to-cap blocks of an orbit.

    The sign is positive when the block's first wall collision is on the
    bottom wall, negative for the top wall.
    """
    if not orbit:
        raise DomainError("empty orbit")
    for p in orbit:
        if p.arc not in ("bottom", "top") and p.arc not in CAP_IDS:
            raise DomainError(f"collision on unknown arc {p.arc!r}")
    if orbit[0].arc not in CAP_IDS or orbit[-1].arc not in CAP_IDS:
        raise DomainError("orbit must start and end on a cap")
    diffs = []
    count = 0
    sign = 0
    started = False
    for p in orbit:
        if p.arc in CAP_IDS:
            if started:
                diffs.append(sign * count)
            count = 0
            sign = 0
            started = True
        else:
            if count == 0:
                sign = 1 if p.arc == "bottom" else -1
            count += 1
    return tuple(diffs)
