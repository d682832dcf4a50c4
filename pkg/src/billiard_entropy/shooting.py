"""Constructive realization of level-difference itineraries.

A bundle is a one-parameter family of incoming trajectories covering a
lifted cap copy with incoming line arguments bounded by eps.  Refining a
bundle against a target level difference brackets, by bisection, the
parameter subinterval whose one-step image covers the target cap copy.
Iterating left to right over an itinerary and taking the midpoint of the
final interval yields an explicit orbit with the requested differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BisectionStall, DomainError, NoCollision, TargetUnreachable
from .freearc import max_symbol_bound
from .geometry import (
    PhasePoint,
    Table,
    simulate_to_cap_count,
)
from .unfolding import (
    _direction_sign,
    cast_to_cap_copies,
    doubled_table,
    level_differences,
    lift_y,
)

PARAM_TOL = 1e-12
_GRID = 1024  # coarse first-crossing grid before bisection


@dataclass
class CurveBundle:
    """Parametrized family of trajectories incoming to one lifted cap copy.

    ``state(t)`` returns (arclength on the cap, incoming lifted line
    argument) for t in ``interval``.  ``level`` is the geometric level of
    the lifted copy (odd levels are mirrored).
    """

    table: Table
    cap: str
    level: int
    interval: tuple
    state: Callable[[float], tuple]

    def alpha_lifted(self, s: float) -> float:
        a = self.table.curve(self.cap).normal_argument(s)
        return a if self.level % 2 == 0 else -a

    def outgoing_argument(self, t: float) -> float:
        s, inc = self.state(t)
        return 2.0 * self.alpha_lifted(s) - inc

    def lifted_ray(self, t: float):
        """Unfolded origin and direction of the outgoing ray at parameter t."""
        s, inc = self.state(t)
        theta = 2.0 * self.alpha_lifted(s) - inc
        p = self.table.curve(self.cap).point(s)
        origin = (float(p[0]), lift_y(float(p[1]), self.level))
        sigma = _direction_sign(self.cap)
        d = (sigma * math.cos(theta), sigma * math.sin(theta))
        return origin, d, theta


def initial_bundle(table: Table, cap: str = "left") -> CurveBundle:
    """Full-cap bundle of horizontally incoming trajectories at level 0."""
    rng = table.tracked[cap]
    if rng is None:
        raise DomainError(f"cap {cap!r} has no tracked subarc")
    s_lo, s_hi = rng

    def state(t):
        return (s_lo + t * (s_hi - s_lo), 0.0)

    return CurveBundle(table, cap, 0, (0.0, 1.0), state)


def _bisect_scalar(f, lo, hi, flo, tol=PARAM_TOL):
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _argument_window(bundle: CurveBundle, eps: float):
    """Subinterval over which the outgoing argument sweeps [-eps, eps]."""
    a, b = bundle.interval
    ts = np.linspace(a, b, _GRID + 1)
    th = np.array([bundle.outgoing_argument(t) for t in ts])
    inside = np.abs(th) <= eps
    i = 0
    n = len(ts)
    while i < n:
        if not inside[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and inside[j + 1]:
            j += 1
        # boundary signs of the run
        left_sign = None
        right_sign = None
        if i > 0:
            left_sign = 1.0 if th[i - 1] > 0 else -1.0
        elif abs(th[i]) >= eps - 1e-7:
            left_sign = 1.0 if th[i] > 0 else -1.0
        if j < n - 1:
            right_sign = 1.0 if th[j + 1] > 0 else -1.0
        elif abs(th[j]) >= eps - 1e-7:
            right_sign = 1.0 if th[j] > 0 else -1.0
        if left_sign is not None and right_sign is not None \
                and left_sign != right_sign:
            if i > 0:
                target = left_sign * eps
                t_lo = _bisect_scalar(
                    lambda t: bundle.outgoing_argument(t) - target,
                    ts[i - 1], ts[i],
                    bundle.outgoing_argument(ts[i - 1]) - target)
            else:
                t_lo = ts[i]
            if j < n - 1:
                target = right_sign * eps
                t_hi = _bisect_scalar(
                    lambda t: bundle.outgoing_argument(t) - target,
                    ts[j], ts[j + 1],
                    bundle.outgoing_argument(ts[j]) - target)
            else:
                t_hi = ts[j]
            return t_lo, t_hi
        i = j + 1
    raise BisectionStall(
        "outgoing argument never sweeps the full [-eps, eps] band")


def _endpoint_crossings(bundle: CurveBundle, window, targets):
    """Parameters whose rays pass through given unfolded target points."""
    a, b = window
    ts = np.linspace(a, b, _GRID + 1)
    rays = [bundle.lifted_ray(t) for t in ts]

    def miss(ray, E):
        origin, d, _ = ray
        return d[0] * (E[1] - origin[1]) - d[1] * (E[0] - origin[0])

    found = []
    for label, E in targets:
        g = np.array([miss(r, E) for r in rays])
        crossings = []
        for i in range(len(ts) - 1):
            if g[i] == 0.0:
                crossings.append(ts[i])
            elif g[i] * g[i + 1] < 0.0:
                t = _bisect_scalar(
                    lambda t, E=E: miss(bundle.lifted_ray(t), E),
                    ts[i], ts[i + 1], g[i])
                crossings.append(t)
        if not crossings:
            # boundary case: the sweep only just reaches the endpoint
            i = int(np.argmin(np.abs(g)))
            scale = math.hypot(E[0] - rays[i][0][0], E[1] - rays[i][0][1])
            if abs(g[i]) <= 1e-6 * max(scale, 1.0):
                crossings.append(ts[i])
            else:
                raise BisectionStall(
                    f"no ray through the {label} endpoint of the target arc")
        found.append((label, crossings))
    return found


def refine_bundle(table: Table, bundle: CurveBundle,
                  target_j: int) -> CurveBundle:
    """Sub-bundle whose one-step image covers the cap copy at level
    difference ``target_j`` (coding sign convention).

    Raises TargetUnreachable when |target_j| + 1 exceeds the reach
    gap * tan(eps) of the working table.
    """
    eps = table.eps
    reach = table.cap_gap * math.tan(eps)
    if abs(target_j) + 1 > reach + 1e-9:
        raise TargetUnreachable(
            f"|j| + 1 = {abs(target_j) + 1} exceeds reach "
            f"{reach:.6g} = gap * tan(eps)")
    other = "right" if bundle.cap == "left" else "left"
    rng = table.tracked[other]
    if rng is None:
        raise DomainError(f"cap {other!r} has no tracked subarc")
    s_lo, s_hi = rng
    # A positive symbol means the block's first wall hit is the bottom wall.
    # From an even (upright) copy that means moving down one level per hit;
    # from an odd (mirrored) copy the vertical sense is flipped.
    if bundle.level % 2 == 0:
        m_target = bundle.level - target_j
    else:
        m_target = bundle.level + target_j
    window = _argument_window(bundle, eps)
    opp = table.curve(other)
    p_lo = opp.point(s_lo)
    p_hi = opp.point(s_hi)
    E_lo = (float(p_lo[0]), lift_y(float(p_lo[1]), m_target))
    E_hi = (float(p_hi[0]), lift_y(float(p_hi[1]), m_target))
    found = _endpoint_crossings(bundle, window,
                                [("low", E_lo), ("high", E_hi)])
    crossings = sorted(
        (t, label) for label, ts in found for t in ts)
    pair = None
    for (t1, l1), (t2, l2) in zip(crossings, crossings[1:]):
        if l1 != l2:
            pair = (t1, t2)
            break
    if pair is None:
        raise BisectionStall(
            "endpoint rays do not bracket the target cap copy")
    t1, t2 = sorted(pair)

    old_state = bundle.state
    cap = bundle.cap
    level = bundle.level
    work = bundle.table

    def state(t, _old=old_state):
        origin, d, theta = CurveBundle(
            work, cap, level, (t1, t2), _old).lifted_ray(t)
        try:
            _, s2, _, _ = cast_to_cap_copies(
                work, origin, d, other,
                restrict=(s_lo - 1e-7, s_hi + 1e-7), level=m_target)
        except NoCollision as exc:
            raise BisectionStall(
                f"refined ray missed the target cap copy: {exc}") from exc
        return (s2, theta)

    return CurveBundle(work, other, m_target, (t1, t2), state)


def _initial_phase_point(table: Table, cap: str, s: float) -> PhasePoint:
    """Collision on a cap whose incoming trajectory line is horizontal."""
    curve = table.curve(cap)
    n = curve.inward_normal(s)
    sigma = _direction_sign(cap)
    d_in = (-sigma, 0.0)  # arriving against the outgoing horizontal sense
    dn = d_in[0] * n[0] + d_in[1] * n[1]
    d_out = (d_in[0] - 2.0 * dn * n[0], d_in[1] - 2.0 * dn * n[1])
    phi = math.atan2(n[0] * d_out[1] - n[1] * d_out[0],
                     n[0] * d_out[0] + n[1] * d_out[1])
    return PhasePoint(cap, s, phi)


def realize_itinerary(table: Table, ks, eps: float | None = None,
                      N: int | None = None):
    """Billiard orbit whose cap-to-cap blocks have the level differences ks.

    For semistadium tables the construction runs in the mirror-doubled
    table; the returned orbit lives there (use the unfolding helpers to
    fold it back).  Returns (orbit, flight segments, working table).
    """
    ks = tuple(int(k) for k in ks)
    if not ks:
        raise DomainError("empty itinerary")
    work = table if table.table_class == "full" else doubled_table(table)
    if eps is not None and abs(eps - work.eps) > 1e-12:
        raise DomainError("eps must match the table's angle parameter")
    bound = max_symbol_bound(table.cap_gap, table.eps, table.table_class)
    if N is None:
        N = bound
    if N < 1 or N > max(bound, 0):
        raise TargetUnreachable(
            f"alphabet bound N={N} not supported at these parameters "
            f"(max {bound})")
    for k in ks:
        if abs(k) > N:
            raise TargetUnreachable(f"level difference {k} exceeds N={N}")
    bundle = initial_bundle(work, "left")
    for i, j in enumerate(ks):
        try:
            bundle = refine_bundle(work, bundle, j)
        except BisectionStall as exc:
            raise BisectionStall(f"block {i} (symbol {j}): {exc}") from exc
    a, b = bundle.interval
    t_mid = 0.5 * (a + b)
    s0, _ = initial_bundle(work, "left").state(t_mid)
    start = _initial_phase_point(work, "left", s0)
    orbit, segments = simulate_to_cap_count(work, start, len(ks) + 1)
    got = level_differences(work, orbit)
    if got != ks:
        raise BisectionStall(
            f"realized orbit has level differences {got}, wanted {ks}")
    return orbit, segments, work
