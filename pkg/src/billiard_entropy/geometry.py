"""Billiard tables made of two parallel horizontal walls and two curved caps.

The table sits between the walls y = 0 (bottom) and y = 1 (top).  The caps
close the table on the left and right.  Collisions are boundary states
(arc id, arclength position, reflection angle); the billiard map sends one
collision to the next via a specular reflection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CornerHit,
    DomainError,
    NoCollision,
    TangentialCollision,
)

TANGENCY_TOL = 1e-9        # radians; smaller ray/tangent angles are singular
CORNER_TOL = 1e-9          # length units from an arc endpoint
POSITION_TOL = 1e-12       # bisection tolerance for curve/ray intersections
MAX_EPS = math.pi / 6      # the angle parameter must stay strictly below this

ARC_IDS = ("bottom", "top", "left", "right")
CAP_IDS = ("left", "right")


def fold_line_angle(a: float) -> float:
    """Normalize an angle of an undirected line to (-pi/2, pi/2]."""
    a = math.fmod(a, math.pi)
    if a <= -math.pi / 2:
        a += math.pi
    elif a > math.pi / 2:
        a -= math.pi
    return a


def argument_of_points(p0, p1) -> float:
    """Argument of the line through two points, in (-pi/2, pi/2]."""
    dx = p1[0] - p0[0]
    dy = p1[1] - p0[1]
    if dx == 0.0 and dy == 0.0:
        raise DomainError("degenerate segment has no argument")
    return fold_line_angle(math.atan2(dy, dx))


def reflect_argument(incoming_arg: float, normal_arg: float) -> float:
    """Argument of the outgoing line after a specular reflection.

    Both the incoming line argument and the boundary normal argument must be
    below pi/6 in absolute value; this guarantees the result stays inside
    (-pi/2, pi/2) without wrapping.
    """
    if not abs(incoming_arg) < MAX_EPS:
        raise DomainError(f"|incoming_arg| = {abs(incoming_arg)} >= pi/6")
    if not abs(normal_arg) < MAX_EPS:
        raise DomainError(f"|normal_arg| = {abs(normal_arg)} >= pi/6")
    return 2.0 * normal_arg - incoming_arg


def _unit(v):
    n = math.hypot(v[0], v[1])
    if n == 0.0:
        raise DomainError("zero vector")
    return np.array([v[0] / n, v[1] / n])


def _cross(a, b) -> float:
    return a[0] * b[1] - a[1] * b[0]


class Curve:
    """A C1 boundary arc parametrized by arclength s in [0, length]."""

    kind = "abstract"

    @property
    def length(self) -> float:
        raise NotImplementedError

    def point(self, s: float) -> np.ndarray:
        raise NotImplementedError

    def tangent(self, s: float) -> np.ndarray:
        raise NotImplementedError

    def inward_normal(self, s: float) -> np.ndarray:
        raise NotImplementedError

    def normal_argument(self, s: float) -> float:
        n = self.inward_normal(s)
        return fold_line_angle(math.atan2(n[1], n[0]))

    def ray_hits(self, origin, direction, tmin: float):
        """All (t, s) with origin + t*direction on the curve and t > tmin."""
        raise NotImplementedError

    def param_of_point(self, xy) -> float:
        """Arclength of the curve point closest to xy."""
        raise NotImplementedError


class LineSegment(Curve):
    kind = "line-segment"

    def __init__(self, p0, p1, interior_side: int = 1):
        self.p0 = np.asarray(p0, dtype=float)
        self.p1 = np.asarray(p1, dtype=float)
        chord = self.p1 - self.p0
        self._length = float(np.hypot(*chord))
        if self._length <= 0.0:
            raise DomainError("segment endpoints coincide")
        self._u = chord / self._length
        if interior_side not in (1, -1):
            raise DomainError("interior_side must be +1 or -1")
        self.interior_side = interior_side
        self._n = interior_side * np.array([-self._u[1], self._u[0]])

    @property
    def length(self) -> float:
        return self._length

    def point(self, s: float) -> np.ndarray:
        return self.p0 + s * self._u

    def tangent(self, s: float) -> np.ndarray:
        return self._u.copy()

    def inward_normal(self, s: float) -> np.ndarray:
        return self._n.copy()

    @property
    def is_vertical(self) -> bool:
        return abs(self._u[0]) < 1e-14

    def ray_hits(self, origin, direction, tmin: float):
        o = np.asarray(origin, dtype=float)
        d = np.asarray(direction, dtype=float)
        denom = _cross(d, self._u)
        if abs(denom) < 1e-15:
            return []
        w = self.p0 - o
        t = _cross(w, self._u) / denom
        s = _cross(w, d) / denom
        if t > tmin and -1e-12 <= s <= self._length + 1e-12:
            return [(t, min(max(s, 0.0), self._length))]
        return []

    def param_of_point(self, xy) -> float:
        s = float(np.dot(np.asarray(xy, dtype=float) - self.p0, self._u))
        return min(max(s, 0.0), self._length)

    def mirrored_about(self, x0: float = 0.0) -> "LineSegment":
        m0 = np.array([2.0 * x0 - self.p0[0], self.p0[1]])
        m1 = np.array([2.0 * x0 - self.p1[0], self.p1[1]])
        return LineSegment(m0, m1, -self.interior_side)


class CircularArc(Curve):
    """Arc of a circle, traversed counterclockwise from theta0 to theta1."""

    kind = "circular-arc"

    def __init__(self, center, radius, theta0, theta1,
                 inward_toward_center: bool = True):
        if radius <= 0.0:
            raise DomainError("radius must be positive")
        if not theta1 > theta0:
            raise DomainError("need theta1 > theta0")
        if theta1 - theta0 > 2.0 * math.pi + 1e-12:
            raise DomainError("angular range exceeds a full turn")
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)
        self.theta0 = float(theta0)
        self.theta1 = float(theta1)
        self.inward_toward_center = inward_toward_center

    @property
    def length(self) -> float:
        return self.radius * (self.theta1 - self.theta0)

    def _theta(self, s: float) -> float:
        return self.theta0 + s / self.radius

    def point(self, s: float) -> np.ndarray:
        th = self._theta(s)
        return self.center + self.radius * np.array([math.cos(th), math.sin(th)])

    def tangent(self, s: float) -> np.ndarray:
        th = self._theta(s)
        return np.array([-math.sin(th), math.cos(th)])

    def inward_normal(self, s: float) -> np.ndarray:
        th = self._theta(s)
        radial = np.array([math.cos(th), math.sin(th)])
        return -radial if self.inward_toward_center else radial

    def s_of_theta(self, theta: float) -> float:
        return (theta - self.theta0) * self.radius

    def ray_hits(self, origin, direction, tmin: float):
        o = np.asarray(origin, dtype=float)
        d = _unit(direction)
        w = o - self.center
        b = float(np.dot(w, d))
        c = float(np.dot(w, w)) - self.radius * self.radius
        disc = b * b - c
        if disc < 0.0:
            return []
        sq = math.sqrt(disc)
        hits = []
        for t in (-b - sq, -b + sq):
            if t <= tmin:
                continue
            p = o + t * d
            th = math.atan2(p[1] - self.center[1], p[0] - self.center[0])
            # shift th by multiples of 2*pi into [theta0, theta1]
            k = math.floor((self.theta1 - th) / (2.0 * math.pi))
            th_adj = th + 2.0 * math.pi * k
            if th_adj < self.theta0 - 1e-12:
                th_adj += 2.0 * math.pi
                if th_adj > self.theta1 + 1e-12:
                    continue
            if self.theta0 - 1e-12 <= th_adj <= self.theta1 + 1e-12:
                s = self.s_of_theta(min(max(th_adj, self.theta0), self.theta1))
                hits.append((t, s))
        hits.sort()
        return hits

    def param_of_point(self, xy) -> float:
        p = np.asarray(xy, dtype=float)
        th = math.atan2(p[1] - self.center[1], p[0] - self.center[0])
        k = math.floor((self.theta1 - th) / (2.0 * math.pi))
        th_adj = th + 2.0 * math.pi * k
        if th_adj < self.theta0:
            th_adj += 2.0 * math.pi
        th_adj = min(max(th_adj, self.theta0), self.theta1)
        return self.s_of_theta(th_adj)

    def mirrored_about(self, x0: float = 0.0) -> "CircularArc":
        # reflection about x = x0 maps angle th to pi - th, reversing traversal
        c = np.array([2.0 * x0 - self.center[0], self.center[1]])
        t0 = math.pi - self.theta1
        t1 = math.pi - self.theta0
        return CircularArc(c, self.radius, t0, t1, self.inward_toward_center)


def _hermite(p0, p1, m0, m1, u):
    u2 = u * u
    u3 = u2 * u
    h00 = 2 * u3 - 3 * u2 + 1
    h10 = u3 - 2 * u2 + u
    h01 = -2 * u3 + 3 * u2
    h11 = u3 - u2
    return h00 * p0 + h10 * m0 + h01 * p1 + h11 * m1


def _hermite_d(p0, p1, m0, m1, u):
    u2 = u * u
    d00 = 6 * u2 - 6 * u
    d10 = 3 * u2 - 4 * u + 1
    d01 = -6 * u2 + 6 * u
    d11 = 3 * u2 - 2 * u
    return d00 * p0 + d10 * m0 + d01 * p1 + d11 * m1


class SampledCurve(Curve):
    """C1 curve given by ordered samples with unit tangents, Hermite blended.

    The parametrization uses cumulative chord length, which for gently
    turning curves agrees with arclength to high order.
    """

    kind = "sampled-C1"
    _SUBDIV = 16  # dense cache resolution per segment, used to bracket rays

    def __init__(self, points, tangents, max_turn: float = 0.2,
                 interior_side: int = 1):
        pts = np.asarray(points, dtype=float)
        tan = np.asarray(tangents, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 2 or pts.shape[1] != 2:
            raise DomainError("need at least two 2D sample points")
        if tan.shape != pts.shape:
            raise DomainError("one tangent per sample point required")
        norms = np.hypot(tan[:, 0], tan[:, 1])
        if np.any(norms == 0.0):
            raise DomainError("zero tangent vector")
        tan = tan / norms[:, None]
        chords = np.diff(pts, axis=0)
        seglen = np.hypot(chords[:, 0], chords[:, 1])
        if np.any(seglen == 0.0):
            raise DomainError("consecutive sample points coincide")
        angles = np.arctan2(tan[:, 1], tan[:, 0])
        turn = np.abs(np.diff(np.unwrap(angles)))
        if np.any(turn > max_turn):
            raise DomainError(
                f"tangent turn {turn.max():.3f} rad exceeds cap {max_turn}")
        if interior_side not in (1, -1):
            raise DomainError("interior_side must be +1 or -1")
        self.points = pts
        self.tangents = tan
        self.interior_side = interior_side
        self._seglen = seglen
        self._cum = np.concatenate([[0.0], np.cumsum(seglen)])
        self._build_cache()

    def _build_cache(self):
        ss = []
        for i in range(len(self._seglen)):
            us = np.linspace(0.0, 1.0, self._SUBDIV, endpoint=False)
            ss.append(self._cum[i] + us * self._seglen[i])
        ss.append([self._cum[-1]])
        self._cache_s = np.concatenate(ss)
        self._cache_p = np.array([self.point(s) for s in self._cache_s])

    @property
    def length(self) -> float:
        return float(self._cum[-1])

    def _locate(self, s: float):
        s = min(max(s, 0.0), self.length)
        i = int(np.searchsorted(self._cum, s, side="right")) - 1
        i = min(max(i, 0), len(self._seglen) - 1)
        u = (s - self._cum[i]) / self._seglen[i]
        return i, u

    def point(self, s: float) -> np.ndarray:
        i, u = self._locate(s)
        L = self._seglen[i]
        return _hermite(self.points[i], self.points[i + 1],
                        L * self.tangents[i], L * self.tangents[i + 1], u)

    def tangent(self, s: float) -> np.ndarray:
        i, u = self._locate(s)
        L = self._seglen[i]
        d = _hermite_d(self.points[i], self.points[i + 1],
                       L * self.tangents[i], L * self.tangents[i + 1], u)
        return _unit(d)

    def inward_normal(self, s: float) -> np.ndarray:
        t = self.tangent(s)
        return self.interior_side * np.array([-t[1], t[0]])

    def ray_hits(self, origin, direction, tmin: float):
        o = np.asarray(origin, dtype=float)
        d = _unit(direction)
        f = (self._cache_p[:, 0] - o[0]) * d[1] - (self._cache_p[:, 1] - o[1]) * d[0]
        hits = []
        sign = np.sign(f)
        for i in range(len(f) - 1):
            if sign[i] == 0.0 or sign[i] * sign[i + 1] < 0.0:
                lo, hi = self._cache_s[i], self._cache_s[i + 1]
                flo = f[i]
                # bisect the signed distance from the ray line
                for _ in range(64):
                    if hi - lo < POSITION_TOL:
                        break
                    mid = 0.5 * (lo + hi)
                    p = self.point(mid)
                    fm = (p[0] - o[0]) * d[1] - (p[1] - o[1]) * d[0]
                    if fm == 0.0:
                        lo = hi = mid
                        break
                    if (fm > 0) == (flo > 0):
                        lo, flo = mid, fm
                    else:
                        hi = mid
                s = 0.5 * (lo + hi)
                p = self.point(s)
                t = float(np.dot(p - o, d))
                if t > tmin:
                    hits.append((t, s))
        if sign[-1] == 0.0:
            s = self._cache_s[-1]
            t = float(np.dot(self.point(s) - o, d))
            if t > tmin:
                hits.append((t, s))
        hits.sort()
        return hits

    def param_of_point(self, xy) -> float:
        p = np.asarray(xy, dtype=float)
        d2 = np.sum((self._cache_p - p) ** 2, axis=1)
        i = int(np.argmin(d2))
        lo = self._cache_s[max(i - 1, 0)]
        hi = self._cache_s[min(i + 1, len(self._cache_s) - 1)]
        for _ in range(64):
            if hi - lo < POSITION_TOL:
                break
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            if np.sum((self.point(m1) - p) ** 2) <= np.sum((self.point(m2) - p) ** 2):
                hi = m2
            else:
                lo = m1
        return 0.5 * (lo + hi)


@dataclass(frozen=True)
class PhasePoint:
    """A boundary collision: arc id, arclength position, reflection angle."""

    arc: str
    r: float
    phi: float

    def __post_init__(self):
        if self.arc not in ARC_IDS:
            raise DomainError(f"unknown arc id {self.arc!r}")
        if not abs(self.phi) <= math.pi / 2 + 1e-12:
            raise DomainError(f"|phi| = {abs(self.phi)} > pi/2")


@dataclass(frozen=True)
class TrajectorySegment:
    """One straight flight between two consecutive collisions."""

    start: PhasePoint
    end: PhasePoint
    p0: tuple
    p1: tuple
    argument: float
    length: float


class Table:
    """An immutable billiard table: two horizontal walls plus two caps.

    ``table_class`` is "full" (two curved caps) or "semistadium" (one cap is
    a flat vertical segment).  ``eps`` is the angle parameter; the tracked
    subarc of each curved cap is the portion whose normal argument stays
    within [-eps, eps].  ``cap_gap`` is the horizontal distance between the
    tracked subarcs.
    """

    def __init__(self, wall_bottom: LineSegment, wall_top: LineSegment,
                 cap_left: Curve, cap_right: Curve, table_class: str,
                 eps: float):
        if table_class not in ("full", "semistadium"):
            raise DomainError(f"unknown table class {table_class!r}")
        if not 0.0 < eps < MAX_EPS:
            raise DomainError("eps must satisfy 0 < eps < pi/6")
        for wall, y in ((wall_bottom, 0.0), (wall_top, 1.0)):
            if not isinstance(wall, LineSegment):
                raise DomainError("walls must be line segments")
            if abs(wall.p0[1] - y) > 1e-12 or abs(wall.p1[1] - y) > 1e-12:
                raise DomainError(
                    "walls must lie on y = 0 and y = 1 (unit wall distance)")
        vertical = [cap for cap in (cap_left, cap_right)
                    if isinstance(cap, LineSegment) and cap.is_vertical]
        if table_class == "semistadium" and len(vertical) != 1:
            raise DomainError("semistadium needs exactly one vertical flat cap")
        if table_class == "full" and vertical:
            raise DomainError("full-class caps must be curved")
        self.wall_bottom = wall_bottom
        self.wall_top = wall_top
        self.cap_left = cap_left
        self.cap_right = cap_right
        self.table_class = table_class
        self.eps = float(eps)
        self.tracked = {
            "left": self._tracked_range(cap_left),
            "right": self._tracked_range(cap_right),
        }
        self.cap_gap = self._compute_cap_gap()
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False):
            raise AttributeError("Table is immutable")
        super().__setattr__(name, value)

    # -- assembly helpers -------------------------------------------------

    def _tracked_range(self, cap: Curve):
        """Subarc of a cap with normal argument within [-eps, eps].

        Returns (s_lo, s_hi), or None for a flat vertical cap.
        """
        if isinstance(cap, LineSegment):
            return None
        if isinstance(cap, CircularArc):
            # normal argument is linear in the angle; solve in closed form
            mid_th = self._arc_flat_theta(cap)
            if mid_th is None:
                return None
            lo_th = mid_th - self.eps
            hi_th = mid_th + self.eps
            lo_th = max(lo_th, cap.theta0)
            hi_th = min(hi_th, cap.theta1)
            return (cap.s_of_theta(lo_th), cap.s_of_theta(hi_th))
        grid = np.linspace(0.0, cap.length, 1025)
        alpha = np.array([cap.normal_argument(s) for s in grid])
        i0 = int(np.argmin(np.abs(alpha)))
        lo_i = i0
        while lo_i > 0 and abs(alpha[lo_i - 1]) <= self.eps:
            lo_i -= 1
        hi_i = i0
        while hi_i < len(grid) - 1 and abs(alpha[hi_i + 1]) <= self.eps:
            hi_i += 1
        s_lo = self._refine_band_edge(cap, grid, alpha, lo_i, -1)
        s_hi = self._refine_band_edge(cap, grid, alpha, hi_i, +1)
        return (s_lo, s_hi)

    def _refine_band_edge(self, cap, grid, alpha, i, side):
        j = i + side
        if j < 0 or j >= len(grid):
            return grid[i]
        lo, hi = grid[min(i, j)], grid[max(i, j)]
        for _ in range(64):
            if hi - lo < POSITION_TOL:
                break
            mid = 0.5 * (lo + hi)
            inside = abs(cap.normal_argument(mid)) <= self.eps
            if (side > 0) == inside:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    @staticmethod
    def _arc_flat_theta(cap: CircularArc):
        """Angle on the arc where the normal line is horizontal, if any."""
        for k in range(-2, 3):
            th = k * math.pi
            if cap.theta0 - 1e-12 <= th <= cap.theta1 + 1e-12:
                return min(max(th, cap.theta0), cap.theta1)
        return None

    def _compute_cap_gap(self) -> float:
        def x_extent(cap, rng, take_max):
            if rng is None:
                return cap.p0[0]  # vertical flat cap: constant x
            ss = np.linspace(rng[0], rng[1], 513)
            xs = [cap.point(s)[0] for s in ss]
            return max(xs) if take_max else min(xs)

        left_x = x_extent(self.cap_left, self.tracked["left"], take_max=True)
        right_x = x_extent(self.cap_right, self.tracked["right"], take_max=False)
        gap = right_x - left_x
        if gap <= 0.0:
            raise DomainError("caps overlap horizontally")
        return float(gap)

    # -- queries ----------------------------------------------------------

    def curve(self, arc: str) -> Curve:
        return {"bottom": self.wall_bottom, "top": self.wall_top,
                "left": self.cap_left, "right": self.cap_right}[arc]

    def vertical_cap_id(self):
        for cap_id in CAP_IDS:
            cap = self.curve(cap_id)
            if isinstance(cap, LineSegment) and cap.is_vertical:
                return cap_id
        return None

    def point_xy(self, p: PhasePoint) -> np.ndarray:
        return self.curve(p.arc).point(p.r)

    def outgoing_direction(self, p: PhasePoint) -> np.ndarray:
        n = self.curve(p.arc).inward_normal(p.r)
        c, s = math.cos(p.phi), math.sin(p.phi)
        return np.array([n[0] * c - n[1] * s, n[0] * s + n[1] * c])

    def on_tracked_cap(self, p: PhasePoint, slack: float = 1e-9) -> bool:
        if p.arc not in CAP_IDS:
            return False
        rng = self.tracked[p.arc]
        if rng is None:
            return True
        return rng[0] - slack <= p.r <= rng[1] + slack


def trace_ray(table: Table, origin, direction, tmin: float = TANGENCY_TOL):
    """First boundary hit of a ray: (arc id, travel distance, arclength).

    Raises NoCollision if the ray misses all four tracked arcs, CornerHit
    near an arc endpoint, TangentialCollision for grazing incidence.
    """
    d = _unit(direction)
    best = None
    for arc in ARC_IDS:
        for t, s in table.curve(arc).ray_hits(origin, d, tmin):
            if best is None or t < best[1]:
                best = (arc, t, s)
    if best is None:
        raise NoCollision("ray escaped the tracked boundary arcs")
    arc, t, s = best
    curve = table.curve(arc)
    if s < CORNER_TOL or s > curve.length - CORNER_TOL:
        raise CornerHit(f"hit within {CORNER_TOL} of an endpoint of {arc}")
    n = curve.inward_normal(s)
    if abs(float(np.dot(d, n))) < TANGENCY_TOL:
        raise TangentialCollision(f"grazing incidence on {arc}")
    return arc, t, s


def next_collision(table: Table, p: PhasePoint):
    """The billiard map: next collision and the connecting flight."""
    curve = table.curve(p.arc)
    if not 0.0 <= p.r <= curve.length:
        raise DomainError(f"r = {p.r} outside [0, {curve.length}] on {p.arc}")
    origin = table.point_xy(p)
    d = table.outgoing_direction(p)
    n0 = curve.inward_normal(p.r)
    if float(np.dot(d, n0)) <= 0.0:
        raise DomainError("outgoing direction does not point into the table")
    arc, t, s = trace_ray(table, origin, d)
    hit_curve = table.curve(arc)
    target = origin + t * d
    n = hit_curve.inward_normal(s)
    dn = float(np.dot(d, n))
    d_out = d - 2.0 * dn * n
    phi = math.atan2(_cross(n, d_out), float(np.dot(n, d_out)))
    q = PhasePoint(arc, s, phi)
    seg = TrajectorySegment(
        start=p, end=q,
        p0=(float(origin[0]), float(origin[1])),
        p1=(float(target[0]), float(target[1])),
        argument=argument_of_points(origin, target),
        length=float(t),
    )
    return q, seg


def argument_of(seg: TrajectorySegment) -> float:
    """Argument of a flight's line, in (-pi/2, pi/2]."""
    if seg.length <= 0.0:
        raise DomainError("degenerate segment")
    return argument_of_points(seg.p0, seg.p1)


def simulate(table: Table, p: PhasePoint, n_steps: int):
    """Iterate the billiard map; returns the orbit including the start."""
    orbit = [p]
    segments = []
    for _ in range(n_steps):
        p, seg = next_collision(table, p)
        orbit.append(p)
        segments.append(seg)
    return orbit, segments


def simulate_to_cap_count(table: Table, p: PhasePoint, n_caps: int,
                          max_steps: int = 100_000):
    """Iterate until the orbit contains n_caps cap collisions."""
    orbit = [p]
    segments = []
    caps = 1 if p.arc in CAP_IDS else 0
    while caps < n_caps:
        if len(orbit) > max_steps:
            raise DomainError(f"no {n_caps} cap collisions in {max_steps} steps")
        p, seg = next_collision(table, p)
        orbit.append(p)
        segments.append(seg)
        if p.arc in CAP_IDS:
            caps += 1
    return orbit, segments


# -- constructors ---------------------------------------------------------

_EPS_BUILTIN = MAX_EPS * (1.0 - 1e-9)  # strictly below pi/6


def stadium_table(wall_length: float, eps: float = _EPS_BUILTIN) -> Table:
    """A unit-height stadium: walls of the given length, semicircular caps."""
    if wall_length <= 0.0:
        raise DomainError("wall length must be positive")
    L = wall_length
    return Table(
        wall_bottom=LineSegment((0.0, 0.0), (L, 0.0), interior_side=1),
        wall_top=LineSegment((0.0, 1.0), (L, 1.0), interior_side=-1),
        cap_left=CircularArc((0.0, 0.5), 0.5, math.pi / 2, 3 * math.pi / 2),
        cap_right=CircularArc((L, 0.5), 0.5, -math.pi / 2, math.pi / 2),
        table_class="full",
        eps=eps,
    )


def make_stadium(length: float, width: float) -> Table:
    """Stadium with a rectangular part length x width, rescaled to height 1."""
    if length <= 0.0 or width <= 0.0:
        raise DomainError("stadium dimensions must be positive")
    return stadium_table(length / width)


def make_mushroom(stalk_length: float, cap_radius: float) -> Table:
    """Semistadium model of a mushroom: flat stalk end, circular cap.

    The stalk has vertical size 1 and horizontal size ``stalk_length``; the
    cap is a circular arc of radius ``cap_radius`` >= 1/4 centered on the
    stalk mouth.  The angle parameter solves cap_radius * sin(eps) = 1/4,
    capped strictly below pi/6.
    """
    if stalk_length <= 0.0:
        raise DomainError("stalk length must be positive")
    t = cap_radius
    if t < 0.25:
        raise DomainError("cap radius must be at least 1/4")
    eps = min(math.asin(1.0 / (4.0 * t)), _EPS_BUILTIN)
    L = stalk_length
    return Table(
        wall_bottom=LineSegment((0.0, 0.0), (L, 0.0), interior_side=1),
        wall_top=LineSegment((0.0, 1.0), (L, 1.0), interior_side=-1),
        cap_left=LineSegment((0.0, 0.0), (0.0, 1.0), interior_side=-1),
        cap_right=CircularArc((L, 0.5), t, -math.pi / 2, math.pi / 2),
        table_class="semistadium",
        eps=eps,
    )
