"""Sampled verification of the cap free-arc conditions.

A cap subarc qualifies at angle parameter eps when (a) it is C1, (b) every
point sends all nearly horizontal rays to the opposite cap before any
self-recollision, (c) its normal argument reaches both +eps and -eps, and
(d) it stays clear of the walls.  Condition (b) quantifies over a continuum
of rays, so these certificates are sampled, never proof-grade; the grids
used are recorded in the certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BilliardError, DomainError, NoMarker
from .geometry import (
    CAP_IDS,
    CircularArc,
    Curve,
    LineSegment,
    MAX_EPS,
    POSITION_TOL,
    SampledCurve,
    Table,
    trace_ray,
)

DEFAULT_POSITION_DIVISIONS = 512
DEFAULT_ANGLE_DIVISIONS = 256


@dataclass(frozen=True)
class FreeArcCertificate:
    """Record of a sampled free-arc verification run."""

    arc_id: str
    eps: float
    p_plus: float | None
    p_minus: float | None
    position_step: float
    angle_grid_step: float
    samples_checked: int
    failures: tuple          # (position, angle) witnesses
    notes: tuple             # human-readable failures of conditions (a)/(c)/(d)
    rigorous: bool = False   # always False: sampled, not interval-certified

    @property
    def passed(self) -> bool:
        return not self.failures and not self.notes \
            and self.p_plus is not None and self.p_minus is not None

    def to_text(self) -> str:
        lines = [
            f"arc: {self.arc_id}",
            f"eps: {self.eps:.12g}",
            f"passed: {'yes' if self.passed else 'no'}",
            f"rigorous: {'yes' if self.rigorous else 'no'}",
            f"marker_plus: "
            f"{'-' if self.p_plus is None else format(self.p_plus, '.12g')}",
            f"marker_minus: "
            f"{'-' if self.p_minus is None else format(self.p_minus, '.12g')}",
            f"position_step: {self.position_step:.12g}",
            f"angle_step: {self.angle_grid_step:.12g}",
            f"samples_checked: {self.samples_checked}",
            f"failures: {len(self.failures)}",
        ]
        for r, th in self.failures:
            lines.append(f"  witness r={r:.12g} angle={th:.12g}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"


def _normal_argument_grid(curve: Curve, s_lo: float, s_hi: float, n: int = 2049):
    ss = np.linspace(s_lo, s_hi, n)
    return ss, np.array([curve.normal_argument(s) for s in ss])


def find_marker_points(curve: Curve, eps: float, s_range=None):
    """Positions where the normal argument reaches +eps and -eps.

    Returns (p_plus, p_minus) arclength positions.  Closed form for
    circular arcs; a grid scan with bisection refinement otherwise.
    """
    if not 0.0 < eps < MAX_EPS:
        raise DomainError("eps must satisfy 0 < eps < pi/6")
    s_lo, s_hi = (0.0, curve.length) if s_range is None else s_range
    if isinstance(curve, LineSegment):
        alpha = curve.normal_argument(0.0)
        raise NoMarker(
            f"flat segment has constant normal argument {alpha:.6g}")
    if isinstance(curve, CircularArc):
        # normal argument is theta - k*pi on each branch; solve directly
        flat = Table._arc_flat_theta(curve)
        if flat is not None:
            th_plus = flat + eps
            th_minus = flat - eps
            lo_th = curve.theta0 + s_lo / curve.radius
            hi_th = curve.theta0 + s_hi / curve.radius
            if lo_th - 1e-12 <= th_plus <= hi_th + 1e-12 and \
                    lo_th - 1e-12 <= th_minus <= hi_th + 1e-12:
                return (curve.s_of_theta(th_plus), curve.s_of_theta(th_minus))
        raise NoMarker("arc normal argument range does not reach +-eps")
    ss, alpha = _normal_argument_grid(curve, s_lo, s_hi)

    def crossing(target):
        best = None
        for i in range(len(ss) - 1):
            a, b = alpha[i] - target, alpha[i + 1] - target
            if abs(alpha[i + 1] - alpha[i]) > 1.0:
                continue  # fold discontinuity (+pi/2 -> -pi/2), not a crossing
            if a == 0.0:
                return ss[i]
            if a * b < 0.0:
                lo, hi, flo = ss[i], ss[i + 1], a
                while hi - lo > POSITION_TOL:
                    mid = 0.5 * (lo + hi)
                    fm = curve.normal_argument(mid) - target
                    if fm == 0.0:
                        return mid
                    if (fm > 0.0) == (flo > 0.0):
                        lo, flo = mid, fm
                    else:
                        hi = mid
                return 0.5 * (lo + hi)
        return best

    p_plus = ss[int(np.argmax(alpha))] if alpha.max() >= eps else None
    p_minus = ss[int(np.argmin(alpha))] if alpha.min() <= -eps else None
    if p_plus is None or p_minus is None:
        raise NoMarker("normal argument range does not reach +-eps")
    exact_plus = crossing(eps)
    exact_minus = crossing(-eps)
    return (exact_plus if exact_plus is not None else p_plus,
            exact_minus if exact_minus is not None else p_minus)


def _cap_inward_sign(cap_id: str) -> float:
    return 1.0 if cap_id == "left" else -1.0


def verify_point_free(table: Table, cap_id: str, r: float, eps: float,
                      angle_step: float, max_bounces: int = 10_000):
    """Check that all rays with argument in [-eps, eps] from a cap point
    reach the opposite cap before recolliding with their own cap.

    Returns (passed, witness) where witness is the failing (r, angle) pair
    or None.
    """
    if cap_id not in CAP_IDS:
        raise DomainError(f"unknown cap id {cap_id!r}")
    if angle_step <= 0.0:
        raise DomainError("angle grid step must be positive")
    cap = table.curve(cap_id)
    other = "right" if cap_id == "left" else "left"
    origin = cap.point(r)
    sigma = _cap_inward_sign(cap_id)
    if eps == 0.0:
        angles = [0.0]
    else:
        n = max(2, int(math.ceil(2.0 * eps / angle_step)) + 1)
        angles = np.linspace(-eps, eps, n)
    for theta in angles:
        d = np.array([sigma * math.cos(theta), sigma * math.sin(theta)])
        pos = origin
        direction = d
        ok = None
        try:
            for _ in range(max_bounces):
                arc, t, s = trace_ray(table, pos, direction)
                if arc == cap_id:
                    ok = False
                    break
                if arc == other:
                    ok = True
                    break
                hit_curve = table.curve(arc)
                pos = pos + t * direction
                n_hat = hit_curve.inward_normal(s)
                direction = direction - 2.0 * float(np.dot(direction, n_hat)) * n_hat
        except BilliardError:
            ok = False
        if ok is not True:
            return False, (float(r), float(theta))
    return True, None


def verify_arc_free(table: Table, cap_id: str, eps: float,
                    position_step: float | None = None,
                    angle_step: float | None = None,
                    s_range=None) -> FreeArcCertificate:
    """Assemble a sampled free-arc certificate for a cap subarc.

    Defaults: position step = subarc length / 512, angle step = eps / 256.
    Failures are recorded in the certificate rather than raised.
    """
    if cap_id not in CAP_IDS:
        raise DomainError(f"unknown cap id {cap_id!r}")
    cap = table.curve(cap_id)
    if s_range is None:
        s_range = table.tracked[cap_id]
        if s_range is None:
            s_range = (0.0, cap.length)
    s_lo, s_hi = s_range
    if position_step is None:
        position_step = (s_hi - s_lo) / DEFAULT_POSITION_DIVISIONS
    if angle_step is None:
        angle_step = eps / DEFAULT_ANGLE_DIVISIONS if eps > 0 else 1.0
    notes = []
    # (a) regularity: every curve kind is C1 by construction; sampled curves
    # additionally passed the tangent-turn gate when built.
    if not isinstance(cap, (LineSegment, CircularArc, SampledCurve)):
        notes.append("condition (a): unknown curve kind")
    # (c) marker points
    p_plus = p_minus = None
    try:
        p_plus, p_minus = find_marker_points(cap, eps, s_range=(s_lo, s_hi))
    except NoMarker as exc:
        notes.append(f"condition (c): {exc}")
    # (d) disjointness from the walls
    dist = _min_distance_to_walls(table, cap, s_lo, s_hi)
    if dist <= 1e-12:
        notes.append(
            f"condition (d): subarc touches a wall (distance {dist:.3g})")
    # (b) point-free test over the position grid
    failures = []
    n_pos = max(2, int(math.ceil((s_hi - s_lo) / position_step)) + 1)
    positions = np.linspace(s_lo, s_hi, n_pos)
    # stay strictly inside the subarc so rays do not start at corners
    inset = min(1e-9, (s_hi - s_lo) * 1e-6)
    positions[0] += inset
    positions[-1] -= inset
    samples = 0
    for r in positions:
        samples += 1
        ok, witness = verify_point_free(table, cap_id, float(r), eps,
                                        angle_step)
        if not ok:
            failures.append(witness)
    failures.sort()
    return FreeArcCertificate(
        arc_id=cap_id,
        eps=float(eps),
        p_plus=p_plus,
        p_minus=p_minus,
        position_step=float(position_step),
        angle_grid_step=float(angle_step),
        samples_checked=samples,
        failures=tuple(failures),
        notes=tuple(notes),
        rigorous=False,
    )


def _min_distance_to_walls(table: Table, cap: Curve, s_lo: float,
                           s_hi: float) -> float:
    walls = (table.wall_bottom, table.wall_top)
    ss = np.linspace(s_lo, s_hi, 513)
    best = math.inf
    for s in ss:
        p = cap.point(s)
        for wall in walls:
            sw = wall.param_of_point(p)
            q = wall.point(sw)
            best = min(best, float(math.hypot(p[0] - q[0], p[1] - q[1])))
    return best


def max_symbol_bound(cap_gap: float, eps: float,
                     table_class: str = "full") -> int:
    """Largest N with N + 1 <= gap * tan(eps) (doubled gap for semistadia).

    Returns -1 when even N = 0 fails.  Integer thresholds are treated as
    attained (<=, not <), with a 1e-9 relative guard against rounding.
    """
    if cap_gap <= 0.0:
        raise DomainError("cap gap must be positive")
    if not 0.0 < eps < MAX_EPS:
        raise DomainError("eps must satisfy 0 < eps < pi/6")
    if table_class not in ("full", "semistadium"):
        raise DomainError(f"unknown table class {table_class!r}")
    reach = cap_gap * math.tan(eps)
    if table_class == "semistadium":
        reach *= 2.0
    n = math.floor(reach + 1e-9 * max(reach, 1.0)) - 1
    return n if n >= 0 else -1
