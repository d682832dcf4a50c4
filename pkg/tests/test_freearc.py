import math

import numpy as np
import pytest

import billiard_entropy as be
from billiard_entropy.errors import DomainError, NoMarker


def reentrant_cap_table():
    """Left cap with a central protrusion, x(y) = -0.3 + 0.25 cos(3pi(y-1/2)):
    recessed stretches around y = 0.3 and y = 0.7 see the protrusion, so
    nearly horizontal rays from them re-hit their own cap."""
    n = 257
    ys = np.linspace(0.0, 1.0, n)
    xs = -0.3 + 0.25 * np.cos(3 * math.pi * (ys - 0.5))
    dx = 0.25 * (-3 * math.pi) * np.sin(3 * math.pi * (ys - 0.5))
    pts = list(zip(xs, ys))
    tans = [(d / math.hypot(d, 1.0), 1.0 / math.hypot(d, 1.0)) for d in dx]
    cap = be.SampledCurve(pts, tans, interior_side=1)
    return be.Table(
        wall_bottom=be.LineSegment((float(xs.min()), 0.0), (3.0, 0.0),
                                   interior_side=1),
        wall_top=be.LineSegment((float(xs.min()), 1.0), (3.0, 1.0),
                                interior_side=-1),
        cap_left=cap,
        cap_right=be.CircularArc((3.0, 0.5), 0.5, -math.pi / 2, math.pi / 2),
        table_class="full", eps=0.5), cap


def test_marker_points_circular_closed_form(stadium3):
    eps = stadium3.eps
    cap = stadium3.curve("right")  # theta in [-pi/2, pi/2], flat at theta=0
    p_plus, p_minus = be.find_marker_points(cap, eps)
    assert p_plus == pytest.approx(0.5 * (math.pi / 2 + eps), abs=1e-9)
    assert p_minus == pytest.approx(0.5 * (math.pi / 2 - eps), abs=1e-9)
    a_plus = cap.normal_argument(p_plus)
    a_minus = cap.normal_argument(p_minus)
    assert a_plus == pytest.approx(eps, abs=1e-9)
    assert a_minus == pytest.approx(-eps, abs=1e-9)


def test_marker_points_sampled(sampled_stadium):
    cap = sampled_stadium.curve("left")
    p_plus, p_minus = be.find_marker_points(
        cap, 0.4, s_range=sampled_stadium.tracked["left"])
    assert cap.normal_argument(p_plus) == pytest.approx(0.4, abs=1e-6)
    assert cap.normal_argument(p_minus) == pytest.approx(-0.4, abs=1e-6)


def test_marker_points_flat_segment_raises():
    seg = be.LineSegment((0.0, 0.0), (0.0, 1.0), interior_side=-1)
    with pytest.raises(NoMarker):
        be.find_marker_points(seg, 0.3)


def test_marker_points_eps_range():
    arc = be.CircularArc((0.0, 0.5), 0.5, math.pi / 2, 3 * math.pi / 2)
    with pytest.raises(DomainError):
        be.find_marker_points(arc, 0.7)  # above pi/6


def test_verify_point_free_stadium(stadium3):
    lo, hi = stadium3.tracked["left"]
    ok, witness = be.verify_point_free(stadium3, "left", 0.5 * (lo + hi),
                                       stadium3.eps, angle_step=0.05)
    assert ok and witness is None


def test_verify_arc_free_stadium_passes(stadium3):
    cert = be.verify_arc_free(stadium3, "left", stadium3.eps,
                              position_step=0.02, angle_step=0.05)
    assert cert.passed
    assert cert.failures == ()
    assert cert.notes == ()
    assert not cert.rigorous  # sampled checks are never proof-grade
    assert cert.p_plus is not None and cert.p_minus is not None
    text = cert.to_text()
    assert "passed: yes" in text


def test_verify_arc_free_reentrant_fails():
    table, cap = reentrant_cap_table()
    s03 = cap.param_of_point(
        (-0.3 + 0.25 * math.cos(3 * math.pi * (0.3 - 0.5)), 0.3))
    cert = be.verify_arc_free(table, "left", 0.5, position_step=0.05,
                              angle_step=0.05,
                              s_range=(s03 - 0.15, s03 + 0.15))
    assert not cert.passed
    assert cert.failures  # (r, angle) witnesses recorded
    r, ang = cert.failures[0]
    ok, witness = be.verify_point_free(table, "left", r, 0.5,
                                       angle_step=0.05)
    assert not ok
    text = cert.to_text()
    assert "passed: no" in text
    assert "witness" in text


def test_max_symbol_bound_values():
    tan = math.tan
    assert be.max_symbol_bound(3.87, 0.5235, "full") == 1
    assert be.max_symbol_bound(2.0, 0.3, "full") == -1  # reach < 1
    # doubled reach for semistadia at the same gap
    eps = 0.5
    gap = 2.2
    full = be.max_symbol_bound(gap, eps, "full")
    semi = be.max_symbol_bound(gap, eps, "semistadium")
    assert math.floor(2 * gap * tan(eps)) - 1 == semi
    assert semi >= full


def test_max_symbol_bound_threshold_guard():
    # gap * tan(eps) = 2 exactly up to roundoff must still yield N = 1
    eps = math.pi / 6 * (1.0 - 1e-9)
    gap = 2.0 / math.tan(eps)
    assert be.max_symbol_bound(gap, eps, "full") == 1


def test_max_symbol_bound_validation():
    with pytest.raises(DomainError):
        be.max_symbol_bound(-1.0, 0.3, "full")
    with pytest.raises(DomainError):
        be.max_symbol_bound(1.0, 0.6, "full")
    with pytest.raises(DomainError):
        be.max_symbol_bound(1.0, 0.3, "weird")
