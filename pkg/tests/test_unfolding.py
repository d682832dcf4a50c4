import math

import numpy as np
import pytest

import billiard_entropy as be
from billiard_entropy.errors import DomainError
from billiard_entropy.unfolding import (
    fold_unfolded_y,
    lift_y,
    unlift_ray,
)


def test_lift_fold_roundtrip():
    for k in range(-5, 6):
        for y in np.linspace(0.0, 1.0, 11):
            ybar = lift_y(float(y), k)
            kk, yy = fold_unfolded_y(ybar)
            if 0.0 < y < 1.0:
                assert kk == k
                assert yy == pytest.approx(y, abs=1e-12)


def test_unlift_ray_parity():
    origin = (0.7, 2.3)
    d = (0.8, 0.6)
    o_even, d_even = unlift_ray(origin, d, 2)
    assert o_even == pytest.approx((0.7, 0.3))
    assert d_even == pytest.approx(d)
    o_odd, d_odd = unlift_ray(origin, d, 1)
    # mirrored copy: height folds about the copy, vertical direction flips
    assert o_odd[1] == pytest.approx(1 + 1 - 2.3)
    assert d_odd == pytest.approx((0.8, -0.6))


def test_doubled_table_is_symmetric(mushroom):
    dbl = be.doubled_table(mushroom)
    assert dbl.table_class == "full"
    assert dbl.eps == mushroom.eps
    # mirrored about x = 0: caps at matching distances
    pl = dbl.curve("left").point(dbl.curve("left").length / 2)
    pr = dbl.curve("right").point(dbl.curve("right").length / 2)
    assert pl[0] == pytest.approx(-pr[0], abs=1e-9)
    assert dbl.cap_gap == pytest.approx(2 * mushroom.cap_gap, abs=1e-6)


def test_doubled_table_rejects_full(stadium3):
    with pytest.raises(DomainError):
        be.doubled_table(stadium3)


def test_unfold_flight_matches_folded_simulation(stadium3):
    """The lifted straight flight and the folded orbit agree on the target
    cap point, the wall-hit count, and the wall x positions."""
    rng = np.random.default_rng(5)
    lo, hi = stadium3.tracked["left"]
    checked = 0
    while checked < 40:
        r = rng.uniform(lo + 1e-3, hi - 1e-3)
        theta = rng.uniform(-stadium3.eps, stadium3.eps)
        start = be.PhasePoint("left", r, 0.0)
        try:
            seg = be.unfold_flight(stadium3, start, theta)
        except be.BilliardError:
            continue
        # folded: launch a ray with the same outgoing line
        origin = stadium3.point_xy(start)
        d = np.array((math.cos(theta), math.sin(theta)))
        pos, direction = np.asarray(origin, float), d
        walls = []
        for _ in range(50):
            arc, t, s = be.trace_ray(stadium3, pos, direction)
            pos = pos + t * direction
            if arc in ("left", "right"):
                break
            walls.append((arc, float(pos[0])))
            n = stadium3.curve(arc).inward_normal(s)
            direction = direction - 2.0 * float(direction @ n) * n
        assert arc == seg.target[0]
        assert s == pytest.approx(seg.target[2], abs=1e-9)
        assert len(walls) == len(seg.wall_collisions)
        for (wa, xa), (wb, xb) in zip(walls, seg.wall_collisions):
            assert wa == wb
            assert xa == pytest.approx(xb, abs=1e-9)
        # coding sign: positive level iff first wall hit is the bottom wall
        if walls:
            assert (seg.target[1] > 0) == (walls[0][0] == "bottom")
            assert abs(seg.target[1]) == len(walls)
        else:
            assert seg.target[1] == 0
        checked += 1


def test_unfold_flight_semistadium_folds_back(mushroom):
    lo, hi = mushroom.tracked["right"]
    r = 0.5 * (lo + hi)
    seg = be.unfold_flight(mushroom, be.PhasePoint("right", r, 0.0), 0.0)
    # horizontal flight returns to the curved cap after the mirror
    assert seg.target[0] == "right"
    assert seg.crossed_midline
    assert seg.target[2] == pytest.approx(r, abs=1e-6)


def test_level_differences_signs(stadium3):
    lo, hi = stadium3.tracked["left"]
    orbit, segs, work = be.realize_itinerary(stadium3, (1, -1, 0))
    diffs = be.level_differences(work, orbit)
    assert diffs == (1, -1, 0)
    # first block starts on the bottom wall, second on the top wall
    arcs = [p.arc for p in orbit]
    i = arcs.index("bottom")
    j = arcs.index("top")
    assert i < j


def test_level_differences_requires_cap_endpoints(stadium3):
    p = be.PhasePoint("bottom", 1.0, 0.3)
    with pytest.raises(DomainError):
        be.level_differences(stadium3, [p])


def test_cast_to_cap_copies_level_filter(stadium3):
    lo, hi = stadium3.tracked["left"]
    origin = stadium3.point_xy(be.PhasePoint("left", 0.5 * (lo + hi), 0.0))
    origin = (float(origin[0]), float(origin[1]))
    k, s, t, hit = be.cast_to_cap_copies(
        stadium3, origin, (math.cos(-0.3), math.sin(-0.3)), "right")
    assert k == -1  # dipping below the floor once
    with pytest.raises(be.NoCollision):
        be.cast_to_cap_copies(
            stadium3, origin, (math.cos(-0.3), math.sin(-0.3)), "right",
            level=5)
