import math

import numpy as np
import pytest

import billiard_entropy as be


@pytest.fixture
def stadium3():
    """Stadium with straight part 3, unit height; N = 1."""
    return be.stadium_table(3.0)


@pytest.fixture
def stadium45():
    """Longer stadium with N = 2."""
    return be.stadium_table(4.5)


@pytest.fixture
def mushroom():
    """Semistadium mushroom with N = 1 after doubling."""
    return be.make_mushroom(1.5, 0.5)


def semicircle_samples(cx, th0, th1, n=64, radius=0.5, cy=0.5):
    th = np.linspace(th0, th1, n)
    pts = [(cx + radius * math.cos(a), cy + radius * math.sin(a)) for a in th]
    tans = [(-math.sin(a), math.cos(a)) for a in th]
    return pts, tans


def sampled_cap_table(wall_length=3.0, n=64, eps=0.5):
    """Stadium-shaped table whose caps are sampled curves, not exact arcs."""
    L = wall_length
    pl, tl = semicircle_samples(0.0, math.pi / 2, 3 * math.pi / 2, n)
    pr, tr = semicircle_samples(L, -math.pi / 2, math.pi / 2, n)
    return be.Table(
        wall_bottom=be.LineSegment((0.0, 0.0), (L, 0.0), interior_side=1),
        wall_top=be.LineSegment((0.0, 1.0), (L, 1.0), interior_side=-1),
        cap_left=be.SampledCurve(pl, tl, interior_side=1),
        cap_right=be.SampledCurve(pr, tr, interior_side=1),
        table_class="full",
        eps=eps,
    )


@pytest.fixture
def sampled_stadium():
    return sampled_cap_table()
