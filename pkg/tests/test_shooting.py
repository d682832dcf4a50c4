import itertools
import math

import pytest

import billiard_entropy as be
from billiard_entropy.errors import DomainError, TargetUnreachable
from billiard_entropy.shooting import initial_bundle, refine_bundle


def test_initial_bundle_covers_tracked_band(stadium3):
    b = initial_bundle(stadium3, "left")
    lo, hi = stadium3.tracked["left"]
    s0, inc0 = b.state(0.0)
    s1, inc1 = b.state(1.0)
    assert s0 == pytest.approx(lo)
    assert s1 == pytest.approx(hi)
    assert inc0 == inc1 == 0.0
    assert b.level == 0


def test_refine_nests_intervals(stadium3):
    b = initial_bundle(stadium3, "left")
    prev = b.interval
    for j in (1, 0, -1):
        b = refine_bundle(stadium3, b, j)
        a, c = b.interval
        assert prev[0] - 1e-12 <= a <= c <= prev[1] + 1e-12
        prev = (a, c)
    # arguments stay within the eps band on the refined bundle
    tm = 0.5 * (prev[0] + prev[1])
    assert abs(b.state(tm)[1]) <= stadium3.eps + 1e-9


def test_refine_rejects_far_targets(stadium3):
    b = initial_bundle(stadium3, "left")
    with pytest.raises(TargetUnreachable):
        refine_bundle(stadium3, b, 5)


def test_realize_short_itineraries(stadium3):
    for ks in [(0,), (1,), (-1,), (1, -1), (0, 1, 0), (1, 1, -1, 0)]:
        orbit, segs, work = be.realize_itinerary(stadium3, ks)
        assert be.level_differences(work, orbit) == ks
        assert work is stadium3


def test_realize_n2(stadium45):
    for ks in [(2,), (-2, 2), (2, 0, -1, 2)]:
        orbit, segs, work = be.realize_itinerary(stadium45, ks)
        assert be.level_differences(work, orbit) == ks


def test_realize_semistadium(mushroom):
    orbit, segs, work = be.realize_itinerary(mushroom, (1, 0, -1))
    assert work.table_class == "full"  # mirror-doubled working table
    assert be.level_differences(work, orbit) == (1, 0, -1)


def test_realize_validates_input(stadium3):
    with pytest.raises(DomainError):
        be.realize_itinerary(stadium3, ())
    with pytest.raises(TargetUnreachable):
        be.realize_itinerary(stadium3, (2,))          # beyond N = 1
    with pytest.raises(TargetUnreachable):
        be.realize_itinerary(stadium3, (1,), N=3)     # N above the bound
    with pytest.raises(TargetUnreachable):
        be.realize_itinerary(be.stadium_table(1.2), (1,))  # no N >= 1


def test_realize_orbit_encodes_back(stadium3):
    """Round trip: word -> level differences -> orbit -> word."""
    for diffs in itertools.product((-1, 0, 1), repeat=3):
        orbit, segs, work = be.realize_itinerary(stadium3, diffs)
        word = be.encode(work, orbit, 1)
        assert be.word_to_level_diffs(word.symbols) == diffs


def test_realized_orbit_respects_billiard_map(stadium3):
    """The constructed orbit is an actual orbit: re-simulating from its
    first point reproduces every collision."""
    orbit, segs, work = be.realize_itinerary(stadium3, (1, -1, 0, 1))
    redo, _ = be.simulate(work, orbit[0], len(orbit) - 1)
    for a, b in zip(orbit, redo):
        assert a.arc == b.arc
        assert a.r == pytest.approx(b.r, abs=1e-9)
        assert a.phi == pytest.approx(b.phi, abs=1e-9)
