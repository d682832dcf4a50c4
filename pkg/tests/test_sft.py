import math

import numpy as np
import pytest

import billiard_entropy as be
from billiard_entropy.errors import DomainError, NoConvergence

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def test_root_n1_is_two():
    assert be.largest_root_eq0(1) == pytest.approx(2.0, abs=1e-12)
    assert be.rome_largest_zero(1) == pytest.approx(2.0, abs=1e-12)


def test_rome_n2_matches_polynomial_roots():
    # first-return zeros of 1/x + 2/x^2 + 2/x^3 - 1 are the roots of
    # x^3 - x^2 - 2x - 2; frozen oracle via numpy's companion-matrix solver
    roots = np.roots([1.0, -1.0, -2.0, -2.0])
    want = max(r.real for r in roots if abs(r.imag) < 1e-9)
    assert be.rome_largest_zero(2) == pytest.approx(want, abs=1e-9)


def test_triple_agreement():
    for N in range(1, 21):
        a = be.spectral_radius(be.adjacency(N))
        b = be.rome_largest_zero(N)
        c = be.largest_root_eq0(N)
        assert a == pytest.approx(b, abs=1e-9)
        assert b == pytest.approx(c, abs=1e-9)


def test_roots_increase_to_limit():
    prev = 0.0
    for N in range(1, 61):
        r = be.largest_root_eq0(N)
        # strictly increasing until the increments sink below the 1e-12
        # bisection resolution near the limit
        assert r > prev if N <= 20 else r >= prev - 1e-11
        prev = r
    assert prev == pytest.approx(1.0 + SQRT2, abs=1e-10)
    assert be.limit_bound("full") == pytest.approx(math.log(1 + SQRT2))
    assert be.limit_bound("semistadium") == \
        pytest.approx(0.5 * math.log(1 + SQRT2))


def test_spectral_radius_golden_mean():
    M = np.array([[1.0, 1.0], [1.0, 0.0]])
    assert be.spectral_radius(M) == pytest.approx((1 + math.sqrt(5)) / 2,
                                                  abs=1e-9)


def test_spectral_radius_nonprimitive_raises():
    # eigenvalues +-sqrt(2): power iteration oscillates, never settles
    M = np.array([[0.0, 1.0], [2.0, 0.0]])
    with pytest.raises(NoConvergence):
        be.spectral_radius(M, max_iter=2000)


def test_entropy_lower_bound_pipeline():
    cert = be.entropy_lower_bound(3.9, 0.5235, "full")
    assert cert.certified
    assert cert.parameters["N"] == 1
    assert cert.bound == pytest.approx(math.log(2), abs=1e-9)
    text = cert.to_text()
    assert "certified: yes" in text
    assert "bound_nats" in text


def test_entropy_lower_bound_degenerate():
    cert = be.entropy_lower_bound(1.0, 0.1, "full")
    assert not cert.certified
    assert cert.bound == 0.0


def test_semistadium_halving():
    """Same reach: the semistadium needs half the gap and yields half the
    bound, with N from the doubled condition."""
    rng = np.random.default_rng(11)
    for _ in range(20):
        eps = rng.uniform(0.1, 0.52)
        gap = rng.uniform(2.5, 30.0)
        full = be.entropy_lower_bound(gap, eps, "full")
        half = be.entropy_lower_bound(gap / 2.0, eps, "semistadium")
        assert half.parameters["N"] == full.parameters["N"]
        if full.certified:
            assert half.bound == pytest.approx(0.5 * full.bound, abs=1e-12)


def test_stadium_certificate_threshold():
    assert be.stadium_certificate(1.8, 1.0).certified
    assert be.stadium_certificate(1.8, 1.0).bound == \
        pytest.approx(math.log(2))
    assert not be.stadium_certificate(1.732, 1.0).certified
    assert not be.stadium_certificate(SQRT3, 1.0).certified  # strict
    assert be.stadium_certificate(2.0, 1.1).certified == (2.0 / 1.1 > SQRT3)
    with pytest.raises(DomainError):
        be.stadium_certificate(-1.0, 1.0)


def test_mushroom_certificate_threshold():
    assert be.mushroom_certificate(0.87, 0.5).certified
    assert not be.mushroom_certificate(0.86, 0.5).certified
    assert be.mushroom_certificate(0.87, 0.5).bound == \
        pytest.approx(0.5 * math.log(2))
    # stalk length equal to the cap diameter always certifies:
    # 2t > sqrt(16 t^2 - 1)/2 for every admissible t
    for t in (0.25, 0.3, 0.5, 1.0, 3.0, 10.0):
        assert be.mushroom_certificate(2 * t, t).certified
    with pytest.raises(DomainError):
        be.mushroom_certificate(1.0, 0.2)


def test_certificate_text_deterministic():
    a = be.stadium_certificate(1.8, 1.0).to_text()
    b = be.stadium_certificate(1.8, 1.0).to_text()
    assert a == b
