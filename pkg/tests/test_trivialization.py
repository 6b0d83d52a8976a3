"""Planar frame normalization and its inverse."""

import cmath
import random

import pytest

from confcohom import ConfigurationError, trivialize, untrivialize


def test_worked_example():
    moved, base = trivialize([1, 3, 5, 7])
    assert moved == (2 + 0j, 3 + 0j)
    assert base == (1 + 0j, 3 + 0j)
    assert untrivialize(moved, base) == (1 + 0j, 3 + 0j, 5 + 0j, 7 + 0j)


def test_accepts_pairs_and_complex():
    moved, base = trivialize([(0, 0), (0, 1), (1, 1)])
    assert base == (0j, 1j)
    assert moved == ((1 + 1j) / 1j,)
    moved2, base2 = trivialize([0j, 1j, 1 + 1j])
    assert (moved2, base2) == (moved, base)


def test_random_roundtrips():
    rng = random.Random(31415)
    for _ in range(300):
        k = rng.randint(3, 9)
        pts = []
        while len(pts) < k:
            z = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
            if all(abs(z - p) > 1e-3 for p in pts):
                pts.append(z)
        moved, base = trivialize(pts)
        back = untrivialize(moved, base)
        scale = max(abs(p) for p in pts)
        assert len(back) == k
        for a, b in zip(pts, back):
            assert abs(a - b) <= 1e-9 * max(1.0, scale)


def test_frame_coordinates_avoid_unit_interval_endpoints():
    rng = random.Random(99)
    for _ in range(200):
        pts = []
        while len(pts) < 5:
            z = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
            if all(abs(z - p) > 1e-3 for p in pts):
                pts.append(z)
        moved, _ = trivialize(pts)
        for w in moved:
            assert abs(w) > 1e-12 and abs(w - 1) > 1e-12


def test_rejects_bad_configurations():
    with pytest.raises(ConfigurationError):
        trivialize([1, 2])
    with pytest.raises(ConfigurationError):
        trivialize([1, 1, 2])
    with pytest.raises(ConfigurationError):
        trivialize([1, 2, 2 + 1e-15])
    with pytest.raises(ConfigurationError):
        trivialize(["a", "b", "c"])


def test_rejects_bad_inverse_inputs():
    with pytest.raises(ConfigurationError):
        untrivialize([2 + 0j], [1 + 0j])
    with pytest.raises(ConfigurationError):
        untrivialize([2 + 0j], [1 + 0j, 1 + 0j, 2 + 0j])
    with pytest.raises(ConfigurationError):
        untrivialize([2 + 0j], [1 + 0j, 1 + 0j])
    # frame coordinate at 0 or 1 collides with the base pair
    with pytest.raises(ConfigurationError):
        untrivialize([0j, 2 + 0j], [0j, 1 + 0j])
    with pytest.raises(ConfigurationError):
        untrivialize([1 + 0j], [0j, 1 + 0j])


def test_separation_threshold_is_honoured():
    pts = [0j, 1 + 0j, 0.5 + 1e-6j, 0.5 + 2e-6j]
    trivialize(pts, min_separation=1e-8)
    with pytest.raises(ConfigurationError):
        trivialize(pts, min_separation=1e-4)


def test_rotation_and_scale_invariance():
    # frame coordinates depend only on the configuration's shape
    rng = random.Random(7)
    pts = [0j, 1 + 0j, 2 + 3j, -1 + 1j, 4 - 2j]
    moved, _ = trivialize(pts)
    for _ in range(20):
        s = cmath.rect(rng.uniform(0.1, 5.0), rng.uniform(0, 6.28))
        t = complex(rng.uniform(-9, 9), rng.uniform(-9, 9))
        moved2, _ = trivialize([s * p + t for p in pts])
        for a, b in zip(moved, moved2):
            assert abs(a - b) < 1e-9 * max(1.0, abs(a))
