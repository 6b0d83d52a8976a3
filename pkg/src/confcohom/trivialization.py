"""The explicit affine trivialization of planar configuration spaces.

A configuration (y1, ..., yl) of distinct points in the plane (complex
numbers) maps to the pair of its first two points together with the
remaining points rewritten in the affine frame they span:

    h(y1, ..., yl) = ((w1, ..., w_{l-2}), (y1, y2)),   w_k = (y_{k+2} - y1)/(y2 - y1).

The frame coordinates avoid 0 and 1 exactly when the configuration is
distinct, and the inverse is y_{k+2} = y1 + w_k * (y2 - y1).  Floating-point
complex arithmetic; distinctness is enforced against a configurable
threshold.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigurationError

DEFAULT_MIN_SEPARATION = 1e-12


def _as_complex(points: Iterable, what: str) -> np.ndarray:
    try:
        z = np.asarray(
            [complex(p[0], p[1]) if isinstance(p, (tuple, list)) else complex(p) for p in points],
            dtype=complex,
        )
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f"{what}: not interpretable as plane points ({exc})")
    if z.ndim != 1:
        raise ConfigurationError(f"{what}: expected a flat sequence of points")
    return z


def _check_distinct(z: np.ndarray, min_separation: float, what: str) -> None:
    if len(z) < 2:
        return
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, np.inf)
    closest = np.abs(diff).min()
    if not closest > min_separation:
        raise ConfigurationError(
            f"{what}: points are not separated (min distance {closest:.3e} "
            f"<= threshold {min_separation:.3e})"
        )


def trivialize(
    points: Sequence, min_separation: float = DEFAULT_MIN_SEPARATION
) -> tuple[tuple[complex, ...], tuple[complex, complex]]:
    """Split a distinct planar configuration into frame coordinates + base pair."""
    z = _as_complex(points, "configuration")
    if len(z) < 3:
        raise ConfigurationError(
            f"need at least 3 points to trivialize, got {len(z)}"
        )
    _check_distinct(z, min_separation, "configuration")
    w = (z[2:] - z[0]) / (z[1] - z[0])
    # distinctness of the inputs makes w avoid {0, 1}; assert it anyway
    _check_distinct(
        np.concatenate(([0.0 + 0.0j, 1.0 + 0.0j], w)), min_separation, "frame coordinates"
    )
    return tuple(complex(v) for v in w), (complex(z[0]), complex(z[1]))


def untrivialize(
    moved: Sequence,
    base: Sequence,
    min_separation: float = DEFAULT_MIN_SEPARATION,
) -> tuple[complex, ...]:
    """Inverse of trivialize: rebuild the configuration from frame + base pair."""
    w = _as_complex(moved, "frame coordinates")
    b = _as_complex(base, "base pair")
    if len(b) != 2:
        raise ConfigurationError(f"base pair must have exactly 2 points, got {len(b)}")
    _check_distinct(b, min_separation, "base pair")
    _check_distinct(
        np.concatenate(([0.0 + 0.0j, 1.0 + 0.0j], w)), min_separation, "frame coordinates"
    )
    y = b[0] + w * (b[1] - b[0])
    out = np.concatenate((b, y))
    _check_distinct(out, 0.0, "rebuilt configuration")
    return tuple(complex(v) for v in out)
