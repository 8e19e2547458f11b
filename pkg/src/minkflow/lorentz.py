"""Vector algebra in 3-dimensional Minkowski space.

The inner product is ``<a, b> = a1*b1 + a2*b2 - a3*b3``: the third
coordinate axis is the timelike one.  All kernels accept array-likes of
shape ``(..., 3)`` and broadcast over leading axes, so they work equally on
single vectors and on whole grids of vectors.

Component finiteness is enforced where vectors are built (``vec3`` and the
higher-level containers); the kernels themselves do not re-validate on every
call.  Everything here is a pure function, safe to call concurrently.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import NullVector

#: Metric signs per component, signature (+, +, -).
METRIC_SIGNS = np.array([1.0, 1.0, -1.0])

DEFAULT_CAUSAL_TOL = 1e-12


def vec3(x1: float, x2: float, x3: float) -> np.ndarray:
    """Build a Minkowski 3-vector, rejecting non-finite components."""
    v = np.array([x1, x2, x3], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"vector components must be finite, got {v}")
    return v


class CausalClass(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    NULL = "null"


def minkowski_dot(a, b) -> np.ndarray | float:
    """Indefinite inner product over the last axis."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1] - a[..., 2] * b[..., 2]


def causal_class(a, tol: float = DEFAULT_CAUSAL_TOL) -> CausalClass:
    """Classify a single vector as spacelike, timelike or null.

    The zero vector counts as spacelike by convention.  ``tol`` is an
    absolute tolerance on ``<a, a>``.
    """
    if tol < 0:
        raise ValueError("tol must be >= 0")
    a = np.asarray(a, dtype=float)
    q = float(minkowski_dot(a, a))
    if not np.any(a):
        return CausalClass.SPACELIKE
    if q > tol:
        return CausalClass.SPACELIKE
    if q < -tol:
        return CausalClass.TIMELIKE
    return CausalClass.NULL


def lorentz_cross(a, b) -> np.ndarray:
    """Cross product adapted to the metric.

    The sign convention is fixed by the determinant identity
    ``<a ^ b, c> = det[a; b; c]`` for every ``c``; this is the unique
    metric-adjoint definition, and it makes the first-principles surface
    pipeline self-consistent.  Componentwise:

        (a2*b3 - a3*b2,  a3*b1 - a1*b3,  -(a1*b2 - a2*b1))
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.empty(np.broadcast_shapes(a.shape, b.shape), dtype=float)
    out[..., 0] = a[..., 1] * b[..., 2] - a[..., 2] * b[..., 1]
    out[..., 1] = a[..., 2] * b[..., 0] - a[..., 0] * b[..., 2]
    out[..., 2] = a[..., 1] * b[..., 0] - a[..., 0] * b[..., 1]
    return out


def minkowski_norm(a) -> np.ndarray | float:
    """Pseudo-norm ``sqrt(|<a, a>|)``; zero exactly on the light cone."""
    return np.sqrt(np.abs(minkowski_dot(a, a)))


def normalize(a, tol: float = DEFAULT_CAUSAL_TOL) -> np.ndarray:
    """Rescale ``a`` to unit pseudo-norm; preserves the causal class.

    Raises ``NullVector`` when the pseudo-norm is at or below ``tol``,
    which signals a degenerate normalization such as a null surface normal.
    """
    a = np.asarray(a, dtype=float)
    n = minkowski_norm(a)
    if np.any(n <= tol):
        raise NullVector(f"cannot normalize vector with pseudo-norm {n} <= {tol}")
    return a / np.asarray(n)[..., None] if a.ndim > 1 else a / n
