"""Finite-difference stencils on uniform grids.

Second-order accurate first, second and third derivatives.  Interior points
use central stencils; non-periodic boundaries fall back to one-sided
second-order formulas.  Input arrays may be 1-D ``(n,)`` or 2-D ``(n, k)``;
differentiation is always along axis 0.
"""

from __future__ import annotations

import numpy as np


def _as_array(values, min_len: int) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.shape[0] < min_len:
        raise ValueError(f"need at least {min_len} samples, got {v.shape[0]}")
    return v


def d1(values, spacing: float, periodic: bool = False) -> np.ndarray:
    """First derivative, O(h^2)."""
    f = _as_array(values, 3)
    out = np.empty_like(f)
    if periodic:
        out[:] = (np.roll(f, -1, axis=0) - np.roll(f, 1, axis=0)) / (2.0 * spacing)
        return out
    out[1:-1] = (f[2:] - f[:-2]) / (2.0 * spacing)
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * spacing)
    out[-1] = (3.0 * f[-1] - 4.0 * f[-2] + f[-3]) / (2.0 * spacing)
    return out


def d2(values, spacing: float, periodic: bool = False) -> np.ndarray:
    """Second derivative, O(h^2)."""
    f = _as_array(values, 4)
    h2 = spacing * spacing
    out = np.empty_like(f)
    if periodic:
        out[:] = (np.roll(f, -1, axis=0) - 2.0 * f + np.roll(f, 1, axis=0)) / h2
        return out
    out[1:-1] = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / h2
    out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2
    out[-1] = (2.0 * f[-1] - 5.0 * f[-2] + 4.0 * f[-3] - f[-4]) / h2
    return out


def d3(values, spacing: float, periodic: bool = False) -> np.ndarray:
    """Third derivative, O(h^2); one-sided rows need 5 points."""
    f = _as_array(values, 5)
    h3 = spacing**3
    out = np.empty_like(f)
    if periodic:
        fp1 = np.roll(f, -1, axis=0)
        fp2 = np.roll(f, -2, axis=0)
        fm1 = np.roll(f, 1, axis=0)
        fm2 = np.roll(f, 2, axis=0)
        out[:] = (-fm2 + 2.0 * fm1 - 2.0 * fp1 + fp2) / (2.0 * h3)
        return out
    out[2:-2] = (-f[:-4] + 2.0 * f[1:-3] - 2.0 * f[3:-1] + f[4:]) / (2.0 * h3)
    out[0] = (-5.0 * f[0] + 18.0 * f[1] - 24.0 * f[2] + 14.0 * f[3] - 3.0 * f[4]) / (2.0 * h3)
    out[1] = (-3.0 * f[0] + 10.0 * f[1] - 12.0 * f[2] + 6.0 * f[3] - f[4]) / (2.0 * h3)
    out[-2] = (3.0 * f[-1] - 10.0 * f[-2] + 12.0 * f[-3] - 6.0 * f[-4] + f[-5]) / (2.0 * h3)
    out[-1] = (5.0 * f[-1] - 18.0 * f[-2] + 24.0 * f[-3] - 14.0 * f[-4] + 3.0 * f[-5]) / (2.0 * h3)
    return out


def midpoint_values(values, periodic: bool = False) -> np.ndarray:
    """Cubic (4-point Lagrange) interpolation at the n-1 interval midpoints.

    Used by the frame integrator to sample kappa and tau at half steps;
    exact for cubic data, O(h^4) otherwise.
    """
    f = _as_array(values, 4)
    n = f.shape[0]
    out = np.empty((n - 1,) + f.shape[1:], dtype=float)
    if periodic:
        i = np.arange(n - 1)
        out[:] = (-f[(i - 1) % n] + 9.0 * f[i] + 9.0 * f[(i + 1) % n] - f[(i + 2) % n]) / 16.0
        return out
    out[1:-1] = (-f[:-3] + 9.0 * f[1:-2] + 9.0 * f[2:-1] - f[3:]) / 16.0
    # one-sided cubic at the first and last interval
    out[0] = (5.0 * f[0] + 15.0 * f[1] - 5.0 * f[2] + f[3]) / 16.0
    out[-1] = (f[-4] - 5.0 * f[-3] + 15.0 * f[-2] + 5.0 * f[-1]) / 16.0
    return out
