"""Timelike ruled surfaces over an evolving spacelike curve.

Two ruling families: the normal surface x(s, u) = r(s) + u * N(s) and the
binormal surface x(s, v) = r(s) + v * B(s).  For each, two first-class
evaluation paths exist and are never silently merged:

* ``*_closed``: the published closed-form coefficients and curvatures for
  these families, evaluated verbatim;
* ``numeric_forms``: a first-principles pipeline (finite-difference surface
  derivatives, metric cross product, normalization, inner products) driven
  by actual sampled surface points.

The two paths agree in documented anchor cases (binormal Gauss curvature in
the timelike regime; the normal surface at u = 0), and disagree elsewhere:
the closed-form unit normal for the normal surface, tau*u*T + (1+u*kappa)*B
up to scale, cannot be produced by the determinant-convention cross product
of x_s and x_u, which yields tau*u*T - (1+u*kappa)*B up to sign.  Comparison
reports expose both rather than guessing a convention.

The inextensibility residuals are d/dt of the respective E coefficients up
to positive factors: tau*tau_t*u + (1+u*kappa)*kappa_t for the normal
surface and v^2*tau*tau_t for the binormal one.

Everything here is pure and per-point; evaluations are trivially
parallelizable with deterministic output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRuling, NotTimelike, NullNormal
from .frenet import ReconstructedCurve
from .lorentz import lorentz_cross, minkowski_dot, normalize

#: Absolute tolerance on squared norms before a denominator is considered
#: degenerate (the closed forms raise these to the 3/2, amplifying noise).
DEGENERACY_TOL = 1e-10


@dataclass(frozen=True)
class FundamentalForms:
    """First (E, F, G) and second (e, f, g) form coefficients at a point.

    W = E*G - F^2 classifies the point (timelike iff W < 0, spacelike iff
    W > 0); eps = <U, U> is the sign of the unit normal.
    """

    E: float
    F: float
    G: float
    e: float
    f: float
    g: float
    W: float
    eps: float


@dataclass(frozen=True)
class CurvaturePair:
    K: float
    H: float


def curvatures_from_forms(forms: FundamentalForms) -> CurvaturePair:
    """K = eps*(e*g - f^2)/W and H = eps*(E*g - 2*F*f + G*e)/(2*W)."""
    if abs(forms.W) <= DEGENERACY_TOL:
        raise DegenerateRuling(f"W = {forms.W:.3e} is too close to zero")
    k = forms.eps * (forms.e * forms.g - forms.f**2) / forms.W
    h = forms.eps * (forms.E * forms.g - 2.0 * forms.F * forms.f + forms.G * forms.e) / (2.0 * forms.W)
    return CurvaturePair(k, h)


# ---------------------------------------------------------------------------
# closed-form path, normal surface

def normal_forms_closed(kappa: float, kappa_s: float, tau: float, tau_s: float,
                        u: float, tol: float = DEGENERACY_TOL) -> FundamentalForms:
    """Closed-form coefficients of the normal surface at ruling offset u.

    E = tau^2 u^2 + (1 + u*kappa)^2, F = 0, G = -1;
    e = (tau u^2 kappa_s + tau_s u (1 + u*kappa)) / sqrt(E),
    f = (2 tau u kappa + tau) / sqrt(E), g = 0.
    """
    E = (tau * u) ** 2 + (1.0 + u * kappa) ** 2
    if E <= tol:
        raise DegenerateRuling(
            f"E = {E:.3e} <= {tol:g}: ruling degenerate, unit normal undefined")
    rt = math.sqrt(E)
    e = (tau * u * u * kappa_s + tau_s * u * (1.0 + u * kappa)) / rt
    f = (2.0 * tau * u * kappa + tau) / rt
    return FundamentalForms(E=E, F=0.0, G=-1.0, e=e, f=f, g=0.0, W=-E, eps=1.0)


def normal_curvatures_closed(kappa: float, kappa_s: float, tau: float,
                             tau_s: float, u: float,
                             tol: float = DEGENERACY_TOL) -> CurvaturePair:
    """Closed-form K and H of the normal surface (verbatim formulas)."""
    E = (tau * u) ** 2 + (1.0 + u * kappa) ** 2
    if E <= tol:
        raise DegenerateRuling(f"E = {E:.3e} <= {tol:g}")
    k = (2.0 * tau * u * kappa + tau) ** 2 / (E * E)
    h = (tau * u * u * kappa_s + tau_s * u * (1.0 + u * kappa)) / (2.0 * E**1.5)
    return CurvaturePair(k, h)


# ---------------------------------------------------------------------------
# closed-form path, binormal surface

def binormal_forms_closed(kappa: float, tau: float, tau_s: float, v: float,
                          tol: float = DEGENERACY_TOL) -> FundamentalForms:
    """Closed-form coefficients of the binormal surface at ruling offset v.

    Valid in the timelike regime v^2 tau^2 > 1 where the displayed
    sqrt(v^2 tau^2 - 1) is real:
    E = 1 - v^2 tau^2, F = 0, G = 1;
    e = -(tau^2 v^2 kappa + kappa + v tau_s) / sqrt(v^2 tau^2 - 1),
    f = -tau / sqrt(v^2 tau^2 - 1), g = 0.
    """
    q = (v * tau) ** 2 - 1.0
    if abs(q) <= tol:
        raise NullNormal(f"v^2 tau^2 - 1 = {q:.3e}: normal is null, denominators vanish")
    if q < 0.0:
        raise NotTimelike(
            f"v^2 tau^2 = {(v * tau) ** 2:.6g} < 1: the closed forms leave their timelike regime")
    rt = math.sqrt(q)
    e = -(tau * tau * v * v * kappa + kappa + v * tau_s) / rt
    f = -tau / rt
    E = 1.0 - (v * tau) ** 2
    return FundamentalForms(E=E, F=0.0, G=1.0, e=e, f=f, g=0.0, W=E, eps=1.0)


def binormal_curvatures_closed(kappa: float, tau: float, tau_s: float, v: float,
                               tol: float = DEGENERACY_TOL) -> CurvaturePair:
    """Closed-form K and H of the binormal surface (verbatim formulas)."""
    q = (v * tau) ** 2 - 1.0
    if abs(q) <= tol:
        raise NullNormal(f"v^2 tau^2 - 1 = {q:.3e}")
    if q < 0.0:
        raise NotTimelike(f"v^2 tau^2 = {(v * tau) ** 2:.6g} < 1")
    k = tau * tau / (q * q)
    h = (tau * tau * v * v * kappa + kappa + v * tau_s) / (2.0 * q**1.5)
    return CurvaturePair(k, h)


# ---------------------------------------------------------------------------
# first-principles numeric path

def numeric_forms(patch: np.ndarray, ds: float, du: float, *,
                  flip_normal: bool = False,
                  tol: float = DEGENERACY_TOL) -> FundamentalForms:
    """Fundamental forms from sampled surface points, no closed forms used.

    ``patch`` holds surface points x(s_i, u_j) on a 5x5 stencil with
    spacings ds, du, centered on the evaluation point.  Derivatives are
    second-order central differences on the inner 3x3; the unit normal
    comes from the metric cross product of x_s and x_u.  ``flip_normal``
    flips the normal orientation (K must be invariant under it).

    Raises ``NullNormal`` when the surface normal is numerically null.
    """
    patch = np.asarray(patch, dtype=float)
    if patch.shape != (5, 5, 3):
        raise ValueError(f"patch must have shape (5, 5, 3), got {patch.shape}")
    c = patch[2, 2]
    xs = (patch[3, 2] - patch[1, 2]) / (2.0 * ds)
    xu = (patch[2, 3] - patch[2, 1]) / (2.0 * du)
    xss = (patch[3, 2] - 2.0 * c + patch[1, 2]) / (ds * ds)
    xuu = (patch[2, 3] - 2.0 * c + patch[2, 1]) / (du * du)
    xsu = (patch[3, 3] - patch[3, 1] - patch[1, 3] + patch[1, 1]) / (4.0 * ds * du)

    w = lorentz_cross(xs, xu)
    q = float(minkowski_dot(w, w))
    if abs(q) <= tol:
        raise NullNormal(f"<x_s ^ x_u, x_s ^ x_u> = {q:.3e}: surface normal is null")
    unit = normalize(w, math.sqrt(tol))
    if flip_normal:
        unit = -unit
    eps = 1.0 if q > 0 else -1.0

    E = float(minkowski_dot(xs, xs))
    F = float(minkowski_dot(xs, xu))
    G = float(minkowski_dot(xu, xu))
    e = float(minkowski_dot(xss, unit))
    f = float(minkowski_dot(xsu, unit))
    g = float(minkowski_dot(xuu, unit))
    return FundamentalForms(E=E, F=F, G=G, e=e, f=f, g=g, W=E * G - F * F, eps=eps)


def surface_point_normal(curve_point, frame, u: float) -> np.ndarray:
    """x = r + u * N."""
    return np.asarray(curve_point, dtype=float) + u * np.asarray(frame.N, dtype=float)


def surface_point_binormal(curve_point, frame, v: float) -> np.ndarray:
    """x = r + v * B."""
    return np.asarray(curve_point, dtype=float) + v * np.asarray(frame.B, dtype=float)


def ruled_patch(curve: ReconstructedCurve, center_index: int, w_center: float,
                dw: float, kind: str, stride: int = 1) -> tuple[np.ndarray, float]:
    """Extract a 5x5 surface patch around a curve sample.

    Rows are curve samples at indices center_index + {-2..2}*stride (wrapped
    on periodic grids), columns are ruling offsets w_center + {-2..2}*dw in
    the N direction (``kind="normal"``) or B direction (``kind="binormal"``).
    Returns (patch, ds) where ds = stride * grid spacing.
    """
    if curve.frames is None:
        raise ValueError("curve carries no frames")
    if kind not in ("normal", "binormal"):
        raise ValueError(f"kind must be normal or binormal, got {kind!r}")
    n = curve.grid.n
    idx = center_index + stride * np.arange(-2, 3)
    if curve.grid.periodic:
        idx = idx % n
    elif idx[0] < 0 or idx[-1] >= n:
        raise IndexError(
            f"patch rows {idx[0]}..{idx[-1]} fall outside the grid (n = {n})")
    pts = curve.points[idx]
    direction = curve.frames[idx, 1, :] if kind == "normal" else curve.frames[idx, 2, :]
    offsets = w_center + dw * np.arange(-2, 3)
    patch = pts[:, None, :] + offsets[None, :, None] * direction[:, None, :]
    return patch, stride * curve.grid.spacing


# ---------------------------------------------------------------------------
# inextensibility residuals

def inext_residual_normal(kappa, tau, kappa_t, tau_t, u):
    """d/dt of the normal-surface E up to the factor 2u:
    tau*tau_t*u + (1 + u*kappa)*kappa_t; zero for an inextensible flow."""
    return tau * tau_t * u + (1.0 + u * kappa) * kappa_t


def inext_residual_binormal(tau, tau_t, v):
    """d/dt of the binormal-surface E up to the factor -2:
    v^2*tau*tau_t; zero for an inextensible flow."""
    return v * v * tau * tau_t
