"""Frenet frames of spacelike curves with a timelike principal normal.

The moving frame (T, N, B) satisfies, along arc length s,

    T_s = kappa * N
    N_s = kappa * T + tau * B
    B_s = tau * N

with <T,T> = 1, <N,N> = -1, <B,B> = 1 and mutual orthogonality.  This system
is skew-adjoint for the indefinite metric, so the six inner products are
conserved exactly by the flow, but the frame components themselves grow like
exp(sqrt(kappa^2 + tau^2) * s) (boosts, not rotations).  Two practical
consequences, measured rather than hidden here:

* the classical one-step integrator drifts, and that drift is the quantity
  the test suite tracks (no silent re-orthonormalization by default);
* once components grow large, merely evaluating <T,T> etc. in double
  precision loses absolute accuracy like ||T||^2 * eps, independent of the
  integrator.  Keep integration ranges moderate when tight frame tolerances
  matter.

Time evolution of the frame uses the velocity form

    T_t = alpha * N - beta * B
    N_t = alpha * T + gamma * B
    B_t = beta * T + gamma * N

All operations are pure; independent integrations may run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateFrame, FrameDrift, NullVector
from .lorentz import METRIC_SIGNS, minkowski_dot
from .stencils import d1, midpoint_values

#: Default tolerance for the six frame inner products.
FRAME_TOL = 1e-8

#: Hard drift bound: integration output beyond this raises FrameDrift.
DRIFT_TOL = 1e-4

#: Gram matrix of a valid frame in row order (T, N, B).
_FRAME_GRAM = np.diag([1.0, -1.0, 1.0])


@dataclass(frozen=True)
class SGrid:
    """Uniform discretization of the arc-length parameter s.

    ``boundary`` is ``"periodic"`` (spacing (s_max-s_min)/n, the point at
    s_max identified with s_min) or ``"onesided"`` (spacing
    (s_max-s_min)/(n-1), one-sided stencils at the ends).
    """

    s_min: float
    s_max: float
    n: int
    boundary: str = "onesided"

    def __post_init__(self):
        if self.n < 5:
            raise ValueError(f"grid needs n >= 5, got {self.n}")
        if not self.s_max > self.s_min:
            raise ValueError("require s_max > s_min")
        if self.boundary not in ("periodic", "onesided"):
            raise ValueError(f"boundary must be periodic or onesided, got {self.boundary!r}")

    @property
    def periodic(self) -> bool:
        return self.boundary == "periodic"

    @property
    def spacing(self) -> float:
        span = self.s_max - self.s_min
        return span / self.n if self.periodic else span / (self.n - 1)

    @property
    def points(self) -> np.ndarray:
        return self.s_min + self.spacing * np.arange(self.n)


@dataclass(eq=False)
class CurvatureProfile:
    """kappa(s) and tau(s) sampled on a grid."""

    grid: SGrid
    kappa: np.ndarray
    tau: np.ndarray

    def __post_init__(self):
        self.kappa = np.asarray(self.kappa, dtype=float)
        self.tau = np.asarray(self.tau, dtype=float)
        for name, arr in (("kappa", self.kappa), ("tau", self.tau)):
            if arr.shape != (self.grid.n,):
                raise ValueError(f"{name} must have shape ({self.grid.n},), got {arr.shape}")
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} contains non-finite entries")

    @classmethod
    def from_callables(cls, grid: SGrid, kappa_fn, tau_fn) -> "CurvatureProfile":
        s = grid.points
        return cls(grid, np.asarray(kappa_fn(s), dtype=float) + np.zeros_like(s),
                   np.asarray(tau_fn(s), dtype=float) + np.zeros_like(s))

    @classmethod
    def from_constants(cls, grid: SGrid, kappa0: float, tau0: float) -> "CurvatureProfile":
        return cls(grid, np.full(grid.n, float(kappa0)), np.full(grid.n, float(tau0)))

    def with_values(self, kappa: np.ndarray, tau: np.ndarray) -> "CurvatureProfile":
        return CurvatureProfile(self.grid, kappa, tau)


@dataclass(frozen=True)
class FrenetFrame:
    """Orthonormal triple: spacelike T, timelike N, spacelike B."""

    T: np.ndarray
    N: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        for name in ("T", "N", "B"):
            v = np.asarray(getattr(self, name), dtype=float)
            if v.shape != (3,) or not np.all(np.isfinite(v)):
                raise ValueError(f"{name} must be a finite 3-vector")
            object.__setattr__(self, name, v)

    def as_matrix(self) -> np.ndarray:
        """Rows (T, N, B)."""
        return np.stack([self.T, self.N, self.B])

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "FrenetFrame":
        return cls(m[0], m[1], m[2])

    def defect(self) -> float:
        """Max deviation of the six inner products from (+1, -1, +1, 0, 0, 0)."""
        return float(frame_defect(self.as_matrix()[None]))

    def validate(self, tol: float = FRAME_TOL) -> None:
        d = self.defect()
        if d > tol:
            raise ValueError(f"frame inner products off by {d:.3e} (> {tol:.1e})")


def standard_frame() -> FrenetFrame:
    """Default initial frame: T = e1, N = e3 (timelike), B = e2."""
    return FrenetFrame(np.array([1.0, 0.0, 0.0]),
                       np.array([0.0, 0.0, 1.0]),
                       np.array([0.0, 1.0, 0.0]))


@dataclass(eq=False)
class ReconstructedCurve:
    """Positions r(s) together with the frames that generated them."""

    grid: SGrid
    points: np.ndarray
    frames: np.ndarray | None = field(default=None)


def frame_rate_s(frame: FrenetFrame, kappa: float, tau: float):
    """Arc-length rates (T_s, N_s, B_s) = (kappa N, kappa T + tau B, tau N)."""
    return kappa * frame.N, kappa * frame.T + tau * frame.B, tau * frame.N


def frame_rate_t(frame: FrenetFrame, alpha: float, beta: float, gamma: float):
    """Time rates (T_t, N_t, B_t) for frame velocities (alpha, beta, gamma)."""
    dT = alpha * frame.N - beta * frame.B
    dN = alpha * frame.T + gamma * frame.B
    dB = beta * frame.T + gamma * frame.N
    return dT, dN, dB


def gram_matrices(frames: np.ndarray) -> np.ndarray:
    """All pairwise inner products of the frame rows: shape (n, 3, 3)."""
    f = np.asarray(frames, dtype=float)
    return np.einsum("nij,j,nkj->nik", f, METRIC_SIGNS, f)


def frame_defect(frames: np.ndarray) -> float:
    """Max absolute deviation of the frame Gram matrices from their target."""
    return float(np.max(np.abs(gram_matrices(frames) - _FRAME_GRAM)))


def gram_schmidt_minkowski(frame_matrix: np.ndarray) -> np.ndarray:
    """Re-orthonormalize rows (T, N, B) against the indefinite metric."""
    t, n, b = frame_matrix
    qt = minkowski_dot(t, t)
    if qt <= 0:
        raise NullVector("tangent lost its spacelike character")
    t = t / np.sqrt(qt)
    n = n - minkowski_dot(n, t) * t
    qn = minkowski_dot(n, n)
    if qn >= 0:
        raise NullVector("principal normal lost its timelike character")
    n = n / np.sqrt(-qn)
    # projection onto the unit timelike n carries a sign flip
    b = b - minkowski_dot(b, t) * t + minkowski_dot(b, n) * n
    qb = minkowski_dot(b, b)
    if qb <= 0:
        raise NullVector("binormal lost its spacelike character")
    b = b / np.sqrt(qb)
    return np.stack([t, n, b])


def _system_matrix(kappa: float, tau: float, with_position: bool) -> np.ndarray:
    dim = 4 if with_position else 3
    a = np.zeros((dim, dim))
    a[0, 1] = kappa
    a[1, 0] = kappa
    a[1, 2] = tau
    a[2, 1] = tau
    if with_position:
        a[3, 0] = 1.0  # r_s = T
    return a


def _integrate(profile: CurvatureProfile, state0: np.ndarray, with_position: bool,
               reorthonormalize: bool) -> np.ndarray:
    grid = profile.grid
    h = grid.spacing
    kappa, tau = profile.kappa, profile.tau
    km = midpoint_values(kappa, grid.periodic)
    tm = midpoint_values(tau, grid.periodic)

    out = np.empty((grid.n,) + state0.shape)
    out[0] = state0
    state = state0.copy()
    for i in range(grid.n - 1):
        a0 = _system_matrix(kappa[i], tau[i], with_position)
        am = _system_matrix(km[i], tm[i], with_position)
        a1 = _system_matrix(kappa[i + 1], tau[i + 1], with_position)
        k1 = a0 @ state
        k2 = am @ (state + 0.5 * h * k1)
        k3 = am @ (state + 0.5 * h * k2)
        k4 = a1 @ (state + h * k3)
        state = state + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
        if reorthonormalize:
            state[:3] = gram_schmidt_minkowski(state[:3])
        out[i + 1] = state
    return out


def integrate_frame_s(profile: CurvatureProfile, initial: FrenetFrame, *,
                      drift_tol: float | None = DRIFT_TOL,
                      reorthonormalize: bool = False) -> np.ndarray:
    """Integrate the frame system across the grid.

    Classical 4th-order one-step method; kappa and tau are sampled at half
    steps by cubic interpolation.  Returns frames of shape (n, 3, 3) with
    rows (T, N, B) per grid point.

    Raises ``FrameDrift`` when the output orthonormality defect exceeds
    ``drift_tol`` (pass ``None`` to skip the check, e.g. when the drift
    itself is the quantity under study).  ``reorthonormalize`` projects the
    frame back onto the metric after every step; it is off by default since
    it would mask the integrator's intrinsic drift.
    """
    initial.validate(FRAME_TOL)
    frames = _integrate(profile, initial.as_matrix(), False, reorthonormalize)
    if drift_tol is not None:
        d = frame_defect(frames)
        if d > drift_tol:
            raise FrameDrift(
                f"frame drift {d:.3e} exceeds {drift_tol:.1e}; "
                "the grid is too coarse for this profile (or the integration "
                "range too long for double precision)")
    return frames


def reconstruct_curve(profile: CurvatureProfile, initial: FrenetFrame,
                      origin=(0.0, 0.0, 0.0), *,
                      drift_tol: float | None = DRIFT_TOL,
                      reorthonormalize: bool = False) -> ReconstructedCurve:
    """Integrate r_s = T alongside the frame system and return the curve."""
    initial.validate(FRAME_TOL)
    state0 = np.vstack([initial.as_matrix(), np.asarray(origin, dtype=float)])
    states = _integrate(profile, state0, True, reorthonormalize)
    frames = states[:, :3, :]
    if drift_tol is not None:
        d = frame_defect(frames)
        if d > drift_tol:
            raise FrameDrift(f"frame drift {d:.3e} exceeds {drift_tol:.1e}")
    return ReconstructedCurve(profile.grid, states[:, 3, :], frames)


def curvature_from_curve(curve: ReconstructedCurve) -> CurvatureProfile:
    """Recover (kappa, tau) from a reconstructed curve.

    Uses the stored frames: kappa = -<T_s, N> and tau = -<B_s, N>, with T_s
    and B_s by second-order finite differences (one-sided at non-periodic
    ends).  The signed recovery lets signed profiles round-trip, unlike a
    norm-based kappa.
    """
    if curve.frames is None:
        raise DegenerateFrame("curve carries no frames; cannot extract curvature")
    grid = curve.grid
    t_rows = curve.frames[:, 0, :]
    n_rows = curve.frames[:, 1, :]
    b_rows = curve.frames[:, 2, :]
    dt = d1(t_rows, grid.spacing, grid.periodic)
    db = d1(b_rows, grid.spacing, grid.periodic)
    kappa = -minkowski_dot(dt, n_rows)
    tau = -minkowski_dot(db, n_rows)
    return CurvatureProfile(grid, kappa, tau)
