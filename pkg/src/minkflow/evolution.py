"""Time evolution of (kappa, tau) by the method of lines.

The compatibility conditions of the moving frame give

    kappa_t = alpha_s - tau * beta
    tau_t   = gamma_s + kappa * beta,      gamma = (alpha*tau - beta_s) / kappa

so gamma is always a derived quantity, never a free input.  Spatial
derivatives use the second-order stencils from :mod:`minkflow.stencils`
(matching the grid's boundary mode); time stepping is explicit classical
4th order, re-deriving the velocity triple from the stage profile at every
stage.

Two preset velocity choices are provided:

* type 1: (alpha, beta) = (0, kappa), hence gamma = -kappa_s / kappa, which
  reduces the system to kappa_t = -tau*kappa,
  tau_t = (kappa_s^2 - kappa*kappa_ss)/kappa^2 + kappa^2.
* type 2: (alpha, beta) = (tau, kappa_s), hence
  gamma = (tau^2 - kappa_ss) / kappa, giving kappa_t = tau_s - tau*kappa_s
  and the corresponding tau_t with a third s-derivative of kappa.

Division by kappa is the structural weak point of the whole system:
profiles with |kappa| <= eps_kappa anywhere, or with a sign change across
the grid, are rejected for the presets rather than regularized (a
regularization would silently change the equations).

The right-hand side is deterministic and evaluated serially; separate
trajectories are independent and may run concurrently.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import BlowUp, SingularCurvature, StabilityWarning
from .frenet import CurvatureProfile, SGrid
from .stencils import d1

#: Below this |kappa| the gamma division is treated as singular.
EPS_KAPPA = 1e-9

#: Default bound on |kappa|, |tau| during time stepping.
BLOWUP_LIMIT = 1e6

VelocityProvider = Callable[[CurvatureProfile], "VelocityTriple"]


def _check_kappa(kappa: np.ndarray, grid: SGrid, eps_kappa: float) -> None:
    small = np.abs(kappa) <= eps_kappa
    if np.any(small):
        i = int(np.argmax(small))
        raise SingularCurvature(
            f"|kappa| <= {eps_kappa:g} at grid index {i} (s = {grid.points[i]:.6g})",
            index=i, s=float(grid.points[i]))


def derive_gamma(alpha, beta, profile: CurvatureProfile,
                 eps_kappa: float = EPS_KAPPA) -> np.ndarray:
    """gamma = (alpha*tau - beta_s) / kappa with beta_s by second-order stencils.

    Raises ``SingularCurvature`` (reporting the first offending index) when
    |kappa| dips to eps_kappa anywhere on the grid.
    """
    grid = profile.grid
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    if alpha.shape != (grid.n,) or beta.shape != (grid.n,):
        raise ValueError("alpha and beta must match the grid length")
    _check_kappa(profile.kappa, grid, eps_kappa)
    beta_s = d1(beta, grid.spacing, grid.periodic)
    return (alpha * profile.tau - beta_s) / profile.kappa


class VelocityTriple:
    """Frame-evolution velocities (alpha, beta, gamma) on a grid.

    gamma is always derived from (alpha, beta) and the profile; there is no
    way to construct this type with a free gamma.
    """

    __slots__ = ("grid", "alpha", "beta", "gamma")

    def __init__(self, profile: CurvatureProfile, alpha, beta,
                 eps_kappa: float = EPS_KAPPA):
        self.grid = profile.grid
        self.alpha = np.asarray(alpha, dtype=float)
        self.beta = np.asarray(beta, dtype=float)
        self.gamma = derive_gamma(self.alpha, self.beta, profile, eps_kappa)

    def __repr__(self):
        return (f"VelocityTriple(n={self.grid.n}, "
                f"max|alpha|={np.max(np.abs(self.alpha)):.3g}, "
                f"max|beta|={np.max(np.abs(self.beta)):.3g})")


def _reject_sign_change(kappa: np.ndarray, grid: SGrid, eps_kappa: float) -> None:
    _check_kappa(kappa, grid, eps_kappa)
    signs = np.sign(kappa)
    if signs.min() != signs.max():
        raise SingularCurvature(
            "kappa changes sign across the grid; the preset velocities divide "
            "by kappa and are not defined through a zero crossing")


def type1_velocity(profile: CurvatureProfile,
                   eps_kappa: float = EPS_KAPPA) -> VelocityTriple:
    """(alpha, beta) = (0, kappa); gamma comes out as -kappa_s/kappa."""
    _reject_sign_change(profile.kappa, profile.grid, eps_kappa)
    return VelocityTriple(profile, np.zeros(profile.grid.n), profile.kappa.copy(),
                          eps_kappa)


def type2_velocity(profile: CurvatureProfile,
                   eps_kappa: float = EPS_KAPPA) -> VelocityTriple:
    """(alpha, beta) = (tau, kappa_s); gamma comes out as (tau^2 - kappa_ss)/kappa."""
    _reject_sign_change(profile.kappa, profile.grid, eps_kappa)
    beta = d1(profile.kappa, profile.grid.spacing, profile.grid.periodic)
    return VelocityTriple(profile, profile.tau.copy(), beta, eps_kappa)


def custom_velocity(alpha_values, beta_values,
                    eps_kappa: float = EPS_KAPPA) -> VelocityProvider:
    """Provider for fixed alpha(s), beta(s) arrays (gamma still re-derived)."""
    alpha = np.asarray(alpha_values, dtype=float)
    beta = np.asarray(beta_values, dtype=float)

    def provider(profile: CurvatureProfile) -> VelocityTriple:
        return VelocityTriple(profile, alpha, beta, eps_kappa)

    return provider


def evolution_rhs(profile: CurvatureProfile, vel: VelocityTriple):
    """Evaluate (kappa_t, tau_t); the outer derivative of gamma uses the
    same second-order stencils as everything else."""
    if vel.grid != profile.grid:
        raise ValueError("velocity triple and profile live on different grids")
    h = profile.grid.spacing
    per = profile.grid.periodic
    kappa_t = d1(vel.alpha, h, per) - profile.tau * vel.beta
    tau_t = d1(vel.gamma, h, per) + profile.kappa * vel.beta
    return kappa_t, tau_t


@dataclass(frozen=True)
class EvolutionState:
    t: float
    profile: CurvatureProfile


@dataclass(eq=False)
class EvolutionTrajectory:
    """States recorded at uniform time intervals, plus run metadata."""

    states: list[EvolutionState]
    dt_record: float
    metadata: dict
    provider: VelocityProvider | None = field(default=None, repr=False)

    def __post_init__(self):
        times = [s.t for s in self.states]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("trajectory times must be strictly increasing")


def _check_blowup(kappa: np.ndarray, tau: np.ndarray, limit: float) -> None:
    mk = np.max(np.abs(kappa))
    mt = np.max(np.abs(tau))
    if not (np.isfinite(mk) and np.isfinite(mt)) or mk > limit or mt > limit:
        raise BlowUp(f"max(|kappa|, |tau|) = {max(mk, mt):.3e} exceeds {limit:g}")


def stability_limit(profile: CurvatureProfile) -> float:
    """Heuristic explicit-step bound dt <= ds^2 / (4*max(1, |kappa|, |tau|)).

    Purely advisory (nothing in the flow equations pins a sharp constant);
    ``step`` warns when it is exceeded.
    """
    h = profile.grid.spacing
    m = max(1.0, float(np.max(np.abs(profile.kappa))), float(np.max(np.abs(profile.tau))))
    return h * h / (4.0 * m)


def step(state: EvolutionState, provider: VelocityProvider, dt: float, *,
         blowup_limit: float = BLOWUP_LIMIT, warn_stability: bool = True,
         ) -> EvolutionState:
    """One classical 4th-order time step.

    Each stage rebuilds the velocity triple from the stage profile, so the
    presets stay consistent with the evolving curvature.
    """
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    profile = state.profile
    if warn_stability and dt > stability_limit(profile):
        warnings.warn(
            f"dt = {dt:g} exceeds the heuristic stability bound "
            f"{stability_limit(profile):.3g} for this grid/profile",
            StabilityWarning, stacklevel=2)

    def rhs(kappa, tau):
        _check_blowup(kappa, tau, blowup_limit)
        prof = profile.with_values(kappa, tau)
        kt, tt = evolution_rhs(prof, provider(prof))
        return np.stack([kt, tt])

    y = np.stack([profile.kappa, profile.tau])
    k1 = rhs(y[0], y[1])
    y2 = y + 0.5 * dt * k1
    k2 = rhs(y2[0], y2[1])
    y3 = y + 0.5 * dt * k2
    k3 = rhs(y3[0], y3[1])
    y4 = y + dt * k3
    k4 = rhs(y4[0], y4[1])
    ynew = y + (dt / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
    _check_blowup(ynew[0], ynew[1], blowup_limit)
    return EvolutionState(state.t + dt, profile.with_values(ynew[0], ynew[1]))


def evolve(initial: EvolutionState, provider: VelocityProvider, dt: float,
           steps: int, *, stride: int = 1, blowup_limit: float = BLOWUP_LIMIT,
           preset_name: str | None = None) -> EvolutionTrajectory:
    """Repeat ``step`` and record every ``stride``-th state (plus t0)."""
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    if stride < 1:
        raise ValueError("stride must be >= 1")
    states = [initial]
    state = initial
    for i in range(1, steps + 1):
        try:
            state = step(state, provider, dt, blowup_limit=blowup_limit,
                         warn_stability=(i == 1))
        except (SingularCurvature, BlowUp) as exc:
            exc.args = (f"at time step {i} (t = {initial.t + i * dt:.9g}): {exc}",)
            raise
        # keep recorded times exact multiples of dt (no additive drift)
        state = EvolutionState(initial.t + i * dt, state.profile)
        if i % stride == 0:
            states.append(state)
    meta = {
        "preset": preset_name or getattr(provider, "__name__", "custom"),
        "dt": dt,
        "steps": steps,
        "stride": stride,
        "boundary": initial.profile.grid.boundary,
        "stencil_order": 2,
        "blowup_limit": blowup_limit,
    }
    return EvolutionTrajectory(states, dt * stride, meta, provider)


@dataclass(eq=False)
class CompatibilityResiduals:
    """|d/dt kappa - (alpha_s - tau beta)| and |d/dt tau - (gamma_s + kappa beta)|
    at the interior recorded times; rows are times, columns grid points."""

    times: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray

    @property
    def max_kappa(self) -> float:
        return float(np.max(self.kappa))

    @property
    def max_tau(self) -> float:
        return float(np.max(self.tau))


def compatibility_residuals(traj: EvolutionTrajectory) -> CompatibilityResiduals:
    """Check the recorded trajectory against the flow equations.

    d/dt is a central difference over the recorded interval; the right-hand
    side is evaluated with the trajectory's own velocity provider.  Both
    residuals are O(dt^2 + ds^2) for smooth flows.
    """
    if traj.provider is None:
        raise ValueError("trajectory carries no velocity provider")
    if len(traj.states) < 3:
        raise ValueError("need at least 3 recorded states")
    dtr = traj.dt_record
    m = len(traj.states)
    n = traj.states[0].profile.grid.n
    res_k = np.empty((m - 2, n))
    res_t = np.empty((m - 2, n))
    times = np.empty(m - 2)
    for j in range(1, m - 1):
        prof = traj.states[j].profile
        kt, tt = evolution_rhs(prof, traj.provider(prof))
        dk = (traj.states[j + 1].profile.kappa - traj.states[j - 1].profile.kappa) / (2.0 * dtr)
        dtau = (traj.states[j + 1].profile.tau - traj.states[j - 1].profile.tau) / (2.0 * dtr)
        res_k[j - 1] = np.abs(dk - kt)
        res_t[j - 1] = np.abs(dtau - tt)
        times[j - 1] = traj.states[j].t
    return CompatibilityResiduals(times, res_k, res_t)
