"""Traveling-wave ansatz families for the preset flows, and their residuals.

Kink family (for the type-1 flow):

    kappa = A1 * tanh(xi),  tau = A2 * tanh(xi),  xi = eta * (s - upsilon*t)

with the constraints eta^2 + A1^2 = 1 (so |A1| < 1) and upsilon = eta / A2.

Bell family (for the type-2 flow):

    kappa = B1 * sech(xi),  tau = B2 * sech(xi)

with eta = B1 / 2 and upsilon = -B2 / B1.

The residual evaluators substitute the ansatz into the corresponding flow
equations using exact analytic derivatives of tanh/sech, so a nonzero
residual cannot be blamed on discretization.  Under the stated constraints
the kink residual R1 is NOT identically zero; its closed form is

    R1(xi) = -A1*eta*upsilon * sech(xi)^2 + A1*A2 * tanh(xi)^2

(the bookkeeping behind the published constraints drops the constant
sech^2 term and uses a tanh derivative identity inconsistent with
d tanh/dxi = 1 - tanh^2).  The bell R1 closed form is
-B1*B2*eta * sech^2 * tanh, which does vanish at xi = 0 but not elsewhere.
This library certifies the residuals instead of the exactness claim.

Two velocity conventions arise from the ansatz bookkeeping (eta/A2 versus
A2/eta for the kink); the default follows the constraint as stated, an
explicit override is available, and report emitters print both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintViolation

EPS_KAPPA = 1e-9


def _sech(x):
    return 1.0 / np.cosh(x)


@dataclass(frozen=True)
class KinkParams:
    A1: float
    A2: float
    eta: float
    upsilon: float
    p1: int = 1
    p2: int = 1

    @property
    def upsilon_default(self) -> float:
        """Velocity as stated by the defining constraint, eta / A2."""
        return self.eta / self.A2

    @property
    def upsilon_alternate(self) -> float:
        """The swapped convention A2 / eta implied by the coefficient matching."""
        return self.A2 / self.eta


@dataclass(frozen=True)
class BellParams:
    B1: float
    B2: float
    eta: float
    upsilon: float
    p1: int = 1
    p2: int = 1

    @property
    def upsilon_default(self) -> float:
        return -self.B2 / self.B1

    @property
    def upsilon_alternate(self) -> float:
        return -self.B1 / self.B2


def kink_params(A1: float, A2: float, *, eta_sign: float = 1.0,
                upsilon_override: float | None = None) -> KinkParams:
    """Resolve kink parameters from (A1, A2).

    eta = +sqrt(1 - A1^2) (positive root unless ``eta_sign`` flips it) and
    upsilon = eta / A2 unless overridden.
    """
    A1 = float(A1)
    A2 = float(A2)
    if not (math.isfinite(A1) and math.isfinite(A2)):
        raise ConstraintViolation("A1 and A2 must be finite")
    if A2 == 0.0:
        raise ConstraintViolation("A2 must be nonzero")
    if not 0.0 < abs(A1) < 1.0:
        raise ConstraintViolation(
            f"need 0 < |A1| < 1 so that eta^2 + A1^2 = 1 has a real eta; got A1 = {A1}")
    if eta_sign not in (1.0, -1.0, 1, -1):
        raise ConstraintViolation("eta_sign must be +1 or -1")
    eta = float(eta_sign) * math.sqrt(1.0 - A1 * A1)
    upsilon = eta / A2 if upsilon_override is None else float(upsilon_override)
    return KinkParams(A1, A2, eta, upsilon)


def bell_params(B1: float, B2: float, *,
                upsilon_override: float | None = None) -> BellParams:
    """Resolve bell parameters: eta = B1/2, upsilon = -B2/B1."""
    B1 = float(B1)
    B2 = float(B2)
    if not (math.isfinite(B1) and math.isfinite(B2)):
        raise ConstraintViolation("B1 and B2 must be finite")
    if B1 == 0.0 or B2 == 0.0:
        raise ConstraintViolation("B1 and B2 must both be nonzero")
    eta = B1 / 2.0
    upsilon = -B2 / B1 if upsilon_override is None else float(upsilon_override)
    return BellParams(B1, B2, eta, upsilon)


def wave_coordinate(params, s, t):
    """xi = eta * (s - upsilon * t), broadcasting s against t."""
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    return params.eta * (s - params.upsilon * t)


def eval_kink(params: KinkParams, s, t):
    """(kappa, tau) of the kink ansatz at (s, t)."""
    xi = wave_coordinate(params, s, t)
    th = np.tanh(xi)
    return params.A1 * th, params.A2 * th


def eval_bell(params: BellParams, s, t):
    """(kappa, tau) of the bell ansatz at (s, t)."""
    xi = wave_coordinate(params, s, t)
    se = _sech(xi)
    return params.B1 * se, params.B2 * se


def eval_on_grid(params, s_values, t_values):
    """(kappa, tau) on the outer grid of 1-D s and t arrays, shape (nt, ns)."""
    s = np.asarray(s_values, dtype=float)[None, :]
    t = np.asarray(t_values, dtype=float)[:, None]
    if isinstance(params, KinkParams):
        return eval_kink(params, s, t)
    return eval_bell(params, s, t)


@dataclass(eq=False)
class AnsatzResiduals:
    """Pointwise residuals of a flow system on an (s, t) grid.

    ``R2`` holds NaN where the evaluation divides by a (numerically) zero
    kappa; those points are marked in ``singular_mask``.
    """

    R1: np.ndarray
    R2: np.ndarray
    singular_mask: np.ndarray


def residual_type1(params: KinkParams, s_values, t_values,
                   eps_kappa: float = EPS_KAPPA) -> AnsatzResiduals:
    """Substitute the kink ansatz into the type-1 flow equations.

    R1 = kappa_t + tau*kappa
    R2 = tau_t - (kappa_s^2 - kappa*kappa_ss)/kappa^2 - kappa^2

    All derivatives are analytic.  R2 is undefined on the kappa = 0 line
    (xi = 0); those grid points are excluded (NaN) and flagged.
    """
    s = np.asarray(s_values, dtype=float)[None, :]
    t = np.asarray(t_values, dtype=float)[:, None]
    A1, A2, eta, ups = params.A1, params.A2, params.eta, params.upsilon
    xi = eta * (s - ups * t)
    th = np.tanh(xi)
    se2 = _sech(xi) ** 2

    kappa = A1 * th
    tau = A2 * th
    kappa_t = -A1 * eta * ups * se2
    tau_t = -A2 * eta * ups * se2
    kappa_s = A1 * eta * se2
    kappa_ss = -2.0 * A1 * eta * eta * se2 * th

    r1 = kappa_t + tau * kappa

    mask = np.abs(kappa) <= eps_kappa
    r2 = np.full(np.broadcast_shapes(s.shape, t.shape), np.nan)
    ok = ~mask
    num = kappa_s**2 - kappa * kappa_ss
    with np.errstate(divide="ignore", invalid="ignore"):
        r2_all = tau_t - num / kappa**2 - kappa**2
    r2[ok] = r2_all[ok]
    return AnsatzResiduals(r1, r2, mask)


def residual_type2(params: BellParams, s_values, t_values,
                   eps_kappa: float = EPS_KAPPA) -> AnsatzResiduals:
    """Substitute the bell ansatz into the type-2 flow equations.

    R1 = kappa_t - tau_s + tau*kappa_s
    R2 = tau_t - ((2*tau*tau_s - kappa_sss)*kappa - (tau^2 - kappa_ss)*kappa_s)
         / kappa^2 - kappa*kappa_s

    kappa = B1*sech never vanishes analytically, so R2 has no excluded line
    (apart from float underflow of sech at extreme |xi|, which is still
    masked for honesty).
    """
    s = np.asarray(s_values, dtype=float)[None, :]
    t = np.asarray(t_values, dtype=float)[:, None]
    B1, B2, eta, ups = params.B1, params.B2, params.eta, params.upsilon
    xi = eta * (s - ups * t)
    se = _sech(xi)
    th = np.tanh(xi)

    kappa = B1 * se
    tau = B2 * se
    kappa_t = B1 * eta * ups * se * th
    tau_t = B2 * eta * ups * se * th
    kappa_s = -B1 * eta * se * th
    tau_s = -B2 * eta * se * th
    kappa_ss = B1 * eta * eta * (se - 2.0 * se**3)
    kappa_sss = B1 * eta**3 * se * th * (6.0 * se * se - 1.0)

    r1 = kappa_t - tau_s + tau * kappa_s

    mask = np.abs(kappa) <= eps_kappa
    r2 = np.full(np.broadcast_shapes(s.shape, t.shape), np.nan)
    ok = ~mask
    num = (2.0 * tau * tau_s - kappa_sss) * kappa - (tau**2 - kappa_ss) * kappa_s
    with np.errstate(divide="ignore", invalid="ignore"):
        r2_all = tau_t - num / kappa**2 - kappa * kappa_s
    r2[ok] = r2_all[ok]
    return AnsatzResiduals(r1, r2, mask)


def kink_r1_closed_form(params: KinkParams, xi):
    """-A1*eta*upsilon*sech^2 + A1*A2*tanh^2 (valid for any upsilon)."""
    xi = np.asarray(xi, dtype=float)
    return (-params.A1 * params.eta * params.upsilon * _sech(xi) ** 2
            + params.A1 * params.A2 * np.tanh(xi) ** 2)


def kink_r1_supremum(params: KinkParams) -> float:
    """sup |R1| over xi: R1 is linear in tanh^2, so it is attained at the
    endpoints xi = 0 and |xi| -> infinity."""
    return max(abs(params.A1 * params.eta * params.upsilon),
               abs(params.A1 * params.A2))


def bell_r1_closed_form(params: BellParams, xi):
    """-B1*B2*eta*sech^2*tanh; the linear terms cancel only at the default
    upsilon = -B2/B1, so this form assumes it."""
    xi = np.asarray(xi, dtype=float)
    return -params.B1 * params.B2 * params.eta * _sech(xi) ** 2 * np.tanh(xi)


def bell_r1_supremum(params: BellParams) -> float:
    """max |R1| = |B1*B2*eta| * 2/(3*sqrt(3)), attained at tanh = +-1/sqrt(3)."""
    return abs(params.B1 * params.B2 * params.eta) * 2.0 / (3.0 * math.sqrt(3.0))
