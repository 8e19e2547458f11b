"""minkflow: curvature/torsion flow of spacelike curves in 3D Minkowski space.

Building blocks:

* :mod:`minkflow.lorentz` -- metric, causal classification, cross product;
* :mod:`minkflow.frenet` -- frame integration, curve reconstruction and the
  inverse extraction of (kappa, tau);
* :mod:`minkflow.evolution` -- the (kappa, tau) evolution engine with the
  type-1/type-2 preset velocity fields;
* :mod:`minkflow.solitons` -- kink/bell traveling-wave families and their
  flow residuals;
* :mod:`minkflow.surfaces` -- normal/binormal ruled surfaces, closed-form
  versus first-principles curvature;
* :mod:`minkflow.cli` -- the ``minkflow`` command-line front end.
"""

__version__ = "0.1.0"

from .errors import (
    BlowUp,
    ConfigError,
    ConstraintViolation,
    DegenerateFrame,
    DegenerateRuling,
    ExprEvalError,
    ExprSyntaxError,
    FrameDrift,
    MinkflowError,
    NotTimelike,
    NullNormal,
    NullVector,
    SingularCurvature,
    StabilityWarning,
)
from .lorentz import (
    CausalClass,
    causal_class,
    lorentz_cross,
    minkowski_dot,
    minkowski_norm,
    normalize,
    vec3,
)
from .frenet import (
    CurvatureProfile,
    FrenetFrame,
    ReconstructedCurve,
    SGrid,
    curvature_from_curve,
    frame_defect,
    frame_rate_s,
    frame_rate_t,
    integrate_frame_s,
    reconstruct_curve,
    standard_frame,
)
from .evolution import (
    CompatibilityResiduals,
    EvolutionState,
    EvolutionTrajectory,
    VelocityTriple,
    compatibility_residuals,
    custom_velocity,
    derive_gamma,
    evolution_rhs,
    evolve,
    step,
    type1_velocity,
    type2_velocity,
)
from .solitons import (
    AnsatzResiduals,
    BellParams,
    KinkParams,
    bell_params,
    eval_bell,
    eval_kink,
    kink_params,
    residual_type1,
    residual_type2,
)
from .surfaces import (
    CurvaturePair,
    FundamentalForms,
    binormal_curvatures_closed,
    binormal_forms_closed,
    curvatures_from_forms,
    inext_residual_binormal,
    inext_residual_normal,
    normal_curvatures_closed,
    normal_forms_closed,
    numeric_forms,
    ruled_patch,
    surface_point_binormal,
    surface_point_normal,
)
from .exprparse import ProfileExpr, parse_profile

__all__ = [name for name in dir() if not name.startswith("_")]
