"""Command-line front end.

Subcommands: ``evolve``, ``soliton``, ``surface``, ``reconstruct``,
``frame-check``.  Every option can come from a flat ``key=value`` config
file (``--config``), from a previously written ``run_meta.json`` (detected
by content), or from a same-named CLI flag; flags win.  Unknown config keys
are errors, and all validation problems are reported together.

Output is deterministic: CSV numbers carry 17 significant digits with ``.``
as decimal separator and ``\\n`` line endings, JSON keys are sorted, and a
``run_meta.json`` echoing the resolved configuration is written next to
every result so a run can be reproduced exactly.

Exit codes: 0 success, 2 configuration/validation error, 3 numerical
failure, 4 I/O error.  The environment variable ``MINKFLOW_SEED`` is
reserved and currently unused (randomized property checks live in the test
suite, not in the CLI).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .errors import (
    BlowUp,
    ConfigError,
    ConstraintViolation,
    DegenerateFrame,
    DegenerateRuling,
    ExprEvalError,
    ExprSyntaxError,
    FrameDrift,
    NotTimelike,
    NullNormal,
    NullVector,
    SingularCurvature,
)
from .evolution import (
    EvolutionState,
    compatibility_residuals,
    custom_velocity,
    evolution_rhs,
    evolve,
    type1_velocity,
    type2_velocity,
)
from .exprparse import parse_profile
from .frenet import (
    CurvatureProfile,
    SGrid,
    frame_defect,
    gram_matrices,
    integrate_frame_s,
    reconstruct_curve,
    standard_frame,
)
from .solitons import (
    bell_params,
    bell_r1_supremum,
    eval_on_grid,
    kink_params,
    kink_r1_supremum,
    residual_type1,
    residual_type2,
)
from .stencils import d1
from .surfaces import (
    binormal_curvatures_closed,
    binormal_forms_closed,
    curvatures_from_forms,
    inext_residual_binormal,
    inext_residual_normal,
    normal_curvatures_closed,
    normal_forms_closed,
    numeric_forms,
    ruled_patch,
)

_NUMERICAL_ERRORS = (
    SingularCurvature, BlowUp, NullVector, NullNormal, NotTimelike,
    DegenerateRuling, DegenerateFrame, FrameDrift, ExprEvalError,
)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


# ---------------------------------------------------------------------------
# configuration schema

class Key:
    def __init__(self, default: str | None, help_: str, required: bool = False):
        self.default = default
        self.help = help_
        self.required = required


_GRID_KEYS = {
    "s_min": Key("0.0", "lower end of the s interval"),
    "s_max": Key("6.283185307179586", "upper end of the s interval"),
    "n": Key("256", "number of grid points (>= 5)"),
    "boundary": Key("onesided", "grid boundary mode: periodic | onesided"),
}
_PROFILE_KEYS = {
    "kappa": Key(None, "curvature profile expression in s", required=True),
    "tau": Key(None, "torsion profile expression in s", required=True),
}
_PRESET_KEYS = {
    "preset": Key("type1", "velocity preset: type1 | type2 | custom"),
    "alpha": Key(None, "alpha(s) expression (preset=custom only)"),
    "beta": Key(None, "beta(s) expression (preset=custom only)"),
}
_OUT_KEY = {"out": Key("out", "output directory")}

SCHEMAS: dict[str, dict[str, Key]] = {
    "evolve": {**_GRID_KEYS, **_PROFILE_KEYS, **_PRESET_KEYS,
               "dt": Key("0.0001", "time step"),
               "steps": Key("100", "number of time steps"),
               "stride": Key("10", "record every stride-th state"),
               **_OUT_KEY},
    "soliton": {"family": Key(None, "soliton family: kink | bell", required=True),
                "A1": Key(None, "kink amplitude of kappa"),
                "A2": Key(None, "kink amplitude of tau"),
                "B1": Key(None, "bell amplitude of kappa"),
                "B2": Key(None, "bell amplitude of tau"),
                "eta_sign": Key("1", "sign of the kink eta root: 1 | -1"),
                "upsilon_override": Key("", "override the wave velocity (empty = default)"),
                "s_min": Key("-20.0", "lower end of the s window"),
                "s_max": Key("20.0", "upper end of the s window"),
                "n": Key("401", "number of s samples (>= 2)"),
                "t_min": Key("0.0", "first time sample"),
                "t_max": Key("5.0", "last time sample"),
                "nt": Key("11", "number of t samples (>= 1)"),
                **_OUT_KEY},
    "surface": {**_GRID_KEYS, **_PROFILE_KEYS, **_PRESET_KEYS,
                "kind": Key(None, "ruling direction: normal | binormal", required=True),
                "u": Key("0.0,0.5", "comma list of ruling offsets (kind=normal)"),
                "v": Key("1.0", "comma list of ruling offsets (kind=binormal)"),
                "dw": Key("0.001", "ruling-direction stencil spacing for the numeric pipeline"),
                **_OUT_KEY},
    "reconstruct": {**_GRID_KEYS, **_PROFILE_KEYS, **_PRESET_KEYS,
                    "dt": Key("0.0001", "time step"),
                    "steps": Key("0", "number of time steps (0 = initial curve only)"),
                    "stride": Key("1", "record every stride-th state"),
                    **_OUT_KEY},
    "frame-check": {**_GRID_KEYS, **_PROFILE_KEYS, **_OUT_KEY},
}


def _read_config_file(path: str) -> dict[str, str]:
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        # a run_meta.json echo; its "config" object holds the key=value pairs
        meta = json.loads(text)
        cfg = meta.get("config")
        if not isinstance(cfg, dict):
            raise ConfigError([f"{path}: JSON config must contain a 'config' object"])
        return {str(k): str(v) for k, v in cfg.items()}
    out: dict[str, str] = {}
    problems = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            problems.append(f"{path}:{lineno}: expected key=value, got {line!r}")
            continue
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    if problems:
        raise ConfigError(problems)
    return out


def _resolve_config(sub: str, args: argparse.Namespace) -> dict[str, str]:
    """defaults < config file < CLI flags; unknown config keys are errors."""
    schema = SCHEMAS[sub]
    merged = {k: spec.default for k, spec in schema.items() if spec.default is not None}
    if args.config:
        file_cfg = _read_config_file(args.config)
        unknown = sorted(set(file_cfg) - set(schema))
        if unknown:
            raise ConfigError([f"unknown config key {k!r} for subcommand {sub!r}"
                               for k in unknown])
        merged.update(file_cfg)
    for key in schema:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    return merged


class _Validator:
    def __init__(self, raw: dict[str, str]):
        self.raw = raw
        self.problems: list[str] = []

    def fail(self, msg: str) -> None:
        self.problems.append(msg)

    def get(self, key: str) -> str | None:
        return self.raw.get(key)

    def require(self, key: str) -> str | None:
        val = self.raw.get(key)
        if val is None:
            self.fail(f"missing required key {key!r}")
        return val

    def number(self, key: str, *, required: bool = True) -> float | None:
        val = self.require(key) if required else self.get(key)
        if val is None:
            return None
        try:
            return float(val)
        except ValueError:
            self.fail(f"{key}: not a number: {val!r}")
            return None

    def integer(self, key: str, minimum: int | None = None) -> int | None:
        val = self.require(key)
        if val is None:
            return None
        try:
            i = int(val)
        except ValueError:
            self.fail(f"{key}: not an integer: {val!r}")
            return None
        if minimum is not None and i < minimum:
            self.fail(f"{key}: must be >= {minimum}, got {i}")
            return None
        return i

    def choice(self, key: str, options: tuple[str, ...]) -> str | None:
        val = self.require(key)
        if val is None:
            return None
        if val not in options:
            self.fail(f"{key}: must be one of {', '.join(options)}; got {val!r}")
            return None
        return val

    def expression(self, key: str, *, required: bool = True):
        val = self.require(key) if required else self.get(key)
        if val is None:
            if not required:
                return None
            return None
        try:
            return parse_profile(val)
        except ExprSyntaxError as exc:
            self.fail(f"{key}: {exc}")
            return None

    def float_list(self, key: str) -> list[float] | None:
        val = self.require(key)
        if val is None:
            return None
        try:
            items = [float(part) for part in val.split(",") if part.strip() != ""]
        except ValueError:
            self.fail(f"{key}: expected a comma-separated list of numbers, got {val!r}")
            return None
        if not items:
            self.fail(f"{key}: list must not be empty")
            return None
        return items

    def done(self) -> None:
        if self.problems:
            raise ConfigError(self.problems)


def _validate_grid(v: _Validator, min_n: int = 5) -> dict:
    cfg = {
        "s_min": v.number("s_min"),
        "s_max": v.number("s_max"),
        "n": v.integer("n", minimum=min_n),
        "boundary": v.choice("boundary", ("periodic", "onesided")),
    }
    if (cfg["s_min"] is not None and cfg["s_max"] is not None
            and not cfg["s_max"] > cfg["s_min"]):
        v.fail("require s_max > s_min")
    return cfg


def _validate_preset(v: _Validator) -> dict:
    preset = v.choice("preset", ("type1", "type2", "custom"))
    cfg = {"preset": preset, "alpha": None, "beta": None}
    if preset == "custom":
        cfg["alpha"] = v.expression("alpha")
        cfg["beta"] = v.expression("beta")
        if v.get("alpha") is None or v.get("beta") is None:
            v.fail("preset=custom needs both alpha and beta expressions")
    return cfg


def _make_grid(cfg: dict) -> SGrid:
    return SGrid(cfg["s_min"], cfg["s_max"], cfg["n"], cfg["boundary"])


def _make_profile(cfg: dict, grid: SGrid) -> CurvatureProfile:
    s = grid.points
    kappa = np.broadcast_to(np.asarray(cfg["kappa_expr"].evaluate(s), dtype=float), s.shape)
    tau = np.broadcast_to(np.asarray(cfg["tau_expr"].evaluate(s), dtype=float), s.shape)
    return CurvatureProfile(grid, kappa.copy(), tau.copy())


def _make_provider(cfg: dict, grid: SGrid):
    if cfg["preset"] == "type1":
        return type1_velocity, "type1"
    if cfg["preset"] == "type2":
        return type2_velocity, "type2"
    s = grid.points
    alpha = np.broadcast_to(np.asarray(cfg["alpha_expr"].evaluate(s), dtype=float), s.shape)
    beta = np.broadcast_to(np.asarray(cfg["beta_expr"].evaluate(s), dtype=float), s.shape)
    return custom_velocity(alpha.copy(), beta.copy()), "custom"


# ---------------------------------------------------------------------------
# deterministic writers

def _ensure_outdir(path: str) -> Path:
    p = Path(path)
    try:
        p.mkdir(parents=True, exist_ok=False)
    except FileExistsError:
        if not p.is_dir():
            raise
    return p


def _write_csv(path: Path, header: list[str], rows) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(x) for x in row) for row in rows)
    path.write_text("\n".join(lines) + "\n", newline="\n")


def _write_json(path: Path, obj) -> None:
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", newline="\n")


def _write_meta(outdir: Path, sub: str, raw_cfg: dict[str, str]) -> None:
    _write_json(outdir / "run_meta.json", {
        "version": __version__,
        "subcommand": sub,
        "config": dict(sorted(raw_cfg.items())),
    })


def _grid_rows(s_values, t_values, grid):
    for i, t in enumerate(t_values):
        for j, s in enumerate(s_values):
            yield (s, t, grid[i, j])


# ---------------------------------------------------------------------------
# subcommands

def _cfg_evolve(raw: dict[str, str]) -> dict:
    v = _Validator(raw)
    cfg = _validate_grid(v)
    cfg.update(_validate_preset(v))
    cfg["kappa_expr"] = v.expression("kappa")
    cfg["tau_expr"] = v.expression("tau")
    cfg["dt"] = v.number("dt")
    if cfg["dt"] is not None and cfg["dt"] <= 0:
        v.fail(f"dt must be positive, got {cfg['dt']}")
    cfg["steps"] = v.integer("steps", minimum=0)
    cfg["stride"] = v.integer("stride", minimum=1)
    cfg["out"] = v.require("out")
    if cfg["preset"] == "custom":
        cfg["alpha_expr"], cfg["beta_expr"] = cfg["alpha"], cfg["beta"]
    v.done()
    return cfg


def run_evolve(raw: dict[str, str]) -> None:
    cfg = _cfg_evolve(raw)
    grid = _make_grid(cfg)
    profile = _make_profile(cfg, grid)
    provider, name = _make_provider(cfg, grid)
    traj = evolve(EvolutionState(0.0, profile), provider, cfg["dt"], cfg["steps"],
                  stride=cfg["stride"], preset_name=name)
    outdir = _ensure_outdir(cfg["out"])
    s = grid.points
    t = np.array([st.t for st in traj.states])
    kappa = np.stack([st.profile.kappa for st in traj.states])
    tau = np.stack([st.profile.tau for st in traj.states])
    _write_csv(outdir / "kappa_grid.csv", ["s", "t", "value"], _grid_rows(s, t, kappa))
    _write_csv(outdir / "tau_grid.csv", ["s", "t", "value"], _grid_rows(s, t, tau))
    if len(traj.states) >= 3:
        res = compatibility_residuals(traj)
        residuals = {"max_kappa_residual": res.max_kappa,
                     "max_tau_residual": res.max_tau,
                     "recorded_states": len(traj.states),
                     "dt_between_records": traj.dt_record}
    else:
        residuals = {"max_kappa_residual": None, "max_tau_residual": None,
                     "recorded_states": len(traj.states),
                     "note": "need at least 3 recorded states for residuals"}
    _write_json(outdir / "residuals.json", residuals)
    _write_meta(outdir, "evolve", raw)


def _cfg_soliton(raw: dict[str, str]) -> dict:
    v = _Validator(raw)
    cfg: dict = {}
    family = v.choice("family", ("kink", "bell"))
    cfg["family"] = family
    ups_raw = v.get("upsilon_override") or ""
    ups = None
    if ups_raw != "":
        try:
            ups = float(ups_raw)
        except ValueError:
            v.fail(f"upsilon_override: not a number: {ups_raw!r}")
    eta_sign = v.number("eta_sign")
    if eta_sign not in (1.0, -1.0, None):
        v.fail(f"eta_sign: must be 1 or -1, got {eta_sign}")
    if family == "kink":
        for key in ("B1", "B2"):
            if v.get(key) is not None:
                v.fail(f"{key} is only valid for family=bell")
        a1 = v.number("A1")
        a2 = v.number("A2")
        if a1 is not None and a2 is not None and not v.problems:
            try:
                cfg["params"] = kink_params(a1, a2, eta_sign=eta_sign,
                                            upsilon_override=ups)
            except ConstraintViolation as exc:
                v.fail(str(exc))
    elif family == "bell":
        for key in ("A1", "A2"):
            if v.get(key) is not None:
                v.fail(f"{key} is only valid for family=kink")
        b1 = v.number("B1")
        b2 = v.number("B2")
        if b1 is not None and b2 is not None and not v.problems:
            try:
                cfg["params"] = bell_params(b1, b2, upsilon_override=ups)
            except ConstraintViolation as exc:
                v.fail(str(exc))
    cfg["upsilon_overridden"] = ups is not None
    cfg["s_min"] = v.number("s_min")
    cfg["s_max"] = v.number("s_max")
    cfg["n"] = v.integer("n", minimum=2)
    cfg["t_min"] = v.number("t_min")
    cfg["t_max"] = v.number("t_max")
    cfg["nt"] = v.integer("nt", minimum=1)
    if (cfg["s_min"] is not None and cfg["s_max"] is not None
            and not cfg["s_max"] > cfg["s_min"]):
        v.fail("require s_max > s_min")
    if (cfg["nt"] is not None and cfg["nt"] > 1 and cfg["t_min"] is not None
            and cfg["t_max"] is not None and not cfg["t_max"] > cfg["t_min"]):
        v.fail("require t_max > t_min when nt > 1")
    cfg["out"] = v.require("out")
    v.done()
    return cfg


def run_soliton(raw: dict[str, str]) -> None:
    cfg = _cfg_soliton(raw)
    params = cfg["params"]
    s = np.linspace(cfg["s_min"], cfg["s_max"], cfg["n"])
    t = (np.linspace(cfg["t_min"], cfg["t_max"], cfg["nt"]) if cfg["nt"] > 1
         else np.array([cfg["t_min"]]))
    kappa, tau = eval_on_grid(params, s, t)
    if cfg["family"] == "kink":
        res = residual_type1(params, s, t)
        closed_max_r1 = kink_r1_supremum(params)
        closed_r1_at_zero = -params.A1 * params.eta * params.upsilon
        param_fields = {"A1": params.A1, "A2": params.A2}
    else:
        res = residual_type2(params, s, t)
        closed_max_r1 = bell_r1_supremum(params)
        closed_r1_at_zero = 0.0
        param_fields = {"B1": params.B1, "B2": params.B2}

    outdir = _ensure_outdir(cfg["out"])
    _write_csv(outdir / "kappa_grid.csv", ["s", "t", "value"], _grid_rows(s, t, kappa))
    _write_csv(outdir / "tau_grid.csv", ["s", "t", "value"], _grid_rows(s, t, tau))
    _write_csv(outdir / "residual_R1.csv", ["s", "t", "value"], _grid_rows(s, t, res.R1))

    def r2_rows():
        for i, tv in enumerate(t):
            for j, sv in enumerate(s):
                if not res.singular_mask[i, j]:
                    yield (sv, tv, res.R2[i, j])

    _write_csv(outdir / "residual_R2.csv", ["s", "t", "value"], r2_rows())
    excluded = int(np.sum(res.singular_mask))
    valid_r2 = res.R2[~res.singular_mask]
    summary = {
        "family": cfg["family"],
        **param_fields,
        "eta": params.eta,
        "upsilon": params.upsilon,
        "upsilon_default": params.upsilon_default,
        "upsilon_alternate": params.upsilon_alternate,
        "upsilon_overridden": cfg["upsilon_overridden"],
        "max_R1": float(np.max(np.abs(res.R1))),
        "max_R2": float(np.max(np.abs(valid_r2))) if valid_r2.size else None,
        "excluded_R2_points": excluded,
        "closed_form_max_R1": closed_max_r1,
        "closed_form_R1_at_zero": closed_r1_at_zero,
    }
    _write_json(outdir / "summary.json", summary)
    _write_meta(outdir, "soliton", raw)


def _cfg_surface(raw: dict[str, str]) -> dict:
    v = _Validator(raw)
    cfg = _validate_grid(v)
    cfg.update(_validate_preset(v))
    cfg["kind"] = v.choice("kind", ("normal", "binormal"))
    cfg["kappa_expr"] = v.expression("kappa")
    cfg["tau_expr"] = v.expression("tau")
    cfg["offsets"] = v.float_list("u" if cfg["kind"] == "normal" else "v")
    cfg["dw"] = v.number("dw")
    if cfg["dw"] is not None and cfg["dw"] <= 0:
        v.fail(f"dw must be positive, got {cfg['dw']}")
    cfg["out"] = v.require("out")
    if cfg["preset"] == "custom":
        cfg["alpha_expr"], cfg["beta_expr"] = cfg["alpha"], cfg["beta"]
    v.done()
    return cfg


def run_surface(raw: dict[str, str]) -> None:
    cfg = _cfg_surface(raw)
    grid = _make_grid(cfg)
    profile = _make_profile(cfg, grid)
    provider, _ = _make_provider(cfg, grid)
    vel = provider(profile)
    kappa_t, tau_t = evolution_rhs(profile, vel)
    kappa_s = d1(profile.kappa, grid.spacing, grid.periodic)
    tau_s = d1(profile.tau, grid.spacing, grid.periodic)
    curve = reconstruct_curve(profile, standard_frame(), drift_tol=None)
    kind = cfg["kind"]
    dw = cfg["dw"]
    nan = float("nan")
    degenerate_closed = 0
    skipped_numeric = 0
    last_error: Exception | None = None
    rows = []
    for j in range(grid.n):
        k, ks, tv, ts = profile.kappa[j], kappa_s[j], profile.tau[j], tau_s[j]
        kt, tt = kappa_t[j], tau_t[j]
        for w in cfg["offsets"]:
            try:
                if kind == "normal":
                    forms = normal_forms_closed(k, ks, tv, ts, w)
                    closed = normal_curvatures_closed(k, ks, tv, ts, w)
                else:
                    forms = binormal_forms_closed(k, tv, ts, w)
                    closed = binormal_curvatures_closed(k, tv, ts, w)
                coeffs = (forms.E, forms.F, forms.G, forms.e, forms.f, forms.g)
                k_closed, h_closed = closed.K, closed.H
            except (DegenerateRuling, NullNormal, NotTimelike) as exc:
                degenerate_closed += 1
                last_error = exc
                coeffs = (nan,) * 6
                k_closed = h_closed = nan
            interior = grid.periodic or 2 <= j <= grid.n - 3
            if interior:
                try:
                    patch, ds = ruled_patch(curve, j, w, dw, kind)
                    num = curvatures_from_forms(numeric_forms(patch, ds, dw))
                    k_num, h_num = num.K, num.H
                except (NullVector, NullNormal, DegenerateRuling) as exc:
                    skipped_numeric += 1
                    last_error = exc
                    k_num = h_num = nan
            else:
                skipped_numeric += 1
                k_num = h_num = nan
            inext = (inext_residual_normal(k, tv, kt, tt, w) if kind == "normal"
                     else inext_residual_binormal(tv, tt, w))
            rows.append((grid.points[j], w, *coeffs, k_closed, h_closed,
                         k_num, h_num, inext))
    total = grid.n * len(cfg["offsets"])
    if degenerate_closed == total and skipped_numeric == total and last_error is not None:
        raise last_error
    outdir = _ensure_outdir(cfg["out"])
    _write_csv(outdir / "surface.csv",
               ["s", "u_or_v", "E", "F", "G", "e", "f", "g",
                "K_paper", "H_paper", "K_numeric", "H_numeric", "inext_residual"],
               rows)
    _write_meta(outdir, "surface", raw)
    _write_json(outdir / "surface_notes.json", {
        "degenerate_closed_points": degenerate_closed,
        "numeric_points_skipped": skipped_numeric,
        "total_points": total,
    })


def _cfg_reconstruct(raw: dict[str, str]) -> dict:
    return _cfg_evolve(raw)  # identical key set and constraints


def run_reconstruct(raw: dict[str, str]) -> None:
    cfg = _cfg_reconstruct(raw)
    grid = _make_grid(cfg)
    profile = _make_profile(cfg, grid)
    if cfg["steps"] > 0:
        provider, name = _make_provider(cfg, grid)
        traj = evolve(EvolutionState(0.0, profile), provider, cfg["dt"], cfg["steps"],
                      stride=cfg["stride"], preset_name=name)
        states = traj.states
    else:
        states = [EvolutionState(0.0, profile)]
    outdir = _ensure_outdir(cfg["out"])
    rows = []
    snapshots = []
    overall = 0.0
    for st in states:
        curve = reconstruct_curve(st.profile, standard_frame(), drift_tol=None)
        defect = frame_defect(curve.frames)
        overall = max(overall, defect)
        snapshots.append({"t": st.t, "max_defect": defect})
        for s_val, pt in zip(grid.points, curve.points):
            rows.append((st.t, s_val, pt[0], pt[1], pt[2]))
    _write_csv(outdir / "curve.csv", ["t", "s", "x1", "x2", "x3"], rows)
    _write_json(outdir / "frame_drift.json",
                {"snapshots": snapshots, "max_defect": overall})
    _write_meta(outdir, "reconstruct", raw)


def _cfg_frame_check(raw: dict[str, str]) -> dict:
    v = _Validator(raw)
    cfg = _validate_grid(v)
    cfg["kappa_expr"] = v.expression("kappa")
    cfg["tau_expr"] = v.expression("tau")
    cfg["out"] = v.require("out")
    v.done()
    return cfg


def run_frame_check(raw: dict[str, str]) -> None:
    cfg = _cfg_frame_check(raw)
    grid = _make_grid(cfg)
    profile = _make_profile(cfg, grid)
    frames = integrate_frame_s(profile, standard_frame(), drift_tol=None)
    grams = gram_matrices(frames)
    target = np.diag([1.0, -1.0, 1.0])
    dev = np.abs(grams - target)
    labels = {"TT": (0, 0), "NN": (1, 1), "BB": (2, 2),
              "TN": (0, 1), "TB": (0, 2), "NB": (1, 2)}
    outdir = _ensure_outdir(cfg["out"])
    rows = []
    for s_val, fr in zip(grid.points, frames):
        rows.append((s_val, *fr.reshape(-1)))
    _write_csv(outdir / "frames.csv",
               ["s", "T1", "T2", "T3", "N1", "N2", "N3", "B1", "B2", "B3"], rows)
    drift = {name: float(np.max(dev[:, i, j])) for name, (i, j) in labels.items()}
    drift["max_defect"] = float(np.max(dev))
    _write_json(outdir / "frame_drift.json", drift)
    _write_meta(outdir, "frame-check", raw)


_RUNNERS = {
    "evolve": run_evolve,
    "soliton": run_soliton,
    "surface": run_surface,
    "reconstruct": run_reconstruct,
    "frame-check": run_frame_check,
}


# ---------------------------------------------------------------------------
# entry point

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minkflow",
        description="Simulate curvature/torsion flows of spacelike curves in "
                    "3D Minkowski space and analyze the associated ruled surfaces.")
    parser.add_argument("--version", action="version", version=f"minkflow {__version__}")
    subs = parser.add_subparsers(dest="subcommand", required=True)
    for sub, schema in SCHEMAS.items():
        sp = subs.add_parser(sub, help=f"run the {sub} pipeline")
        sp.add_argument("--config", help="key=value config file or a run_meta.json")
        for key, spec in schema.items():
            default = "" if spec.default is None else f" (default: {spec.default})"
            sp.add_argument(f"--{key.replace('_', '-')}", dest=key, metavar="VALUE",
                            help=spec.help + default)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        raw = _resolve_config(args.subcommand, args)
        _RUNNERS[args.subcommand](raw)
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"minkflow: config error: {problem}", file=sys.stderr)
        return 2
    except ConstraintViolation as exc:
        print(f"minkflow: config error: {exc}", file=sys.stderr)
        return 2
    except _NUMERICAL_ERRORS as exc:
        print(f"minkflow: numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"minkflow: i/o error: {exc}", file=sys.stderr)
        return 4
    return 0


def main_entry() -> None:
    sys.exit(main())
