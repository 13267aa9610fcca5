"""Plan configuration: JSON files, strict parsing, study presets.

Every published constant is a default here, never hard-coded downstream:
a config file can override any of them. Parsing is strict; an unknown key
anywhere is an error, so typos cannot silently fall back to defaults.
"""

from __future__ import annotations

import json
from dataclasses import fields
from typing import Any

from .agent import AgentParams
from .experiment import STUDY_POSITIONS, ExperimentPlan
from .geometry import DisplayGeometry, UserPosition
from .tasks import TaskSpec, task_preset
from .transfer import (
    DistanceAdjust,
    SigmoidParams,
    TechniqueConfig,
    TechniqueId,
    SIZE_VARIANTS,
    default_distance_sigmoid,
    default_gain_sigmoid,
    default_size_sigmoid,
    technique,
)

PRESETS = ("study1", "study2")

STUDY2_TECHNIQUES = [
    TechniqueId.PA,
    TechniqueId.PASIZE,
    TechniqueId.PBA,
    TechniqueId.PBASIZE,
    TechniqueId.PADIST,
    TechniqueId.PADISTSIZE,
]


class ConfigError(ValueError):
    """Invalid or unparseable configuration."""


def preset_plan(name: str, master_seed: int = 0) -> ExperimentPlan:
    """A plan pinning the published factor grids and constants."""
    if name == "study1":
        technique_ids: list[TechniqueId] = [TechniqueId.ABSOLUTE]
    elif name == "study2":
        technique_ids = list(STUDY2_TECHNIQUES)
    else:
        raise ConfigError(f"unknown preset {name!r} (expected one of {PRESETS})")
    geom = DisplayGeometry()
    return ExperimentPlan(
        techniques=[technique(t, geom.radius_m) for t in technique_ids],
        positions=list(STUDY_POSITIONS),
        specs=task_preset(name),
        repetitions=10,
        virtual_participants=12,
        master_seed=master_seed,
        agent=AgentParams(),
        geom=geom,
    )


def _check_keys(obj: dict[str, Any], allowed: set[str], context: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) {sorted(unknown)} in {context}")


def _build(cls, obj: dict[str, Any], context: str, rename: dict[str, str] | None = None):
    rename = rename or {}
    field_names = {f.name for f in fields(cls)}
    allowed = {rename.get(n, n) for n in field_names} | set(rename)
    _check_keys(obj, set(rename) | field_names, context)
    kwargs = {rename.get(k, k): v for k, v in obj.items()}
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{context}: {exc}") from exc


def _sigmoid(obj: dict[str, Any], context: str, base: SigmoidParams) -> SigmoidParams:
    allowed = {"out_max", "out_min", "lambda", "v_max", "v_min", "r_inf"}
    _check_keys(obj, allowed, context)
    kwargs = {("lambda_" if k == "lambda" else k): v for k, v in obj.items()}
    try:
        return SigmoidParams(
            out_max=kwargs.get("out_max", base.out_max),
            out_min=kwargs.get("out_min", base.out_min),
            lambda_=kwargs.get("lambda_", base.lambda_),
            v_max=kwargs.get("v_max", base.v_max),
            v_min=kwargs.get("v_min", base.v_min),
            r_inf=kwargs.get("r_inf", base.r_inf),
        )
    except ValueError as exc:
        raise ConfigError(f"{context}: {exc}") from exc


def _technique(obj: Any, radius_m: float, context: str) -> TechniqueConfig:
    if isinstance(obj, str):
        try:
            return technique(obj, radius_m)
        except ValueError as exc:
            raise ConfigError(f"{context}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ConfigError(f"{context}: expected a technique name or object")
    _check_keys(
        obj, {"id", "gain_sigmoid", "distance_sigmoid", "distance_adjust", "size_sigmoid"}, context
    )
    if "id" not in obj:
        raise ConfigError(f"{context}: technique object needs an 'id'")
    try:
        tid = TechniqueId(obj["id"])
    except ValueError as exc:
        raise ConfigError(f"{context}: {exc}") from exc
    gain_sig = _sigmoid(obj.get("gain_sigmoid", {}), f"{context}.gain_sigmoid", default_gain_sigmoid())
    dist_sig = _sigmoid(
        obj.get("distance_sigmoid", {}),
        f"{context}.distance_sigmoid",
        default_distance_sigmoid(radius_m),
    )
    dist_adj = _build(DistanceAdjust, obj.get("distance_adjust", {}), f"{context}.distance_adjust")
    size_sig = None
    if tid in SIZE_VARIANTS:
        size_sig = _sigmoid(
            obj.get("size_sigmoid", {}), f"{context}.size_sigmoid", default_size_sigmoid()
        )
    elif "size_sigmoid" in obj:
        raise ConfigError(f"{context}: size_sigmoid is only valid for SIZE variants")
    return TechniqueConfig(
        id=tid,
        gain_sigmoid=gain_sig,
        distance_sigmoid=dist_sig,
        distance_adjust=dist_adj,
        size_sigmoid=size_sig,
    )


_PLAN_KEYS = {
    "master_seed",
    "virtual_participants",
    "repetitions",
    "practice_trials",
    "tick_rate_hz",
    "hit_semantics",
    "geometry",
    "positions",
    "tasks",
    "techniques",
    "agent",
    "preset",
}


def plan_from_dict(obj: dict[str, Any], base: ExperimentPlan | None = None) -> ExperimentPlan:
    """Build a plan from parsed JSON, overriding a preset base if given."""
    if not isinstance(obj, dict):
        raise ConfigError("config root must be a JSON object")
    _check_keys(obj, _PLAN_KEYS, "config")

    if "preset" in obj:
        base = preset_plan(obj["preset"], master_seed=obj.get("master_seed", 0))
    if base is None:
        base = preset_plan("study1")

    geom = base.geom
    if "geometry" in obj:
        geom = _build(DisplayGeometry, obj["geometry"], "geometry")

    positions = base.positions
    if "positions" in obj:
        if not isinstance(obj["positions"], list):
            raise ConfigError("positions must be a list")
        positions = [
            _build(UserPosition, p, f"positions[{i}]") for i, p in enumerate(obj["positions"])
        ]

    specs = base.specs
    if "tasks" in obj:
        tasks = obj["tasks"]
        if isinstance(tasks, str):
            try:
                specs = task_preset(tasks)
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        elif isinstance(tasks, list):
            specs = [_build(TaskSpec, t, f"tasks[{i}]") for i, t in enumerate(tasks)]
        else:
            raise ConfigError("tasks must be a preset name or a list")

    techniques = base.techniques
    if "techniques" in obj:
        if not isinstance(obj["techniques"], list) or not obj["techniques"]:
            raise ConfigError("techniques must be a non-empty list")
        techniques = [
            _technique(t, geom.radius_m, f"techniques[{i}]")
            for i, t in enumerate(obj["techniques"])
        ]

    agent = base.agent
    if "agent" in obj:
        agent = _build(AgentParams, obj["agent"], "agent")

    try:
        return ExperimentPlan(
            techniques=techniques,
            positions=positions,
            specs=specs,
            repetitions=obj.get("repetitions", base.repetitions),
            virtual_participants=obj.get("virtual_participants", base.virtual_participants),
            master_seed=obj.get("master_seed", base.master_seed),
            agent=agent,
            geom=geom,
            tick_rate_hz=obj.get("tick_rate_hz", base.tick_rate_hz),
            practice_trials=obj.get("practice_trials", base.practice_trials),
            hit_semantics=obj.get("hit_semantics", base.hit_semantics),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def load_plan(
    config_path: str | None = None,
    preset: str | None = None,
    master_seed: int | None = None,
) -> ExperimentPlan:
    base = preset_plan(preset) if preset else None
    if config_path is not None:
        try:
            with open(config_path, "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        except FileNotFoundError:
            raise ConfigError(f"config file not found: {config_path}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{config_path}: invalid JSON ({exc})") from exc
        plan = plan_from_dict(obj, base=base)
    elif base is not None:
        plan = base
    else:
        raise ConfigError("need --preset and/or --config to define a plan")
    if master_seed is not None:
        from dataclasses import replace

        plan = replace(plan, master_seed=master_seed)
    return plan
