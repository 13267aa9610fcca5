"""curvepoint: ray-cast target selection on large curved displays.

A deterministic simulator and analysis toolkit: display geometry and ray
casting, cursor-enhancement transfer functions (speed-, distance- and
size-based), a relative rotation-delta pointer, a synthetic pointing
agent, a factorial experiment harness with CSV logging, and throughput
analytics. An HTTP session protocol (``curvepoint serve``) lets a live
frontend drive the same core math interactively.
"""

from .agent import AgentParams, TrialOutcome, noiseless, plan_aim_orientation, run_trial
from .analysis import (
    ConditionSummary,
    ThroughputReport,
    effective_width,
    fitts_fit,
    mean_mt_by_id,
    summarize,
    throughput,
)
from .config import ConfigError, load_plan, plan_from_dict, preset_plan
from .experiment import (
    ExperimentPlan,
    STUDY_POSITIONS,
    TrialRecord,
    derive_seed,
    read_csv,
    run,
    write_csv,
)
from .geometry import (
    DisplayGeometry,
    Ray,
    SurfacePoint,
    UserPosition,
    geodesic_distance,
    interaction_distance_m,
    intersect_ray,
    surface_to_world,
    user_world_position,
)
from .pointer import (
    ControllerSample,
    CursorState,
    absolute_update,
    controller_speed,
    initial_state,
    relative_update,
    step,
)
from .tasks import (
    TaskSpec,
    TrialLayout,
    fitts_id,
    generate_layout,
    hit_test,
    layout_feasible,
    task_preset,
)
from .transfer import (
    DistanceAdjust,
    SigmoidParams,
    TechniqueConfig,
    TechniqueId,
    cursor_diameter,
    distance_bounds,
    gain,
    inflection,
    scaled_distance,
    sigmoid_map,
    technique,
)

__version__ = "0.1.0"

__all__ = [
    "AgentParams",
    "ConditionSummary",
    "ConfigError",
    "ControllerSample",
    "CursorState",
    "DisplayGeometry",
    "DistanceAdjust",
    "ExperimentPlan",
    "Ray",
    "STUDY_POSITIONS",
    "SigmoidParams",
    "SurfacePoint",
    "TaskSpec",
    "TechniqueConfig",
    "TechniqueId",
    "ThroughputReport",
    "TrialLayout",
    "TrialOutcome",
    "TrialRecord",
    "UserPosition",
    "absolute_update",
    "controller_speed",
    "cursor_diameter",
    "derive_seed",
    "distance_bounds",
    "effective_width",
    "fitts_fit",
    "fitts_id",
    "gain",
    "generate_layout",
    "geodesic_distance",
    "hit_test",
    "inflection",
    "initial_state",
    "interaction_distance_m",
    "intersect_ray",
    "layout_feasible",
    "load_plan",
    "mean_mt_by_id",
    "noiseless",
    "plan_aim_orientation",
    "plan_from_dict",
    "preset_plan",
    "read_csv",
    "relative_update",
    "run",
    "run_trial",
    "scaled_distance",
    "sigmoid_map",
    "step",
    "summarize",
    "surface_to_world",
    "task_preset",
    "technique",
    "throughput",
    "user_world_position",
    "write_csv",
]
