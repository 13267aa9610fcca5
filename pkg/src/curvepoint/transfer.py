"""Control-display gain and cursor-size transfer functions.

Six cursor-enhancement techniques plus the absolute ray-cast baseline:

    ==========  ==============================  =====================
    technique   cursor speed (CD gain)          cursor size
    ==========  ==============================  =====================
    ABSOLUTE    1.0 (raw ray-cast)              fixed 2.5 cm
    PA          sigmoid of controller speed     fixed 2.5 cm
    PASIZE      sigmoid of controller speed     sigmoid of speed
    PBA         sigmoid of standing distance    fixed 2.5 cm
    PBASIZE     sigmoid of standing distance    sigmoid of speed
    PADIST      speed sigmoid, distance bounds  fixed 2.5 cm
    PADISTSIZE  speed sigmoid, distance bounds  sigmoid of speed
    ==========  ==============================  =====================

All maps share one logistic transfer:

    out(x) = (out_max - out_min) / (1 + exp(-lambda * (x - v_inf))) + out_min
    v_inf  = r_inf * (v_max - v_min) + v_min

Distance-aware techniques shift the output bounds linearly with the scaled
standing distance d_s in [0, 1]:

    out_max(d_s) = base_out_max - a * d_s
    out_min(d_s) = base_out_min - a * d_s

The distance-only technique (PBA family) wants HIGH gain close to the
display, i.e. a transfer that decreases with distance. We keep its bounds
in their published order (4.5 down to 0.7) and use a negative slope
lambda = -20/R per metre, anchored at the middle standing distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import DEFAULT_RADIUS_M, DisplayGeometry

# Published defaults for the speed-driven sigmoid.
SPEED_LAMBDA = 20.0
SPEED_V_MAX = 1.0
SPEED_V_MIN = 0.1
R_INF = 0.5

CURSOR_MIN_M = 0.025
CURSOR_MAX_M = 0.20

_EXP_CLAMP = 700.0  # exp() overflows just above 709


class TechniqueId(str, Enum):
    ABSOLUTE = "ABSOLUTE"
    PA = "PA"
    PASIZE = "PASIZE"
    PBA = "PBA"
    PBASIZE = "PBASIZE"
    PADIST = "PADIST"
    PADISTSIZE = "PADISTSIZE"


SIZE_VARIANTS = {TechniqueId.PASIZE, TechniqueId.PBASIZE, TechniqueId.PADISTSIZE}
DISTANCE_BOUND_VARIANTS = {TechniqueId.PADIST, TechniqueId.PADISTSIZE}
DISTANCE_ONLY_VARIANTS = {TechniqueId.PBA, TechniqueId.PBASIZE}


@dataclass(frozen=True, slots=True)
class SigmoidParams:
    """Parameters of one logistic transfer map.

    out_max/out_min are the asymptotes (gain or metres), lambda_ the slope
    at the inflection point (per input unit; negative slope = decreasing
    map), and v_max/v_min/r_inf place the inflection point per
    v_inf = r_inf * (v_max - v_min) + v_min.
    """

    out_max: float
    out_min: float
    lambda_: float = SPEED_LAMBDA
    v_max: float = SPEED_V_MAX
    v_min: float = SPEED_V_MIN
    r_inf: float = R_INF

    def __post_init__(self) -> None:
        if self.v_max <= self.v_min:
            raise ValueError("v_max must exceed v_min")
        if not 0.0 <= self.r_inf <= 1.0:
            raise ValueError("r_inf must lie in [0, 1]")


@dataclass(frozen=True, slots=True)
class DistanceAdjust:
    """Linear shift of the gain bounds with scaled standing distance."""

    a: float = 0.2
    cd_max_bar: float = 1.2
    cd_min_bar: float = 0.8

    def __post_init__(self) -> None:
        if self.cd_max_bar <= self.cd_min_bar:
            raise ValueError("cd_max_bar must exceed cd_min_bar")


def default_gain_sigmoid() -> SigmoidParams:
    return SigmoidParams(out_max=1.2, out_min=0.8)


def default_size_sigmoid() -> SigmoidParams:
    return SigmoidParams(out_max=CURSOR_MAX_M, out_min=CURSOR_MIN_M)


def default_distance_sigmoid(radius_m: float = DEFAULT_RADIUS_M) -> SigmoidParams:
    """Distance-driven gain: 4.5 near the display, 0.7 far away.

    Anchored so the inflection sits at the middle standing distance R, with
    the curve saturating near the 0.5R / 1.5R extremes.
    """
    return SigmoidParams(
        out_max=4.5,
        out_min=0.7,
        lambda_=-SPEED_LAMBDA / radius_m,
        v_max=1.5 * radius_m,
        v_min=0.5 * radius_m,
        r_inf=R_INF,
    )


@dataclass(frozen=True, slots=True)
class TechniqueConfig:
    id: TechniqueId
    gain_sigmoid: SigmoidParams
    distance_sigmoid: SigmoidParams
    distance_adjust: DistanceAdjust
    size_sigmoid: SigmoidParams | None = None

    def __post_init__(self) -> None:
        if (self.size_sigmoid is not None) != (self.id in SIZE_VARIANTS):
            raise ValueError(f"size_sigmoid must be present iff {self.id} is a SIZE variant")


def technique(id: TechniqueId | str, radius_m: float = DEFAULT_RADIUS_M) -> TechniqueConfig:
    """Technique configuration with the published constants as defaults."""
    tid = TechniqueId(id)
    return TechniqueConfig(
        id=tid,
        gain_sigmoid=default_gain_sigmoid(),
        distance_sigmoid=default_distance_sigmoid(radius_m),
        distance_adjust=DistanceAdjust(),
        size_sigmoid=default_size_sigmoid() if tid in SIZE_VARIANTS else None,
    )


def inflection(p: SigmoidParams) -> float:
    """Input value at which the sigmoid crosses its midpoint."""
    return p.r_inf * (p.v_max - p.v_min) + p.v_min


def _logistic(x: float, out_max: float, out_min: float, lambda_: float, v_inf: float) -> float:
    exponent = -lambda_ * (x - v_inf)
    if exponent > _EXP_CLAMP:
        exponent = _EXP_CLAMP
    elif exponent < -_EXP_CLAMP:
        exponent = -_EXP_CLAMP
    return (out_max - out_min) / (1.0 + math.exp(exponent)) + out_min


def sigmoid_map(x: float, p: SigmoidParams) -> float:
    return _logistic(x, p.out_max, p.out_min, p.lambda_, inflection(p))


def scaled_distance(d_m: float, geom: DisplayGeometry) -> float:
    """Standing distance mapped to [0, 1]: 0 at 0.5R, 0.5 at R, 1 at 1.5R."""
    if d_m <= 0:
        raise ValueError("distance must be positive")
    return max(0.0, min(1.0, d_m / geom.radius_m - 0.5))


def distance_bounds(d_s: float, adj: DistanceAdjust) -> tuple[float, float]:
    """(cd_max, cd_min) gain bounds after the linear distance shift."""
    if not 0.0 <= d_s <= 1.0:
        raise ValueError("d_s must lie in [0, 1]")
    return (adj.cd_max_bar - adj.a * d_s, adj.cd_min_bar - adj.a * d_s)


def gain(
    cfg: TechniqueConfig,
    controller_speed_mps: float,
    interaction_distance_m: float,
    geom: DisplayGeometry,
) -> float:
    """Dimensionless multiplier applied to the controller's rotation angle."""
    if controller_speed_mps < 0:
        raise ValueError("speed must be non-negative")
    tid = cfg.id
    if tid is TechniqueId.ABSOLUTE:
        return 1.0
    if tid in DISTANCE_ONLY_VARIANTS:
        return sigmoid_map(interaction_distance_m, cfg.distance_sigmoid)
    if tid in DISTANCE_BOUND_VARIANTS:
        d_s = scaled_distance(interaction_distance_m, geom)
        cd_max, cd_min = distance_bounds(d_s, cfg.distance_adjust)
        p = cfg.gain_sigmoid
        return _logistic(controller_speed_mps, cd_max, cd_min, p.lambda_, inflection(p))
    return sigmoid_map(controller_speed_mps, cfg.gain_sigmoid)


def cursor_diameter(cfg: TechniqueConfig, controller_speed_mps: float) -> float:
    """Cursor diameter in metres; speed-driven for the SIZE variants."""
    if controller_speed_mps < 0:
        raise ValueError("speed must be non-negative")
    if cfg.size_sigmoid is None:
        return CURSOR_MIN_M
    return sigmoid_map(controller_speed_mps, cfg.size_sigmoid)
