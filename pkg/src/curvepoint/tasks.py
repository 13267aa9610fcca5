"""Trial layouts and selection semantics for the 2D selection task.

A trial is: select the start circle, then select a round target whose
centre lies a fixed surface distance (the amplitude) away. Layouts are
sampled on the unrolled surface so amplitudes are exact geodesics.

Selection uses disc-overlap ("area cursor") semantics by default: a click
succeeds when the cursor disc overlaps the target disc. Enlarging the
cursor therefore genuinely helps selection. Centre-in-target semantics are
available behind a switch for sensitivity checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .geometry import DisplayGeometry, SurfacePoint, geodesic_distance, roll, unroll

START_DIAMETER_M = 0.20

# Disc centres stay this far (beyond their own radius) from the display
# edges. Rim-hugging targets force the pointer's edge rails into play and
# never represented the live task.
EDGE_CLEARANCE_M = 0.15

# Condition grids from the two studies: amplitudes x widths in metres.
STUDY1_TASKS = [(a, w) for w in (0.20, 0.70) for a in (2.5, 5.0, 7.5)]
STUDY2_TASKS = [(a, w) for w in (0.10,) for a in (2.5, 7.5)]


@dataclass(frozen=True, slots=True)
class TaskSpec:
    amplitude_m: float
    width_m: float

    def __post_init__(self) -> None:
        if self.amplitude_m < 0:
            raise ValueError("amplitude must be non-negative")
        if self.width_m <= 0:
            raise ValueError("width must be positive")


@dataclass(frozen=True, slots=True)
class TrialLayout:
    start: SurfacePoint
    target: SurfacePoint
    spec: TaskSpec


def task_preset(name: str) -> list[TaskSpec]:
    grids = {"study1": STUDY1_TASKS, "study2": STUDY2_TASKS}
    if name not in grids:
        raise ValueError(f"unknown task preset {name!r} (expected one of {sorted(grids)})")
    return [TaskSpec(a, w) for a, w in grids[name]]


def fitts_id(amplitude_m: float, width_m: float) -> float:
    """Shannon index of difficulty, log2(A/W + 1), in bits."""
    if width_m <= 0:
        raise ValueError("width must be positive")
    if amplitude_m < 0:
        raise ValueError("amplitude must be non-negative")
    return math.log2(amplitude_m / width_m + 1.0)


def _feasible_box(geom: DisplayGeometry, margin_m: float) -> tuple[float, float, float, float]:
    """(x_min, x_max, y_min, y_max) on the unrolled plane for a disc centre."""
    half_w = geom.half_angle_rad * geom.radius_m
    return (
        -half_w + margin_m,
        half_w - margin_m,
        geom.floor_height_m + margin_m,
        geom.top_m - margin_m,
    )


def layout_feasible(spec: TaskSpec, geom: DisplayGeometry) -> bool:
    """Whether start and target discs can both fit at the given amplitude."""
    sx0, sx1, sy0, sy1 = _feasible_box(geom, START_DIAMETER_M / 2 + EDGE_CLEARANCE_M)
    tx0, tx1, ty0, ty1 = _feasible_box(geom, spec.width_m / 2 + EDGE_CLEARANCE_M)
    if sx0 > sx1 or sy0 > sy1 or tx0 > tx1 or ty0 > ty1:
        return False
    # widest separation between a start-box point and a target-box point
    span_x = max(0.0, sx1 - tx0, tx1 - sx0)
    span_y = max(0.0, sy1 - ty0, ty1 - sy0)
    return spec.amplitude_m <= math.hypot(span_x, span_y)


def generate_layout(rng: Random, spec: TaskSpec, geom: DisplayGeometry) -> TrialLayout:
    """Random start, then a target a fixed geodesic distance away.

    The start is uniform over positions admitting at least one target
    direction; directions are rejection-sampled uniformly on the unrolled
    plane until both discs fit.
    """
    if not layout_feasible(spec, geom):
        raise ValueError(
            f"amplitude {spec.amplitude_m} m with width {spec.width_m} m "
            "does not fit on the display"
        )
    sx0, sx1, sy0, sy1 = _feasible_box(geom, START_DIAMETER_M / 2 + EDGE_CLEARANCE_M)
    tx0, tx1, ty0, ty1 = _feasible_box(geom, spec.width_m / 2 + EDGE_CLEARANCE_M)

    a = spec.amplitude_m
    while True:
        sx = rng.uniform(sx0, sx1)
        sy = rng.uniform(sy0, sy1)
        if a == 0.0:
            start = roll(sx, sy, geom)
            return TrialLayout(start=start, target=start, spec=spec)
        for _ in range(64):
            phi = rng.uniform(0.0, 2.0 * math.pi)
            tx = sx + a * math.cos(phi)
            ty = sy + a * math.sin(phi)
            if tx0 <= tx <= tx1 and ty0 <= ty <= ty1:
                return TrialLayout(start=roll(sx, sy, geom), target=roll(tx, ty, geom), spec=spec)
        # start admits no target at this amplitude; draw a fresh one


def hit_test(
    cursor: SurfacePoint,
    cursor_diameter_m: float,
    layout: TrialLayout,
    geom: DisplayGeometry,
    semantics: str = "overlap",
) -> bool:
    """Whether a click at the cursor selects the target.

    "overlap": the cursor disc touches the target disc (area cursor).
    "center": the cursor centre lies inside the target.
    """
    d = geodesic_distance(cursor, layout.target, geom)
    if semantics == "overlap":
        return d <= (layout.spec.width_m + cursor_diameter_m) / 2.0
    if semantics == "center":
        return d <= layout.spec.width_m / 2.0
    raise ValueError(f"unknown hit semantics {semantics!r}")


__all__ = [
    "START_DIAMETER_M",
    "STUDY1_TASKS",
    "STUDY2_TASKS",
    "TaskSpec",
    "TrialLayout",
    "task_preset",
    "fitts_id",
    "layout_feasible",
    "generate_layout",
    "hit_test",
    "unroll",
]
