"""Synthetic pointing agent: the stand-in for a human participant.

The agent holds a virtual controller on an arm pivot and steers the cursor
with ballistic-plus-corrective submovements in wrist coordinates (yaw and
pitch of the commanded orientation):

1. reaction delay (the target just appeared),
2. a ballistic movement toward the yaw/pitch whose cursor lands on the
   target centre, scaled by a noisy undershoot factor and executed with a
   minimum-jerk profile,
3. corrective submovements, re-planned from (one tick old) visual feedback
   while the selection is perceived as failing, each after a short
   monitoring pause,
4. once the selection is perceived to succeed, and a linear extrapolation
   of the perceived cursor velocity says it will still succeed when the
   trigger lands (no committing while sweeping across the target), a
   fixed motor latency, then the trigger press. A used-up correction
   budget forces the click regardless.

Noise sources: multiplicative undershoot per submovement, small additive
aim scatter per submovement, smoothed angular tremor every tick, and a
trigger-press jerk at the click itself. Tremor and jerk are constant in
ANGLE, so their surface effect grows with standing distance; this is the
mechanism behind the distance/accuracy trade-off the harness reproduces.

The agent never inverts a transfer function analytically: plans assume the
gain at the planned mean speed and rely on re-planning to absorb the
difference, so any gain function plugs in unchanged.

All parameters are synthetic. They are tuned for plausible Fitts-like
regularity and trend reproduction, not to match human millisecond values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from . import rotation as rot
from .geometry import (
    DisplayGeometry,
    SurfacePoint,
    UserPosition,
    interaction_distance_m,
    roll,
    surface_to_world,
    user_world_position,
)
from .pointer import ControllerSample, CursorState, initial_state, step
from .rotation import Vec3
from .tasks import TrialLayout, hit_test, unroll
from .transfer import TechniqueConfig, TechniqueId, cursor_diameter, gain

@dataclass(frozen=True, slots=True)
class AgentParams:
    peak_angular_speed_radps: float = 16.0
    duration_base_s: float = 0.15  # submovement duration = base + per_rad * angle
    duration_per_rad_s: float = 0.06
    undershoot_mean: float = 0.90
    undershoot_sd: float = 0.10
    aim_noise_rad: float = 0.008  # additive endpoint scatter per submovement
    tremor_sd_rad: float = 0.0026  # ~0.15 deg
    tremor_smoothing: float = 0.8
    click_jerk_sd_rad: float = 0.009  # trigger-press angular perturbation, per axis
    click_pos_jolt_m: float = 0.008  # trigger-press jolt of the tracked position
    reaction_ticks: int = 9
    replan_ticks: int = 10  # monitoring pause before each correction
    dwell_ticks_before_click: int = 6  # motor latency from decision to trigger
    max_corrections: int = 5
    arm_length_m: float = 0.25  # wrist-to-controller lever for positional speed
    timeout_s: float = 10.0

    def __post_init__(self) -> None:
        if not 0.0 < self.undershoot_mean <= 1.0:
            raise ValueError("undershoot_mean must lie in (0, 1]")
        if not 0.0 <= self.tremor_smoothing < 1.0:
            raise ValueError("tremor_smoothing must lie in [0, 1)")
        if min(
            self.peak_angular_speed_radps,
            self.duration_base_s,
            self.arm_length_m,
            self.timeout_s,
        ) <= 0:
            raise ValueError("durations, speeds and arm length must be positive")


@dataclass(frozen=True, slots=True)
class TrialOutcome:
    movement_time_s: float
    success: bool
    endpoint: SurfacePoint
    click_diameter_m: float
    tick_count: int


def noiseless(params: AgentParams) -> AgentParams:
    """Copy of params with every stochastic component switched off."""
    from dataclasses import replace

    return replace(
        params,
        undershoot_mean=1.0,
        undershoot_sd=0.0,
        aim_noise_rad=0.0,
        tremor_sd_rad=0.0,
        click_jerk_sd_rad=0.0,
        click_pos_jolt_m=0.0,
    )


def _yaw_pitch_to(origin: Vec3, point_world: Vec3) -> tuple[float, float]:
    f = rot.vec_normalize(rot.vec_sub(point_world, origin))
    return math.atan2(f[0], f[2]), math.asin(max(-1.0, min(1.0, f[1])))


def _submovement_duration(params: AgentParams, angle_rad: float) -> float:
    base = params.duration_base_s + params.duration_per_rad_s * angle_rad
    # min-jerk peak speed is 1.875 * angle / duration; stretch to respect the cap
    floor = 1.875 * angle_rad / params.peak_angular_speed_radps
    return max(base, floor)


def _min_jerk_fractions(
    duration_s: float, tick_rate_hz: float, max_ticks: int = 36000
) -> list[float]:
    """Per-tick position-fraction increments of a minimum-jerk profile.

    The tick count is capped: a pathological speed cap could otherwise ask
    for a profile longer than any trial can run.
    """
    n = min(max(1, round(duration_s * tick_rate_hz)), max_ticks)
    incs = []
    prev = 0.0
    for i in range(1, n + 1):
        tau = i / n
        s = tau * tau * tau * (10.0 + tau * (-15.0 + 6.0 * tau))
        incs.append(s - prev)
        prev = s
    return incs


def plan_aim_orientation(
    state: CursorState,
    target: SurfacePoint,
    cfg: TechniqueConfig,
    pos: UserPosition,
    geom: DisplayGeometry,
    params: AgentParams | None = None,
) -> tuple[float, float]:
    """Controller rotation delta (yaw, pitch radians) expected to put the
    cursor on the target centre, assuming the gain at the planned mean
    speed.

    For speed-dependent gains this is only an estimate; callers re-plan
    from feedback rather than inverting the transfer exactly.
    """
    params = params or AgentParams()
    return _plan_motor(
        state.origin,
        rot.yaw_pitch_of(state.virtual_orientation),
        target,
        cfg,
        interaction_distance_m(pos, geom),
        geom,
        params,
    )


def _plan_motor(
    origin: Vec3,
    ray_yaw_pitch: tuple[float, float],
    target: SurfacePoint,
    cfg: TechniqueConfig,
    distance_m: float,
    geom: DisplayGeometry,
    params: AgentParams,
) -> tuple[float, float]:
    """Motor-space (yaw, pitch) delta toward the target under the planned gain.

    Plans from the virtual ray's own direction rather than the on-display
    cursor point: when the ray has been pushed past the display edge the
    frozen cursor would understate how far the hand must come back.
    """
    yaw_c, pitch_c = ray_yaw_pitch
    yaw_t, pitch_t = _yaw_pitch_to(origin, surface_to_world(target, geom))
    # direct difference, not wrapped: the route always crosses the display
    # front, never the short way through the user's back
    dyaw = yaw_t - yaw_c
    dpitch = pitch_t - pitch_c
    return _apply_gain_plan(dyaw, dpitch, cfg, distance_m, geom, params)


def _apply_gain_plan(
    dyaw_display: float,
    dpitch_display: float,
    cfg: TechniqueConfig,
    distance_m: float,
    geom: DisplayGeometry,
    params: AgentParams,
) -> tuple[float, float]:
    """Display-space delta -> motor delta, dividing by the gain expected at
    the planned mean movement speed (fixed-point iteration)."""
    angle = math.hypot(dyaw_display, dpitch_display)
    if angle == 0.0 or cfg.id is TechniqueId.ABSOLUTE:
        return dyaw_display, dpitch_display
    theta = angle
    for _ in range(3):
        duration = _submovement_duration(params, theta)
        planned_speed = params.arm_length_m * theta / duration
        theta = angle / gain(cfg, planned_speed, distance_m, geom)
    scale = theta / angle
    return dyaw_display * scale, dpitch_display * scale


def _plan_with_arm(
    pivot: Vec3,
    cmd_yaw: float,
    cmd_pitch: float,
    virtual_yaw_pitch: tuple[float, float],
    target_world: Vec3,
    cfg: TechniqueConfig,
    distance_m: float,
    geom: DisplayGeometry,
    params: AgentParams,
) -> tuple[float, float]:
    """Like _plan_motor, but anticipates that executing the plan swings the
    hand on its arm pivot and therefore moves the ray origin. Close to the
    display the origin shift rivals the correction itself; ignoring it
    leaves naive re-planning in a limit cycle that never converges."""
    vyaw, vpitch = virtual_yaw_pitch
    dyaw = 0.0
    dpitch = 0.0
    for _ in range(4):
        end_orient = rot.from_yaw_pitch(cmd_yaw + dyaw, cmd_pitch + dpitch)
        end_origin = rot.vec_add(pivot, rot.vec_scale(rot.forward(end_orient), params.arm_length_m))
        yaw_t, pitch_t = _yaw_pitch_to(end_origin, target_world)
        dyaw, dpitch = _apply_gain_plan(
            yaw_t - vyaw, pitch_t - vpitch, cfg, distance_m, geom, params
        )
    return dyaw, dpitch


def run_trial(
    rng_seed: int,
    params: AgentParams,
    cfg: TechniqueConfig,
    pos: UserPosition,
    layout: TrialLayout,
    geom: DisplayGeometry,
    tick_rate_hz: float = 90.0,
    hit_semantics: str = "overlap",
) -> TrialOutcome:
    """Simulate one selection trial; deterministic per seed.

    The trial clock starts when the target appears (the start circle was
    just selected, cursor on its centre) and stops at the trigger press,
    mirroring the start-to-target timing of the live task.
    """
    rng = Random(rng_seed)
    dt = 1.0 / tick_rate_hz
    distance_m = interaction_distance_m(pos, geom)
    user = user_world_position(pos, geom)
    arm = params.arm_length_m

    target_world = surface_to_world(layout.target, geom)
    cmd_yaw, cmd_pitch = _yaw_pitch_to(user, surface_to_world(layout.start, geom))
    commanded = rot.from_yaw_pitch(cmd_yaw, cmd_pitch)
    # hand pivot chosen so the controller starts exactly at the user position
    pivot = rot.vec_sub(user, rot.vec_scale(rot.forward(commanded), arm))

    state = initial_state(ControllerSample(user, commanded, 0.0), geom)

    tremor_yaw = 0.0
    tremor_pitch = 0.0
    reaction_left = params.reaction_ticks
    wait_left = 0
    fractions: list[float] | None = None
    move_yaw = 0.0
    move_pitch = 0.0
    move_extent = 0.0
    frac_index = 0
    ballistic_planned = False
    corrections_used = 0
    click_tick = 0  # 0 = not committed yet

    # one-tick-old perception buffer, plus what the hand did that tick
    stale_xy = prev_xy = unroll(state.surface, geom)
    last_cmd_motion = 0.0
    last_fraction = 0.0

    max_ticks = int(round(params.timeout_s * tick_rate_hz))
    for tick in range(1, max_ticks + 1):
        d_yaw = 0.0
        d_pitch = 0.0
        consumed_fraction = 0.0
        if reaction_left > 0:
            reaction_left -= 1
        else:
            # a cursor that held still although the hand was moving is
            # pinned against a display edge, not hovering over the target
            pinned = stale_xy == prev_xy and last_cmd_motion > 1e-12
            if (
                click_tick == 0
                and not pinned
                and hit_test(state.surface, state.diameter_m, layout, geom, hit_semantics)
            ):
                # the selection looks right already (with the cursor size
                # as it is NOW, enlarged mid-flight for the SIZE variants);
                # commit only if it is also predicted to succeed when the
                # trigger lands. The agent knows its own motor plan: the
                # perceived one-tick displacement is scaled by the profile
                # fractions still to come before the click, and the cursor
                # size is predicted from the hand speed the plan dictates
                # at the click tick (an enlarged cursor shrinks back once
                # the hand stops).
                dx = stale_xy[0] - prev_xy[0]
                dy = stale_xy[1] - prev_xy[1]
                dwell = params.dwell_ticks_before_click
                if fractions is not None and last_fraction > 1e-12:
                    # upcoming travel relative to the last observed tick,
                    # weighting each future tick's profile fraction by the
                    # gain its hand speed will earn (speed-driven gains
                    # sag as the hand decelerates)
                    v_last = arm * move_extent * last_fraction / dt
                    weighted = 0.0
                    click_index = frac_index + dwell
                    for j in range(frac_index, min(click_index + 1, len(fractions))):
                        v_j = arm * move_extent * fractions[j] / dt
                        if j == click_index:
                            v_j += params.click_pos_jolt_m / dt
                        weighted += fractions[j] * gain(cfg, v_j, distance_m, geom)
                    denom = last_fraction * gain(cfg, v_last, distance_m, geom)
                    # cap the ratio: early profile ticks are tiny and would
                    # amplify perceptual noise absurdly
                    scale = min(weighted / denom, 8.0)
                    f_click = fractions[click_index] if click_index < len(fractions) else 0.0
                    speed_at_click = (arm * move_extent * f_click + params.click_pos_jolt_m) / dt
                else:
                    scale = 0.0  # hand commanded still: no predictable drift
                    speed_at_click = params.click_pos_jolt_m / dt
                predicted = roll(stale_xy[0] + dx * scale, stale_xy[1] + dy * scale, geom)
                predicted_diam = cursor_diameter(cfg, speed_at_click)
                if hit_test(predicted, predicted_diam, layout, geom, hit_semantics):
                    click_tick = tick + dwell

            if fractions is not None:
                f = fractions[frac_index]
                d_yaw = move_yaw * f
                d_pitch = move_pitch * f
                consumed_fraction = f
                frac_index += 1
                if frac_index >= len(fractions):
                    fractions = None
                    wait_left = params.replan_ticks
            elif click_tick == 0:
                if wait_left > 0:
                    wait_left -= 1
                elif ballistic_planned and corrections_used >= params.max_corrections:
                    # out of corrections: click anyway
                    click_tick = tick + params.dwell_ticks_before_click
                else:
                    dyaw, dpitch = _plan_with_arm(
                        pivot,
                        cmd_yaw,
                        cmd_pitch,
                        rot.yaw_pitch_of(state.virtual_orientation),
                        target_world,
                        cfg,
                        distance_m,
                        geom,
                        params,
                    )
                    if ballistic_planned:
                        corrections_used += 1
                    ballistic_planned = True
                    u = rng.gauss(params.undershoot_mean, params.undershoot_sd)
                    move_yaw = dyaw * u + rng.gauss(0.0, params.aim_noise_rad)
                    move_pitch = dpitch * u + rng.gauss(0.0, params.aim_noise_rad)
                    move_extent = math.hypot(move_yaw, move_pitch)
                    if move_extent > 1e-9:
                        duration = _submovement_duration(params, move_extent)
                        fractions = _min_jerk_fractions(duration, tick_rate_hz, max_ticks)
                        frac_index = 0
                        f = fractions[frac_index]
                        d_yaw = move_yaw * f
                        d_pitch = move_pitch * f
                        consumed_fraction = f
                        frac_index += 1
                        if frac_index >= len(fractions):
                            fractions = None
                            wait_left = params.replan_ticks
                    else:
                        wait_left = params.replan_ticks

        if params.tremor_sd_rad > 0.0:
            s = params.tremor_smoothing
            tremor_yaw = s * tremor_yaw + (1.0 - s) * rng.gauss(0.0, params.tremor_sd_rad)
            tremor_pitch = s * tremor_pitch + (1.0 - s) * rng.gauss(0.0, params.tremor_sd_rad)

        cmd_yaw += d_yaw
        cmd_pitch += d_pitch
        last_cmd_motion = abs(d_yaw) + abs(d_pitch)
        last_fraction = consumed_fraction
        if tick == click_tick and params.click_jerk_sd_rad > 0.0:
            cmd_yaw += rng.gauss(0.0, params.click_jerk_sd_rad)
            cmd_pitch += rng.gauss(0.0, params.click_jerk_sd_rad)

        orient = rot.from_yaw_pitch(cmd_yaw + tremor_yaw, cmd_pitch + tremor_pitch)
        position = rot.vec_add(pivot, rot.vec_scale(rot.forward(orient), arm))
        if tick == click_tick and params.click_pos_jolt_m > 0.0:
            # squeezing the trigger jolts the tracked position; the speed
            # estimator sees a spike, so a speed-sized cursor re-inflates
            # for the click instant
            position = rot.vec_add(
                position, rot.vec_scale(rot.forward(orient), params.click_pos_jolt_m)
            )
        sample = ControllerSample(position, orient, tick * dt)
        state, _, _ = step(state, sample, cfg, distance_m, geom)
        prev_xy = stale_xy
        stale_xy = unroll(state.surface, geom)

        if tick == click_tick:
            success = hit_test(state.surface, state.diameter_m, layout, geom, hit_semantics)
            return TrialOutcome(
                movement_time_s=tick / tick_rate_hz,
                success=success,
                endpoint=state.surface,
                click_diameter_m=state.diameter_m,
                tick_count=tick,
            )

    return TrialOutcome(
        movement_time_s=max_ticks / tick_rate_hz,
        success=False,
        endpoint=state.surface,
        click_diameter_m=state.diameter_m,
        tick_count=max_ticks,
    )
