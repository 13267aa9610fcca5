"""Cursor state and per-tick updates.

Two pointing modes share one state record:

* absolute: the cursor sits wherever the controller's ray meets the
  display (the study baseline).
* relative: each tick the controller's rotation since the previous sample
  is scaled by the CD gain and re-enacted on a separate virtual ray
  (by default per yaw/pitch component; angle-axis transplants are
  available, see relative_update). The candidate orientation is accepted
  only while its yaw and pitch stay within the display rails (+/-90 deg
  yaw, +/-70 deg pitch) and its ray still meets the display, so the
  cursor can never leave the surface.

The +/-90 deg yaw rail matches the display's angular extent as seen from
its curvature centre. From positions closer to the display, on-display
rim points genuinely need larger ray yaws, so the rail widens per origin
to the yaw of the rim itself; rays that hit the display are then never
yaw-rejected, and the intersection test remains the binding bound.

Rejected updates keep the previous orientation and surface point but still
refresh the stored controller sample, i.e. pushing further against the
display edge does not accumulate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import rotation as rot
from .geometry import DisplayGeometry, Ray, SurfacePoint, intersect_ray
from .rotation import Quat, Vec3
from .transfer import CURSOR_MIN_M, TechniqueConfig, TechniqueId, cursor_diameter, gain

YAW_LIMIT_RAD = math.radians(90.0)
PITCH_LIMIT_RAD = math.radians(70.0)

DEFAULT_TICK_RATE_HZ = 90.0


@dataclass(frozen=True, slots=True)
class ControllerSample:
    """One tracked controller pose."""

    position: Vec3
    orientation: Quat  # unit quaternion
    time_s: float

    def __post_init__(self) -> None:
        n = rot.quat_norm(self.orientation)
        if abs(n - 1.0) > 1e-9:
            raise ValueError(f"orientation must be unit length, |q| = {n}")


@dataclass(frozen=True, slots=True)
class CursorState:
    virtual_orientation: Quat
    origin: Vec3
    surface: SurfacePoint
    diameter_m: float
    last_controller: ControllerSample
    on_display: bool = True


def _yaw_rails(origin: Vec3, geom: DisplayGeometry) -> tuple[float, float]:
    """Yaw acceptance window from this origin: the display rails, widened to
    the rim yaw where the rim lies beyond them."""
    r, h = geom.radius_m, geom.half_angle_rad
    rim_right = math.atan2(r * math.sin(h) - origin[0], r * math.cos(h) - origin[2])
    rim_left = math.atan2(-r * math.sin(h) - origin[0], r * math.cos(h) - origin[2])
    return min(-YAW_LIMIT_RAD, rim_left), max(YAW_LIMIT_RAD, rim_right)


def controller_speed(prev: ControllerSample, next: ControllerSample) -> float:
    """Positional speed in m/s between two samples.

    Motion is applied rotationally but speed is measured positionally, the
    same signal a tracked physical controller produces.
    """
    dt = next.time_s - prev.time_s
    if dt <= 0:
        raise ValueError("samples must be strictly increasing in time")
    return rot.vec_norm(rot.vec_sub(next.position, prev.position)) / dt


def initial_state(sample: ControllerSample, geom: DisplayGeometry) -> CursorState:
    """Cursor aligned with the controller; the controller must point at the display."""
    hit = intersect_ray(Ray(sample.position, rot.forward(sample.orientation)), geom)
    if hit is None:
        raise ValueError("initial controller orientation does not point at the display")
    return CursorState(
        virtual_orientation=sample.orientation,
        origin=sample.position,
        surface=hit,
        diameter_m=CURSOR_MIN_M,
        last_controller=sample,
    )


def absolute_update(
    state: CursorState,
    sample: ControllerSample,
    geom: DisplayGeometry,
    diameter_m: float | None = None,
) -> CursorState:
    """Raw ray-cast: cursor at the ray endpoint; a miss holds the last point."""
    hit = intersect_ray(Ray(sample.position, rot.forward(sample.orientation)), geom)
    return CursorState(
        virtual_orientation=sample.orientation,
        origin=sample.position,
        surface=hit if hit is not None else state.surface,
        diameter_m=state.diameter_m if diameter_m is None else diameter_m,
        last_controller=sample,
        on_display=hit is not None,
    )


def relative_update(
    state: CursorState,
    next: ControllerSample,
    g: float,
    geom: DisplayGeometry,
    axis_frame: str = "yaw-pitch",
    diameter_m: float | None = None,
) -> CursorState:
    """Apply the controller's rotation delta, scaled by gain, to the virtual ray.

    axis_frame picks how the per-tick delta is re-enacted on the virtual ray:

    * "yaw-pitch" (default): the delta's yaw and pitch components are each
      multiplied by the gain and added to the virtual ray's own yaw and
      pitch; the controller's roll is discarded (it never moves a ray).
      The channels stay decoupled no matter how far gain has driven the
      two frames apart.
    * "controller": angle-axis transplant with the axis re-anchored from
      the controller's local frame into the virtual ray's local frame.
      Roll accumulates on the virtual orientation and slowly cross-couples
      the channels under sustained high gain.
    * "world": angle-axis transplant with the axis kept in world
      coordinates. Once the frames diverge, pitch deltas partly become
      roll on the virtual ray.

    All three coincide while the frames are aligned, in particular under
    unit gain from an aligned start, and to first order in the per-tick
    delta.
    """
    if g <= 0:
        raise ValueError("gain must be positive")
    prev = state.last_controller.orientation
    if axis_frame == "yaw-pitch":
        prev_yaw, prev_pitch = rot.yaw_pitch_of(prev)
        next_yaw, next_pitch = rot.yaw_pitch_of(next.orientation)
        d_yaw = next_yaw - prev_yaw
        if d_yaw > math.pi:  # per-tick deltas are tiny; unwrap the seam
            d_yaw -= 2.0 * math.pi
        elif d_yaw < -math.pi:
            d_yaw += 2.0 * math.pi
        d_pitch = next_pitch - prev_pitch
        if d_yaw == 0.0 and d_pitch == 0.0:
            candidate = state.virtual_orientation
        else:
            v_yaw, v_pitch = rot.yaw_pitch_of(state.virtual_orientation)
            candidate = rot.from_yaw_pitch(v_yaw + d_yaw * g, v_pitch + d_pitch * g)
    else:
        delta = rot.quat_mul(next.orientation, rot.quat_conj(prev))
        axis, angle = rot.to_axis_angle(delta)
        candidate = state.virtual_orientation
        if angle != 0.0:
            if axis_frame == "controller":
                local_axis = rot.rotate_vec(rot.quat_conj(prev), axis)
                candidate = rot.quat_mul(
                    state.virtual_orientation, rot.from_axis_angle(local_axis, angle * g)
                )
            elif axis_frame == "world":
                candidate = rot.quat_mul(
                    rot.from_axis_angle(axis, angle * g), state.virtual_orientation
                )
            else:
                raise ValueError(f"unknown axis_frame {axis_frame!r}")
            candidate = rot.quat_normalize(candidate)

    yaw_low, yaw_high = _yaw_rails(next.position, geom)

    def ray_hit(orientation: Quat) -> SurfacePoint | None:
        yaw, pitch = rot.yaw_pitch_of(orientation)
        if not (yaw_low <= yaw <= yaw_high and abs(pitch) <= PITCH_LIMIT_RAD):
            return None
        return intersect_ray(Ray(next.position, rot.forward(orientation)), geom)

    new_diameter = state.diameter_m if diameter_m is None else diameter_m
    hit = ray_hit(candidate)
    if hit is not None:
        return CursorState(
            virtual_orientation=candidate,
            origin=next.position,
            surface=hit,
            diameter_m=new_diameter,
            last_controller=next,
            on_display=True,
        )
    if ray_hit(state.virtual_orientation) is not None:
        # classic edge resistance: the cursor would leave the display, so
        # the rotation is swallowed and the cursor stays put
        return CursorState(
            virtual_orientation=state.virtual_orientation,
            origin=next.position,
            surface=state.surface,
            diameter_m=new_diameter,
            last_controller=next,
            on_display=True,
        )
    # the ray no longer meets the display from the moved hand position (it
    # cannot have left by rotation, only by translation); letting rotation
    # through keeps recovery possible instead of stranding the orientation,
    # while the surface point holds until the ray returns
    return CursorState(
        virtual_orientation=candidate,
        origin=next.position,
        surface=state.surface,
        diameter_m=new_diameter,
        last_controller=next,
        on_display=False,
    )


def step(
    state: CursorState,
    next: ControllerSample,
    cfg: TechniqueConfig,
    interaction_distance_m: float,
    geom: DisplayGeometry,
    axis_frame: str = "yaw-pitch",
) -> tuple[CursorState, float, float]:
    """One pipeline tick: speed -> gain -> motion update -> diameter.

    Returns (new state, gain used, speed seen) so callers can log or
    display the transfer values without recomputing them.
    """
    speed = controller_speed(state.last_controller, next)
    g = gain(cfg, speed, interaction_distance_m, geom)
    diameter = cursor_diameter(cfg, speed)
    if cfg.id is TechniqueId.ABSOLUTE:
        new_state = absolute_update(state, next, geom, diameter)
    else:
        new_state = relative_update(state, next, g, geom, axis_frame, diameter)
    return new_state, g, speed
