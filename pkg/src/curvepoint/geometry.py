"""Display geometry: a vertical cylinder segment and its ray/surface math.

The interaction surface is the inside of a semi-circular cylinder standing
on the floor. World frame: origin at the curvature centre on the floor,
y up, +z toward the middle of the display, +x to a centre-standing user's
right. Surface points are addressed by (azimuth, height); azimuth 0 is the
display centre and positive azimuth is toward +x.

Distances along the surface use the unrolled (developable) metric, which
is exact for cylinders: sqrt((R * d_azimuth)^2 + d_height^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rotation import Vec3

DEFAULT_RADIUS_M = 3.27
DEFAULT_HEIGHT_M = 3.0


@dataclass(frozen=True, slots=True)
class DisplayGeometry:
    """Semi-circular display: radius, height and angular extent."""

    radius_m: float = DEFAULT_RADIUS_M
    height_m: float = DEFAULT_HEIGHT_M
    half_angle_rad: float = math.pi / 2  # 180 degrees total extent
    floor_height_m: float = 0.0

    def __post_init__(self) -> None:
        if self.radius_m <= 0:
            raise ValueError("radius_m must be positive")
        if self.height_m <= 0:
            raise ValueError("height_m must be positive")
        if not 0 < self.half_angle_rad <= math.pi:
            raise ValueError("half_angle_rad must be in (0, pi]")

    @property
    def top_m(self) -> float:
        return self.floor_height_m + self.height_m

    @property
    def unrolled_width_m(self) -> float:
        return 2.0 * self.half_angle_rad * self.radius_m

    def contains(self, p: "SurfacePoint", margin_m: float = 0.0) -> bool:
        pad_az = margin_m / self.radius_m
        return (
            -self.half_angle_rad + pad_az <= p.azimuth_rad <= self.half_angle_rad - pad_az
            and self.floor_height_m + margin_m <= p.height_m <= self.top_m - margin_m
        )


@dataclass(frozen=True, slots=True)
class SurfacePoint:
    """Point on the display surface: azimuth (rad) and height (m)."""

    azimuth_rad: float
    height_m: float


@dataclass(frozen=True, slots=True)
class UserPosition:
    """Standing position: distance along the main axis (in multiples of the
    curvature radius), signed lateral offset (negative = left), and the
    height the controller is held at."""

    distance_multiple: float = 1.0
    lateral_offset_m: float = 0.0
    controller_height_m: float = 1.0

    def __post_init__(self) -> None:
        if self.distance_multiple <= 0:
            raise ValueError("distance_multiple must be positive")


@dataclass(frozen=True, slots=True)
class Ray:
    origin: Vec3
    direction: Vec3  # unit length

    def __post_init__(self) -> None:
        dx, dy, dz = self.direction
        n = math.sqrt(dx * dx + dy * dy + dz * dz)
        if abs(n - 1.0) > 1e-9:
            raise ValueError(f"ray direction must be unit length, |d| = {n}")


def user_world_position(pos: UserPosition, geom: DisplayGeometry) -> Vec3:
    """World position of the held controller.

    The user stands distance_multiple * R in front of the display centre
    along the main axis; at distance_multiple = 1 that is the curvature
    centre itself.
    """
    z = (1.0 - pos.distance_multiple) * geom.radius_m
    return (pos.lateral_offset_m, pos.controller_height_m, z)


def interaction_distance_m(pos: UserPosition, geom: DisplayGeometry) -> float:
    """Perpendicular distance from the user to the display centre."""
    return pos.distance_multiple * geom.radius_m


def surface_to_world(p: SurfacePoint, geom: DisplayGeometry) -> Vec3:
    if not geom.contains(p):
        raise ValueError(f"surface point {p} outside display bounds")
    r = geom.radius_m
    return (r * math.sin(p.azimuth_rad), p.height_m, r * math.cos(p.azimuth_rad))


def intersect_ray(ray: Ray, geom: DisplayGeometry) -> SurfacePoint | None:
    """Nearest forward intersection with the display, or None on a miss.

    Solves (ox + t*dx)^2 + (oz + t*dz)^2 = R^2 for the smallest t > 0 and
    converts the hit to surface coordinates. Misses (no positive root,
    vertical ray, azimuth or height out of bounds) return None; callers
    treat that as an ordinary value.
    """
    ox, oy, oz = ray.origin
    dx, dy, dz = ray.direction
    r = geom.radius_m

    a = dx * dx + dz * dz
    if a < 1e-18:  # ray parallel to the cylinder axis
        return None
    b = 2.0 * (ox * dx + oz * dz)
    c = ox * ox + oz * oz - r * r
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return None
    sqrt_disc = math.sqrt(disc)
    # smallest positive root; with the origin strictly inside (c < 0) only
    # the + root is positive, but handle origins outside gracefully too.
    t = (-b - sqrt_disc) / (2.0 * a)
    if t <= 0.0:
        t = (-b + sqrt_disc) / (2.0 * a)
    if t <= 0.0:
        return None

    hx = ox + t * dx
    hy = oy + t * dy
    hz = oz + t * dz
    p = SurfacePoint(math.atan2(hx, hz), hy)
    if not geom.contains(p):
        return None
    return p


def geodesic_distance(a: SurfacePoint, b: SurfacePoint, geom: DisplayGeometry) -> float:
    """Distance along the unrolled surface (exact geodesic for a cylinder)."""
    dx = geom.radius_m * (a.azimuth_rad - b.azimuth_rad)
    dy = a.height_m - b.height_m
    return math.hypot(dx, dy)


def unroll(p: SurfacePoint, geom: DisplayGeometry) -> tuple[float, float]:
    """Map a surface point to the unrolled plane (arc-length x, height y)."""
    return (geom.radius_m * p.azimuth_rad, p.height_m)


def roll(x: float, y: float, geom: DisplayGeometry) -> SurfacePoint:
    """Inverse of unroll."""
    return SurfacePoint(x / geom.radius_m, y)
