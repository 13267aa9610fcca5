"""Scalar quaternion and yaw/pitch helpers for the cursor pipeline.

Quaternions are (w, x, y, z) tuples of floats. Everything here is plain
scalar math on tuples: these functions sit inside the per-tick simulation
loop, where numpy's per-call overhead would dominate.

Frame convention (right-handed): y up, +z toward the display centre,
+x to a centre-standing user's right. "Forward" is +z. Yaw is rotation
about +y (positive toward +x), pitch is elevation (positive up), roll is
ignored throughout.
"""

from __future__ import annotations

import math

Vec3 = tuple[float, float, float]
Quat = tuple[float, float, float, float]

IDENTITY: Quat = (1.0, 0.0, 0.0, 0.0)


def quat_mul(a: Quat, b: Quat) -> Quat:
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return (
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by + ay * bw + az * bx - ax * bz,
        aw * bz + az * bw + ax * by - ay * bx,
    )


def quat_conj(q: Quat) -> Quat:
    w, x, y, z = q
    return (w, -x, -y, -z)


def quat_normalize(q: Quat) -> Quat:
    w, x, y, z = q
    n = math.sqrt(w * w + x * x + y * y + z * z)
    if n == 0.0:
        raise ValueError("cannot normalize zero quaternion")
    return (w / n, x / n, y / n, z / n)


def quat_norm(q: Quat) -> float:
    w, x, y, z = q
    return math.sqrt(w * w + x * x + y * y + z * z)


def from_axis_angle(axis: Vec3, angle_rad: float) -> Quat:
    ax, ay, az = axis
    n = math.sqrt(ax * ax + ay * ay + az * az)
    if n < 1e-15:
        return IDENTITY
    half = 0.5 * angle_rad
    s = math.sin(half) / n
    return (math.cos(half), ax * s, ay * s, az * s)


def to_axis_angle(q: Quat) -> tuple[Vec3, float]:
    """Canonical (axis, angle) with angle in [0, pi].

    The identity (or anything numerically indistinguishable from it) maps
    to angle 0 about +x.
    """
    w, x, y, z = q
    if w < 0.0:  # flip to the shortest-arc representative
        w, x, y, z = -w, -x, -y, -z
    s = math.sqrt(x * x + y * y + z * z)
    if s < 1e-15:
        return (1.0, 0.0, 0.0), 0.0
    angle = 2.0 * math.atan2(s, w)
    return (x / s, y / s, z / s), angle


def rotate_vec(q: Quat, v: Vec3) -> Vec3:
    # q * (0, v) * conj(q), expanded
    w, x, y, z = q
    vx, vy, vz = v
    tx = 2.0 * (y * vz - z * vy)
    ty = 2.0 * (z * vx - x * vz)
    tz = 2.0 * (x * vy - y * vx)
    return (
        vx + w * tx + (y * tz - z * ty),
        vy + w * ty + (z * tx - x * tz),
        vz + w * tz + (x * ty - y * tx),
    )


def forward(q: Quat) -> Vec3:
    """Direction the rotated +z axis points at."""
    return rotate_vec(q, (0.0, 0.0, 1.0))


def from_yaw_pitch(yaw_rad: float, pitch_rad: float) -> Quat:
    """Roll-free orientation: yaw about +y, then pitch up about the local x."""
    hy = 0.5 * yaw_rad
    hp = -0.5 * pitch_rad  # +pitch lifts forward toward +y
    cy, sy = math.cos(hy), math.sin(hy)
    cp, sp = math.cos(hp), math.sin(hp)
    # quat_mul(rot_y(yaw), rot_x(-pitch))
    return (cy * cp, cy * sp, sy * cp, -sy * sp)


def yaw_pitch_of(q: Quat) -> tuple[float, float]:
    """Yaw/pitch of the forward direction, both in (-pi, pi]. Roll is discarded."""
    fx, fy, fz = forward(q)
    yaw = math.atan2(fx, fz)
    pitch = math.asin(max(-1.0, min(1.0, fy)))
    return yaw, pitch


def rotation_between(a: Vec3, b: Vec3) -> tuple[Vec3, float]:
    """(axis, angle) of the shortest rotation taking direction a onto b."""
    ax, ay, az = a
    bx, by, bz = b
    cx = ay * bz - az * by
    cy = az * bx - ax * bz
    cz = ax * by - ay * bx
    cross = math.sqrt(cx * cx + cy * cy + cz * cz)
    dot = ax * bx + ay * by + az * bz
    angle = math.atan2(cross, dot)
    if cross < 1e-12:
        if dot >= 0.0:
            return (1.0, 0.0, 0.0), 0.0
        # antiparallel: any axis orthogonal to a works
        ox, oy, oz = (-ay, ax, 0.0) if abs(az) < 0.9 else (0.0, -az, ay)
        n = math.sqrt(ox * ox + oy * oy + oz * oz)
        return (ox / n, oy / n, oz / n), angle
    return (cx / cross, cy / cross, cz / cross), angle


def vec_sub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def vec_add(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def vec_scale(a: Vec3, s: float) -> Vec3:
    return (a[0] * s, a[1] * s, a[2] * s)


def vec_norm(a: Vec3) -> float:
    return math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])


def vec_normalize(a: Vec3) -> Vec3:
    n = vec_norm(a)
    if n == 0.0:
        raise ValueError("cannot normalize zero vector")
    return (a[0] / n, a[1] / n, a[2] / n)
