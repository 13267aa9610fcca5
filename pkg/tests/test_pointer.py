import math
from random import Random

import pytest

from curvepoint import rotation as rot
from curvepoint.geometry import DisplayGeometry
from curvepoint.pointer import (
    ControllerSample,
    absolute_update,
    controller_speed,
    initial_state,
    relative_update,
    step,
)
from curvepoint.transfer import CURSOR_MIN_M, TechniqueId, sigmoid_map, technique

GEOM = DisplayGeometry()
R = GEOM.radius_m
CENTER = (0.0, 1.0, 0.0)


def sample_at(yaw, pitch, t, position=CENTER):
    return ControllerSample(position, rot.from_yaw_pitch(yaw, pitch), t)


class TestRotationHelpers:
    def test_from_yaw_pitch_forward(self):
        f = rot.forward(rot.from_yaw_pitch(0.3, 0.2))
        assert f[0] == pytest.approx(math.cos(0.2) * math.sin(0.3))
        assert f[1] == pytest.approx(math.sin(0.2))
        assert f[2] == pytest.approx(math.cos(0.2) * math.cos(0.3))

    def test_yaw_pitch_roundtrip(self):
        for yaw, pitch in [(0.0, 0.0), (0.5, -0.3), (-1.2, 0.8)]:
            y, p = rot.yaw_pitch_of(rot.from_yaw_pitch(yaw, pitch))
            assert y == pytest.approx(yaw)
            assert p == pytest.approx(pitch)

    def test_axis_angle_roundtrip(self):
        q = rot.from_axis_angle((0.0, 1.0, 0.0), 0.7)
        axis, angle = rot.to_axis_angle(q)
        assert angle == pytest.approx(0.7)
        assert axis[1] == pytest.approx(1.0)

    def test_rotation_between(self):
        # +z onto +x is a +90 degree turn about +y
        axis, angle = rot.rotation_between((0.0, 0.0, 1.0), (1.0, 0.0, 0.0))
        assert angle == pytest.approx(math.pi / 2)
        assert axis[1] == pytest.approx(1.0)


class TestControllerSpeed:
    def test_stationary(self):
        a = sample_at(0, 0, 0.0)
        b = sample_at(0, 0, 1 / 90)
        assert controller_speed(a, b) == 0.0

    def test_one_tick_displacement(self):
        a = ControllerSample(CENTER, rot.IDENTITY, 0.0)
        b = ControllerSample((0.01, 1.0, 0.0), rot.IDENTITY, 1 / 90)
        assert controller_speed(a, b) == pytest.approx(0.9)

    def test_zero_dt_rejected(self):
        a = sample_at(0, 0, 0.0)
        with pytest.raises(ValueError):
            controller_speed(a, a)

    def test_non_unit_orientation_rejected(self):
        with pytest.raises(ValueError):
            ControllerSample(CENTER, (1.0, 1.0, 0.0, 0.0), 0.0)


class TestAbsoluteUpdate:
    def test_straight_ahead(self):
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        assert state.surface.azimuth_rad == pytest.approx(0.0)
        assert state.surface.height_m == pytest.approx(1.0)

    def test_yaw_maps_to_azimuth_from_centre(self):
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        new = absolute_update(state, sample_at(math.pi / 6, 0, 1 / 90), GEOM)
        assert new.surface.azimuth_rad == pytest.approx(math.pi / 6)
        assert new.on_display

    def test_off_display_holds_last_point(self):
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        new = absolute_update(state, sample_at(math.radians(95), 0, 1 / 90), GEOM)
        assert not new.on_display
        assert new.surface == state.surface


class TestRelativeUpdate:
    def test_unit_gain_tracks_controller(self):
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        rng = Random(3)
        yaw = pitch = 0.0
        for i in range(1, 200):
            yaw = max(-1.2, min(1.2, yaw + rng.gauss(0, 0.01)))
            pitch = max(-0.25, min(0.45, pitch + rng.gauss(0, 0.005)))
            nxt = sample_at(yaw, pitch, i / 90)
            state = relative_update(state, nxt, 1.0, GEOM)
            vy, vp = rot.yaw_pitch_of(state.virtual_orientation)
            assert vy == pytest.approx(yaw, abs=1e-9)
            assert vp == pytest.approx(pitch, abs=1e-9)

    def test_gain_two_doubles_single_yaw_delta(self):
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        new = relative_update(state, sample_at(math.radians(5), 0, 1 / 90), 2.0, GEOM)
        vy, _vp = rot.yaw_pitch_of(new.virtual_orientation)
        assert vy == pytest.approx(math.radians(10), abs=1e-9)

    @pytest.mark.parametrize("axis_frame", ["yaw-pitch", "controller", "world"])
    def test_candidate_past_yaw_rail_rejected(self, axis_frame):
        # from the curvature centre the rail sits exactly at +/-90 degrees
        state = initial_state(sample_at(math.radians(89), 0, 0.0), GEOM)
        new = relative_update(
            state, sample_at(math.radians(91), 0, 1 / 90), 1.0, GEOM, axis_frame
        )
        assert new.surface == state.surface
        vy, _ = rot.yaw_pitch_of(new.virtual_orientation)
        assert vy == pytest.approx(math.radians(89))

    def test_axis_frames_agree_when_aligned(self):
        deltas = [(0.02, 0.01), (-0.01, 0.015), (0.005, -0.02)]
        finals = []
        for frame in ("yaw-pitch", "controller", "world"):
            state = initial_state(sample_at(0.1, 0.05, 0.0), GEOM)
            yaw, pitch = 0.1, 0.05
            for i, (dy, dp) in enumerate(deltas, start=1):
                yaw += dy
                pitch += dp
                state = relative_update(state, sample_at(yaw, pitch, i / 90), 1.0, GEOM, frame)
            finals.append(rot.yaw_pitch_of(state.virtual_orientation))
        for other in finals[1:]:
            assert finals[0] == pytest.approx(other, abs=1e-9)

    def test_unknown_axis_frame_rejected(self):
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        with pytest.raises(ValueError):
            relative_update(state, sample_at(0.01, 0, 1 / 90), 1.0, GEOM, "euler")

    def test_gain_must_be_positive(self):
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        with pytest.raises(ValueError):
            relative_update(state, sample_at(0.01, 0, 1 / 90), 0.0, GEOM)


class TestStep:
    def test_absolute_matches_absolute_update(self):
        cfg = technique(TechniqueId.ABSOLUTE)
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        nxt = sample_at(0.2, 0.1, 1 / 90)
        via_step, g, _speed = step(state, nxt, cfg, R, GEOM)
        direct = absolute_update(state, nxt, GEOM, CURSOR_MIN_M)
        assert g == 1.0
        assert via_step == direct
        assert via_step.diameter_m == CURSOR_MIN_M

    def test_pa_stationary_low_gain(self):
        cfg = technique(TechniqueId.PA)
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        nxt = sample_at(0, 0, 1 / 90)
        new, g, speed = step(state, nxt, cfg, R, GEOM)
        assert speed == 0.0
        assert g == pytest.approx(sigmoid_map(0.0, cfg.gain_sigmoid))
        assert g == pytest.approx(0.8, abs=1e-4)
        assert new.surface == state.surface

    def test_padistsize_far_fast(self):
        cfg = technique(TechniqueId.PADISTSIZE)
        state = initial_state(sample_at(0, 0, 0.0), GEOM)
        fast = ControllerSample((0.05, 1.0, 0.0), rot.from_yaw_pitch(0.02, 0.0), 1 / 90)
        new, g, speed = step(state, fast, cfg, R, GEOM)
        assert speed == pytest.approx(4.5)
        # bounds at d_s = 0.5 are (1.1, 0.7); this speed saturates high
        assert g == pytest.approx(1.1, abs=1e-3)
        assert new.diameter_m > 0.19

    def test_determinism(self):
        cfg = technique(TechniqueId.PADIST)
        rng = Random(11)
        stream = []
        yaw = pitch = 0.0
        for i in range(1, 300):
            yaw += rng.gauss(0, 0.01)
            pitch += rng.gauss(0, 0.004)
            stream.append(sample_at(yaw * 0.5, pitch * 0.5, i / 90))

        def run():
            state = initial_state(sample_at(0, 0, 0.0), GEOM)
            out = []
            for s in stream:
                state, g, speed = step(state, s, cfg, R, GEOM)
                out.append((state.surface, state.diameter_m, g, speed))
            return out

        assert run() == run()

    def test_size_variant_same_trajectory_as_base(self):
        rng = Random(5)
        stream = []
        yaw = pitch = 0.0
        for i in range(1, 400):
            yaw = max(-1.0, min(1.0, yaw + rng.gauss(0, 0.02)))
            pitch = max(-0.2, min(0.4, pitch + rng.gauss(0, 0.008)))
            pos = (rng.gauss(0, 0.002), 1.0 + rng.gauss(0, 0.002), rng.gauss(0, 0.002))
            stream.append(ControllerSample(pos, rot.from_yaw_pitch(yaw, pitch), i / 90))

        # same input stream: identical cursor path, only the diameter differs
        base = []
        size = []
        for tech, out in ((TechniqueId.PA, base), (TechniqueId.PASIZE, size)):
            state = initial_state(sample_at(0, 0, 0.0), GEOM)
            cfg = technique(tech)
            for s in stream:
                state, _, _ = step(state, s, cfg, R, GEOM)
                out.append(state.surface)
        assert base == size


def test_cursor_never_leaves_display_under_random_streams():
    for seed in range(15):
        rng = Random(seed)
        tech = rng.choice(list(TechniqueId))
        cfg = technique(tech)
        start_yaw = rng.uniform(-0.8, 0.8)
        state = initial_state(sample_at(start_yaw, 0.1, 0.0), GEOM)
        yaw, pitch = start_yaw, 0.1
        for i in range(1, 500):
            yaw += rng.gauss(0, 0.08)
            pitch += rng.gauss(0, 0.04)
            pos = (rng.uniform(-1.0, 1.0), rng.uniform(0.5, 1.5), rng.uniform(-1.0, 1.0))
            state, _, _ = step(
                state, ControllerSample(pos, rot.from_yaw_pitch(yaw, pitch), i / 90), cfg, R, GEOM
            )
            assert GEOM.contains(state.surface)
