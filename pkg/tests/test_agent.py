import math
from dataclasses import replace
from random import Random

import pytest

from curvepoint.agent import AgentParams, noiseless, plan_aim_orientation, run_trial
from curvepoint.geometry import (
    DisplayGeometry,
    SurfacePoint,
    UserPosition,
    geodesic_distance,
    user_world_position,
)
from curvepoint.pointer import ControllerSample, initial_state
from curvepoint.rotation import from_yaw_pitch
from curvepoint.tasks import TaskSpec, TrialLayout, generate_layout
from curvepoint.transfer import SigmoidParams, TechniqueId, technique

GEOM = DisplayGeometry()
R = GEOM.radius_m
CENTER = UserPosition(1.0, 0.0)
PARAMS = AgentParams()


def constant_gain_technique(g: float):
    """PBA wired so its distance sigmoid is the constant g."""
    cfg = technique(TechniqueId.PBA)
    return replace(cfg, distance_sigmoid=SigmoidParams(g, g, lambda_=-1.0 / R,
                                                       v_max=1.5 * R, v_min=0.5 * R))


class TestRunTrial:
    def test_deterministic_per_seed(self):
        layout = generate_layout(Random(3), TaskSpec(5.0, 0.2), GEOM)
        a = run_trial(42, PARAMS, technique("PA"), CENTER, layout, GEOM)
        b = run_trial(42, PARAMS, technique("PA"), CENTER, layout, GEOM)
        assert a == b
        c = run_trial(43, PARAMS, technique("PA"), CENTER, layout, GEOM)
        assert c != a

    def test_movement_time_is_ticks_over_rate(self):
        layout = generate_layout(Random(3), TaskSpec(2.5, 0.7), GEOM)
        out = run_trial(1, PARAMS, technique("ABSOLUTE"), CENTER, layout, GEOM)
        assert out.movement_time_s == out.tick_count / 90.0

    def test_degenerate_giant_target(self):
        # amplitude 0, target taller than the display: only reaction,
        # commit and the trigger latency remain
        start = SurfacePoint(0.0, 1.0)
        layout = TrialLayout(start=start, target=start, spec=TaskSpec(0.0, 10.0))
        out = run_trial(7, PARAMS, technique("ABSOLUTE"), CENTER, layout, GEOM)
        assert out.success
        expected = (PARAMS.reaction_ticks + PARAMS.dwell_ticks_before_click) / 90.0
        assert abs(out.movement_time_s - expected) <= 2 / 90.0

    @pytest.mark.parametrize("tech", ["ABSOLUTE", "PA", "PBA", "PADIST", "PADISTSIZE"])
    def test_noiseless_agent_always_succeeds(self, tech):
        quiet = noiseless(PARAMS)
        cfg = technique(tech)
        for seed in range(8):
            layout = generate_layout(Random(100 + seed), TaskSpec(5.0, 0.2), GEOM)
            out = run_trial(seed, quiet, cfg, CENTER, layout, GEOM)
            assert out.success, f"{tech} seed {seed}"

    def test_harder_tasks_take_longer(self):
        # ID 6.25 bits vs 4.70 bits, directional only
        def mean_mt(amplitude):
            mts = []
            for seed in range(60):
                layout = generate_layout(Random(7_000 + seed), TaskSpec(amplitude, 0.10), GEOM)
                out = run_trial(seed, PARAMS, technique("ABSOLUTE"), CENTER, layout, GEOM)
                mts.append(out.movement_time_s)
            return sum(mts) / len(mts)

        assert mean_mt(7.5) > mean_mt(2.5)

    def test_timeout_marks_failure(self):
        # an agent that cannot move never reaches the target
        frozen = replace(
            noiseless(PARAMS), peak_angular_speed_radps=1e-9, timeout_s=0.5
        )
        layout = generate_layout(Random(4), TaskSpec(5.0, 0.2), GEOM)
        out = run_trial(0, frozen, technique("ABSOLUTE"), CENTER, layout, GEOM)
        assert not out.success
        assert out.movement_time_s == pytest.approx(0.5)

    def test_endpoint_is_on_display(self):
        for seed in range(10):
            layout = generate_layout(Random(500 + seed), TaskSpec(7.5, 0.1), GEOM)
            out = run_trial(seed, PARAMS, technique("PADISTSIZE"), CENTER, layout, GEOM)
            assert GEOM.contains(out.endpoint)


class TestPlanAimOrientation:
    def _state_at(self, cursor: SurfacePoint, pos: UserPosition):
        origin = user_world_position(pos, GEOM)
        from curvepoint.geometry import surface_to_world
        from curvepoint.rotation import vec_normalize, vec_sub

        f = vec_normalize(vec_sub(surface_to_world(cursor, GEOM), origin))
        orientation = from_yaw_pitch(math.atan2(f[0], f[2]), math.asin(f[1]))
        return initial_state(ControllerSample(origin, orientation, 0.0), GEOM)

    def test_on_target_zero_delta(self):
        cursor = SurfacePoint(0.2, 1.0)
        state = self._state_at(cursor, CENTER)
        dyaw, dpitch = plan_aim_orientation(state, cursor, technique("PA"), CENTER, GEOM)
        assert abs(dyaw) < 1e-9 and abs(dpitch) < 1e-9

    def test_unit_gain_from_centre_is_subtended_angle(self):
        # from the curvature centre at cursor height, yaw equals azimuth
        cursor = SurfacePoint(-0.3, 1.0)
        target = SurfacePoint(0.5, 1.0)
        state = self._state_at(cursor, CENTER)
        dyaw, dpitch = plan_aim_orientation(state, target, technique("ABSOLUTE"), CENTER, GEOM)
        assert dyaw == pytest.approx(0.8, abs=1e-9)
        assert dpitch == pytest.approx(0.0, abs=1e-9)

    def test_gain_two_commands_half_the_angle(self):
        cursor = SurfacePoint(-0.3, 1.0)
        target = SurfacePoint(0.5, 1.0)
        state = self._state_at(cursor, CENTER)
        cfg = constant_gain_technique(2.0)
        dyaw, _ = plan_aim_orientation(state, target, cfg, CENTER, GEOM)
        assert dyaw == pytest.approx(0.4, abs=1e-9)

    def test_gain_two_closed_loop_converges(self):
        cfg = constant_gain_technique(2.0)
        quiet = noiseless(PARAMS)
        for seed in range(5):
            layout = generate_layout(Random(800 + seed), TaskSpec(5.0, 0.2), GEOM)
            out = run_trial(seed, quiet, cfg, CENTER, layout, GEOM)
            assert out.success
            assert geodesic_distance(out.endpoint, layout.target, GEOM) <= (0.2 + 0.025) / 2


class TestDirectionalTrends:
    def _stats(self, tech, distance_multiple, spec, n=50):
        cfg = technique(tech)
        pos = UserPosition(distance_multiple, 0.0)
        mts, hits = [], 0
        for seed in range(n):
            layout = generate_layout(Random(9_000 + seed), spec, GEOM)
            out = run_trial(seed * 17 + 3, PARAMS, cfg, pos, layout, GEOM)
            mts.append(out.movement_time_s)
            hits += out.success
        return sum(mts) / n, hits / n

    def test_absolute_faster_but_sloppier_when_far(self):
        spec = TaskSpec(5.0, 0.2)
        mt_near, acc_near = self._stats("ABSOLUTE", 0.5, spec, n=80)
        mt_far, acc_far = self._stats("ABSOLUTE", 1.5, spec, n=80)
        assert mt_far < mt_near
        assert acc_far <= acc_near


def test_params_validation():
    with pytest.raises(ValueError):
        AgentParams(undershoot_mean=0.0)
    with pytest.raises(ValueError):
        AgentParams(tremor_smoothing=1.0)
    with pytest.raises(ValueError):
        AgentParams(arm_length_m=0.0)
