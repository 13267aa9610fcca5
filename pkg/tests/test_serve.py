import json
import math
import threading
import urllib.request

import pytest

from curvepoint.geometry import DisplayGeometry
from curvepoint.serve import CoreService, make_server
from curvepoint.transfer import cursor_diameter, gain, technique

GEOM = DisplayGeometry()


@pytest.fixture(scope="module")
def server_url():
    server = make_server(0, CoreService(master_seed=123))
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{port}"
    server.shutdown()
    server.server_close()


def post(url, payload, expect_status=200):
    req = urllib.request.Request(
        url, data=json.dumps(payload).encode(), headers={"Content-Type": "application/json"}
    )
    try:
        with urllib.request.urlopen(req) as resp:
            assert resp.status == expect_status
            return json.loads(resp.read())
    except urllib.error.HTTPError as err:
        assert err.code == expect_status
        return json.loads(err.read())


def start_session(url, **kwargs):
    msg = {"op": "start_session", "technique": "PADISTSIZE", "distance_multiple": 1.0,
           "lateral_offset_m": 0.0, "preset": "study2"}
    msg.update(kwargs)
    return post(url, msg)


class TestProtocol:
    def test_start_session_returns_layout(self, server_url):
        reply = start_session(server_url)
        assert isinstance(reply["session"], int)
        layout = reply["layout"]
        assert set(layout) == {"start", "target", "width_m"}
        assert layout["width_m"] == 0.1
        assert -math.pi / 2 <= layout["start"]["azimuth_rad"] <= math.pi / 2

    def test_zero_delta_step_keeps_cursor(self, server_url):
        session = start_session(server_url)
        sid = session["session"]
        first = post(server_url, {
            "op": "step", "session": sid, "dt_s": 0.011,
            "controller_delta": {"yaw_rad": 0.0, "pitch_rad": 0.0, "pos_delta_m": [0, 0, 0]},
        })
        assert first["cursor"]["azimuth_rad"] == pytest.approx(
            session["layout"]["start"]["azimuth_rad"], abs=1e-9
        )
        assert first["gain"] > 0
        assert first["diameter_m"] >= 0.025

    def test_step_moves_cursor_by_gain(self, server_url):
        sid = start_session(server_url, technique="PA", distance_multiple=1.0)["session"]
        before = post(server_url, {
            "op": "step", "session": sid, "dt_s": 0.011,
            "controller_delta": {"yaw_rad": 0.0, "pitch_rad": 0.0, "pos_delta_m": [0, 0, 0]},
        })
        after = post(server_url, {
            "op": "step", "session": sid, "dt_s": 0.011,
            "controller_delta": {"yaw_rad": 0.01, "pitch_rad": 0.0, "pos_delta_m": [0, 0, 0]},
        })
        moved = after["cursor"]["azimuth_rad"] - before["cursor"]["azimuth_rad"]
        # stationary-hand gain sits at the slow end of the PA sigmoid
        assert moved == pytest.approx(0.01 * after["gain"], rel=1e-6)
        assert after["gain"] == pytest.approx(0.8, abs=1e-3)

    def test_click_reports_and_advances(self, server_url):
        sid = start_session(server_url)["session"]
        reply = post(server_url, {"op": "click", "session": sid})
        assert reply["success"] is False  # cursor still on the start circle
        assert reply["movement_time_s"] >= 0.0
        assert "next_layout" in reply

    def test_technique_switch_changes_size_behaviour(self, server_url):
        sid = start_session(server_url, technique="PADISTSIZE")["session"]

        def fast_step():
            return post(server_url, {
                "op": "step", "session": sid, "dt_s": 0.011,
                "controller_delta": {"yaw_rad": 0.002, "pitch_rad": 0.0,
                                     "pos_delta_m": [0.02, 0.0, 0.0]},
            })

        enlarged = fast_step()
        assert enlarged["diameter_m"] > 0.15  # speed-driven enlargement
        ack = post(server_url, {"op": "set_params", "session": sid, "technique": "PA"})
        assert ack == {"ok": True}
        fixed = fast_step()
        assert fixed["diameter_m"] == pytest.approx(0.025)

    def test_set_params_position_change(self, server_url):
        sid = start_session(server_url, technique="PBA", distance_multiple=0.5)["session"]
        near = post(server_url, {
            "op": "step", "session": sid, "dt_s": 0.011,
            "controller_delta": {"yaw_rad": 0.0, "pitch_rad": 0.0, "pos_delta_m": [0, 0, 0]},
        })
        assert near["gain"] == pytest.approx(4.5, abs=0.01)
        post(server_url, {"op": "set_params", "session": sid, "distance_multiple": 1.5})
        far = post(server_url, {
            "op": "step", "session": sid, "dt_s": 0.011,
            "controller_delta": {"yaw_rad": 0.0, "pitch_rad": 0.0, "pos_delta_m": [0, 0, 0]},
        })
        assert far["gain"] == pytest.approx(0.7, abs=0.01)

    def test_validate_matches_transfer_module(self, server_url):
        pairs = [[s / 10.0, 0.5 * GEOM.radius_m + d * 0.3] for s in range(10) for d in range(10)]
        reply = post(server_url, {"op": "validate", "technique": "PADISTSIZE", "pairs": pairs})
        cfg = technique("PADISTSIZE")
        for (speed, dist), g, dia in zip(pairs, reply["gains"], reply["diameters"]):
            assert g == pytest.approx(gain(cfg, speed, dist, GEOM), abs=1e-9)
            assert dia == pytest.approx(cursor_diameter(cfg, speed), abs=1e-9)


class TestErrorFrames:
    def test_malformed_json(self, server_url):
        req = urllib.request.Request(server_url, data=b"{nope", headers={})
        with pytest.raises(urllib.error.HTTPError) as err:
            urllib.request.urlopen(req)
        assert err.value.code == 400
        assert "error" in json.loads(err.value.read())

    def test_unknown_op(self, server_url):
        reply = post(server_url, {"op": "teleport"}, expect_status=400)
        assert "error" in reply

    def test_unknown_session(self, server_url):
        reply = post(server_url, {"op": "click", "session": 10_000}, expect_status=400)
        assert "unknown session" in reply["error"]

    def test_bad_dt(self, server_url):
        sid = start_session(server_url)["session"]
        reply = post(server_url, {
            "op": "step", "session": sid, "dt_s": 0.0,
            "controller_delta": {"yaw_rad": 0, "pitch_rad": 0, "pos_delta_m": [0, 0, 0]},
        }, expect_status=400)
        assert "dt_s" in reply["error"]

    def test_connection_survives_errors(self, server_url):
        post(server_url, {"op": "nope"}, expect_status=400)
        assert start_session(server_url)["session"] > 0

    def test_bad_technique_name(self, server_url):
        reply = post(server_url, {"op": "start_session", "technique": "BUBBLE"},
                     expect_status=400)
        assert "error" in reply

    def test_liveness_get(self, server_url):
        with urllib.request.urlopen(server_url) as resp:
            body = json.loads(resp.read())
        assert body["ok"] is True
