"""Interactive session server: JSON-over-HTTP bridge for live testbeds.

One JSON object per POST body, one JSON object per reply. All transfer
math runs here in the core; clients hold no formulas and drive a session
with rotation deltas:

    {"op": "start_session", "technique": "PADISTSIZE",
     "distance_multiple": 1.0, "lateral_offset_m": 0.0, "preset": "study2"}
        -> {"session": id, "layout": {start, target, width_m}}
    {"op": "step", "session": id, "dt_s": 0.011,
     "controller_delta": {"yaw_rad": .., "pitch_rad": .., "pos_delta_m": [x, y, z]}}
        -> {"cursor": {"azimuth_rad": .., "height_m": ..}, "diameter_m": .., "gain": ..}
    {"op": "click", "session": id}
        -> {"success": bool, "movement_time_s": .., "next_layout": {...}}
    {"op": "set_params", "session": id, ...}
        -> {"ok": true}
    {"op": "validate", "pairs": [[speed, distance], ...], "technique": "PA"?}
        -> {"gains": [...], "diameters": [...]}

Malformed requests get an {"error": ...} frame with status 400; the
connection stays usable. Cross-origin requests are allowed so a browser
client served from anywhere can connect.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from random import Random
from typing import Any

from . import rotation as rot
from .config import ConfigError, _technique as technique_from_config
from .experiment import derive_seed
from .geometry import (
    DisplayGeometry,
    SurfacePoint,
    UserPosition,
    interaction_distance_m,
    surface_to_world,
    user_world_position,
)
from .pointer import ControllerSample, CursorState, initial_state, step
from .tasks import TaskSpec, TrialLayout, generate_layout, hit_test, task_preset
from .transfer import TechniqueConfig, cursor_diameter, gain


class ProtocolError(ValueError):
    """Bad request content; reported as an error frame, never a crash."""


def _surface_json(p: SurfacePoint) -> dict[str, float]:
    return {"azimuth_rad": p.azimuth_rad, "height_m": p.height_m}


def _layout_json(layout: TrialLayout) -> dict[str, Any]:
    return {
        "start": _surface_json(layout.start),
        "target": _surface_json(layout.target),
        "width_m": layout.spec.width_m,
    }


@dataclass
class Session:
    cfg: TechniqueConfig
    pos: UserPosition
    geom: DisplayGeometry
    specs: list[TaskSpec]
    rng: Random
    hit_semantics: str = "overlap"
    yaw: float = 0.0
    pitch: float = 0.0
    time_s: float = 0.0
    trial_started_s: float = 0.0
    trial_index: int = 0
    layout: TrialLayout = field(init=False)
    state: CursorState = field(init=False)

    def __post_init__(self) -> None:
        self.layout = generate_layout(self.rng, self.specs[0], self.geom)
        self._recenter(self.layout.start)

    def _recenter(self, at: SurfacePoint) -> None:
        """Point the controller (and the aligned virtual ray) at a surface point."""
        origin = user_world_position(self.pos, self.geom)
        f = rot.vec_normalize(rot.vec_sub(surface_to_world(at, self.geom), origin))
        self.yaw = math.atan2(f[0], f[2])
        self.pitch = math.asin(max(-1.0, min(1.0, f[1])))
        orientation = rot.from_yaw_pitch(self.yaw, self.pitch)
        self.state = initial_state(ControllerSample(origin, orientation, self.time_s), self.geom)

    def do_step(self, dt_s: float, yaw_rad: float, pitch_rad: float,
                pos_delta_m: tuple[float, float, float]) -> dict[str, Any]:
        if dt_s <= 0:
            raise ProtocolError("dt_s must be positive")
        self.yaw += yaw_rad
        self.pitch += pitch_rad
        self.time_s += dt_s
        position = rot.vec_add(self.state.last_controller.position, pos_delta_m)
        sample = ControllerSample(position, rot.from_yaw_pitch(self.yaw, self.pitch), self.time_s)
        self.state, g, _speed = step(
            self.state, sample, self.cfg, interaction_distance_m(self.pos, self.geom), self.geom
        )
        return {
            "cursor": _surface_json(self.state.surface),
            "diameter_m": self.state.diameter_m,
            "gain": g,
        }

    def do_click(self) -> dict[str, Any]:
        success = hit_test(
            self.state.surface, self.state.diameter_m, self.layout, self.geom, self.hit_semantics
        )
        mt = self.time_s - self.trial_started_s
        self.trial_index += 1
        spec = self.specs[self.trial_index % len(self.specs)]
        self.layout = generate_layout(self.rng, spec, self.geom)
        self.trial_started_s = self.time_s
        return {
            "success": success,
            "movement_time_s": mt,
            "next_layout": _layout_json(self.layout),
        }

    def set_params(self, msg: dict[str, Any]) -> None:
        if "technique" in msg:
            self.cfg = technique_from_config(msg["technique"], self.geom.radius_m, "set_params")
        if "hit_semantics" in msg:
            if msg["hit_semantics"] not in ("overlap", "center"):
                raise ProtocolError("hit_semantics must be 'overlap' or 'center'")
            self.hit_semantics = msg["hit_semantics"]
        if "distance_multiple" in msg or "lateral_offset_m" in msg:
            try:
                self.pos = UserPosition(
                    distance_multiple=msg.get("distance_multiple", self.pos.distance_multiple),
                    lateral_offset_m=msg.get("lateral_offset_m", self.pos.lateral_offset_m),
                    controller_height_m=self.pos.controller_height_m,
                )
            except ValueError as exc:
                raise ProtocolError(str(exc)) from exc
            # user moved: controller re-aims at the current cursor
            self._recenter(self.state.surface)


class CoreService:
    """Session registry plus the stateless validate query."""

    def __init__(self, geom: DisplayGeometry | None = None, master_seed: int = 0) -> None:
        self.geom = geom or DisplayGeometry()
        self.master_seed = master_seed
        self._sessions: dict[int, Session] = {}
        self._next_id = 1
        self._lock = threading.Lock()

    def handle(self, msg: Any) -> dict[str, Any]:
        if not isinstance(msg, dict):
            raise ProtocolError("message must be a JSON object")
        op = msg.get("op")
        if op == "start_session":
            return self._start_session(msg)
        if op == "validate":
            return self._validate(msg)
        if op in ("step", "click", "set_params"):
            session = self._session_of(msg)
            with self._lock:
                if op == "step":
                    delta = msg.get("controller_delta", {})
                    if not isinstance(delta, dict):
                        raise ProtocolError("controller_delta must be an object")
                    pos_delta = delta.get("pos_delta_m", [0.0, 0.0, 0.0])
                    if not (isinstance(pos_delta, list) and len(pos_delta) == 3):
                        raise ProtocolError("pos_delta_m must be a 3-element array")
                    return session.do_step(
                        _number(msg, "dt_s"),
                        float(delta.get("yaw_rad", 0.0)),
                        float(delta.get("pitch_rad", 0.0)),
                        (float(pos_delta[0]), float(pos_delta[1]), float(pos_delta[2])),
                    )
                if op == "click":
                    return session.do_click()
                session.set_params(msg)
                return {"ok": True}
        raise ProtocolError(f"unknown op {op!r}")

    def _session_of(self, msg: dict[str, Any]) -> Session:
        sid = msg.get("session")
        with self._lock:
            if sid not in self._sessions:
                raise ProtocolError(f"unknown session {sid!r}")
            return self._sessions[sid]

    def _start_session(self, msg: dict[str, Any]) -> dict[str, Any]:
        try:
            pos = UserPosition(
                distance_multiple=float(msg.get("distance_multiple", 1.0)),
                lateral_offset_m=float(msg.get("lateral_offset_m", 0.0)),
            )
            cfg = technique_from_config(
                msg.get("technique", "PADISTSIZE"), self.geom.radius_m, "start_session"
            )
            specs = task_preset(msg.get("preset", "study2"))
        except ValueError as exc:  # ConfigError is a ValueError too
            raise ProtocolError(str(exc)) from exc
        with self._lock:
            sid = self._next_id
            self._next_id += 1
            rng = Random(derive_seed(self.master_seed, sid, tag="session"))
            self._sessions[sid] = Session(cfg=cfg, pos=pos, geom=self.geom, specs=specs, rng=rng)
            return {"session": sid, "layout": _layout_json(self._sessions[sid].layout)}

    def _validate(self, msg: dict[str, Any]) -> dict[str, Any]:
        pairs = msg.get("pairs")
        if not isinstance(pairs, list):
            raise ProtocolError("validate needs a 'pairs' list of [speed, distance]")
        cfg = technique_from_config(
            msg.get("technique", "PADISTSIZE"), self.geom.radius_m, "validate"
        )
        gains: list[float] = []
        diameters: list[float] = []
        for i, pair in enumerate(pairs):
            if not (isinstance(pair, list) and len(pair) == 2):
                raise ProtocolError(f"pairs[{i}] must be [speed, distance]")
            speed, distance = float(pair[0]), float(pair[1])
            try:
                gains.append(gain(cfg, speed, distance, self.geom))
                diameters.append(cursor_diameter(cfg, speed))
            except ValueError as exc:
                raise ProtocolError(f"pairs[{i}]: {exc}") from exc
        return {"gains": gains, "diameters": diameters}


def _number(msg: dict[str, Any], key: str) -> float:
    if key not in msg:
        raise ProtocolError(f"missing required field {key!r}")
    value = msg[key]
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ProtocolError(f"field {key!r} must be a number")
    return float(value)


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    service: CoreService  # set by make_server

    def _send(self, status: int, payload: dict[str, Any]) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self) -> None:  # CORS preflight
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "POST, GET, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        self._send(200, {"ok": True, "service": "curvepoint"})

    def do_POST(self) -> None:
        try:
            length = int(self.headers.get("Content-Length", 0))
            raw = self.rfile.read(length)
            msg = json.loads(raw.decode("utf-8"))
        except (ValueError, UnicodeDecodeError):
            self._send(400, {"error": "body must be one JSON object"})
            return
        try:
            self._send(200, self.service.handle(msg))
        except (ProtocolError, ConfigError) as exc:
            self._send(400, {"error": str(exc)})
        except Exception as exc:  # keep the server alive on internal errors
            self._send(500, {"error": f"internal error: {exc}"})

    def log_message(self, format: str, *args: Any) -> None:
        pass  # silence per-request stderr noise


def make_server(port: int, service: CoreService | None = None, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    handler = type("BoundHandler", (_Handler,), {"service": service or CoreService()})
    return ThreadingHTTPServer((host, port), handler)


def serve_forever(port: int, service: CoreService | None = None) -> None:
    server = make_server(port, service)
    try:
        server.serve_forever()
    finally:
        server.server_close()
