"""Drive the session protocol end to end against an in-process server.

Starts the HTTP bridge, opens a session, sweeps the controller toward the
target, clicks, and prints every reply: the same exchange the browser
testbed performs. Run:

    python demos/serve_session.py
"""

import json
import math
import threading
import urllib.request

from curvepoint.serve import CoreService, make_server

server = make_server(0, CoreService(master_seed=1))
port = server.server_address[1]
threading.Thread(target=server.serve_forever, daemon=True).start()
url = f"http://127.0.0.1:{port}"


def post(msg):
    req = urllib.request.Request(url, data=json.dumps(msg).encode())
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


session = post({"op": "start_session", "technique": "PADISTSIZE",
                "distance_multiple": 1.0, "preset": "study2"})
sid = session["session"]
layout = session["layout"]
print("layout:", json.dumps(layout))

# head for the target with constant-rate yaw/pitch steps
target = layout["target"]
cursor = layout["start"]
for i in range(300):
    dyaw = target["azimuth_rad"] - cursor["azimuth_rad"]
    dpitch = (target["height_m"] - cursor["height_m"]) * 0.15
    step = post({
        "op": "step", "session": sid, "dt_s": 1 / 90,
        "controller_delta": {
            "yaw_rad": max(-0.02, min(0.02, dyaw * 0.4)),
            "pitch_rad": max(-0.02, min(0.02, dpitch)),
            "pos_delta_m": [0.005, 0.0, 0.0],  # synthetic hand speed
        },
    })
    cursor = step["cursor"]
    if i % 30 == 0:
        print(f"tick {i:3d}: cursor az={cursor['azimuth_rad']:+.3f} "
              f"h={cursor['height_m']:.2f}  gain={step['gain']:.2f} "
              f"diameter={step['diameter_m'] * 100:.1f} cm")
    close = math.hypot(
        (cursor["azimuth_rad"] - target["azimuth_rad"]) * 3.27,
        cursor["height_m"] - target["height_m"],
    )
    if close < 0.05:
        break

result = post({"op": "click", "session": sid})
print(f"click: success={result['success']} after {result['movement_time_s']:.2f} s")

reply = post({"op": "validate", "technique": "PA", "pairs": [[0.0, 3.27], [0.55, 3.27], [2.0, 3.27]]})
print("validate PA gains at rest/inflection/fast:", [round(g, 4) for g in reply["gains"]])
server.shutdown()
