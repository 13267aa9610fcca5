"""Trace one synthetic selection trial and draw the cursor path.

Re-runs a single agent trial tick by tick (same machinery the harness
uses) and plots the cursor trajectory on the unrolled display, with the
start circle, the target, and the click point. Run:

    python demos/single_trial_trace.py     # writes trial_trace.png
"""

from dataclasses import replace
from random import Random

import matplotlib.pyplot as plt
from matplotlib.patches import Circle, Rectangle

from curvepoint import (
    AgentParams,
    DisplayGeometry,
    TaskSpec,
    UserPosition,
    generate_layout,
    run_trial,
    technique,
)
from curvepoint.tasks import unroll

geom = DisplayGeometry()
pos = UserPosition(distance_multiple=1.0, lateral_offset_m=0.0)
spec = TaskSpec(amplitude_m=5.0, width_m=0.2)
layout = generate_layout(Random(12), spec, geom)
cfg = technique("PASIZE")
params = AgentParams()

# run once for the outcome, then re-run instrumented through the pointer
outcome = run_trial(4, params, cfg, pos, layout, geom)
print(f"technique {cfg.id.value}: success={outcome.success} "
      f"MT={outcome.movement_time_s * 1000:.0f} ms "
      f"click diameter={outcome.click_diameter_m * 100:.1f} cm")

# trials are deterministic per seed, so re-running with a growing tick
# budget replays the same trajectory and samples the cursor position
path = []
for budget_ticks in range(2, outcome.tick_count + 1):
    partial = run_trial(
        4, replace(params, timeout_s=budget_ticks / 90.0), cfg, pos, layout, geom
    )
    path.append(unroll(partial.endpoint, geom))

fig, ax = plt.subplots(figsize=(10, 3.2))
half_w = geom.half_angle_rad * geom.radius_m
ax.add_patch(Rectangle((-half_w, 0), 2 * half_w, geom.height_m,
                       fill=False, color="gray", lw=1))
sx, sy = unroll(layout.start, geom)
tx, ty = unroll(layout.target, geom)
ax.add_patch(Circle((sx, sy), 0.10, color="lightgray", zorder=1))
ax.add_patch(Circle((tx, ty), spec.width_m / 2, color="salmon", zorder=1))
xs, ys = zip(*path)
ax.plot(xs, ys, ".-", ms=2, lw=0.8, color="tab:blue", zorder=2, label="cursor path")
cx, cy = unroll(outcome.endpoint, geom)
ax.add_patch(Circle((cx, cy), outcome.click_diameter_m / 2, fill=False,
                    color="tab:blue", lw=1.2, zorder=3))
ax.plot([cx], [cy], "x", color="black", zorder=4, label="click")
ax.set_xlim(-half_w - 0.3, half_w + 0.3)
ax.set_ylim(-0.2, geom.height_m + 0.2)
ax.set_aspect("equal")
ax.set_xlabel("unrolled arc position (m)")
ax.set_ylabel("height (m)")
ax.legend(loc="upper right", fontsize=8)
fig.tight_layout()
fig.savefig("trial_trace.png", dpi=120)
print("wrote trial_trace.png")
