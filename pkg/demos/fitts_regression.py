"""Fitts'-law regression on synthetic absolute-pointing data.

Runs the first-study task grid with the raw ray-cast baseline at the
centre position and fits mean movement time against the Shannon index of
difficulty. Run:

    python demos/fitts_regression.py      # writes fitts_regression.png
"""

from random import Random

import matplotlib.pyplot as plt
import numpy as np

from curvepoint import (
    AgentParams,
    DisplayGeometry,
    TaskSpec,
    UserPosition,
    fitts_fit,
    fitts_id,
    generate_layout,
    run_trial,
    technique,
)
from curvepoint.tasks import STUDY1_TASKS

geom = DisplayGeometry()
pos = UserPosition(1.0, 0.0)
cfg = technique("ABSOLUTE")
params = AgentParams()

points = []
for a, w in STUDY1_TASKS:
    mts = []
    for seed in range(120):
        layout = generate_layout(Random(hash((a, w, seed)) & 0xFFFFFFFF), TaskSpec(a, w), geom)
        mts.append(run_trial(seed, params, cfg, pos, layout, geom).movement_time_s)
    points.append((fitts_id(a, w), float(np.mean(mts))))
    print(f"A={a:3.1f} m  W={w:3.2f} m  ID={points[-1][0]:4.2f} bits  "
          f"mean MT={points[-1][1] * 1000:4.0f} ms")

intercept, slope, r2 = fitts_fit(points)
print(f"\nMT = {intercept:.3f} + {slope:.3f} * ID   (R^2 = {r2:.3f})")

ids = np.array([p[0] for p in points])
mts = np.array([p[1] for p in points])
fig, ax = plt.subplots(figsize=(5, 4))
ax.plot(ids, mts, "o")
grid = np.linspace(ids.min() - 0.3, ids.max() + 0.3, 50)
ax.plot(grid, intercept + slope * grid, "-", color="gray",
        label=f"MT = {intercept:.2f} + {slope:.2f} ID  (R2={r2:.2f})")
ax.set_xlabel("index of difficulty (bits)")
ax.set_ylabel("mean movement time (s)")
ax.legend()
fig.tight_layout()
fig.savefig("fitts_regression.png", dpi=120)
print("wrote fitts_regression.png")
