"""Plot the gain and cursor-size transfer curves of the six techniques.

The speed-driven techniques map controller speed (m/s) through a logistic
curve; the distance-driven ones respond to where the user stands. Run:

    python demos/transfer_curves.py        # writes transfer_curves.png
"""

import matplotlib.pyplot as plt
import numpy as np

from curvepoint import DisplayGeometry, cursor_diameter, gain, technique

geom = DisplayGeometry()
R = geom.radius_m

speeds = np.linspace(0.0, 1.6, 300)
distances = np.linspace(0.4 * R, 1.6 * R, 300)

fig, (ax_speed, ax_dist, ax_size) = plt.subplots(1, 3, figsize=(13, 4))

for tech, style in (("PA", "-"), ("PADIST", "--")):
    cfg = technique(tech)
    for d_mult, color in ((0.5, "tab:green"), (1.0, "tab:blue"), (1.5, "tab:red")):
        label = f"{tech} @ {d_mult}R" if tech == "PADIST" or d_mult == 1.0 else None
        ax_speed.plot(
            speeds,
            [gain(cfg, s, d_mult * R, geom) for s in speeds],
            style,
            color=color,
            label=label,
        )
ax_speed.set_xlabel("controller speed (m/s)")
ax_speed.set_ylabel("CD gain")
ax_speed.set_title("speed-driven gain (PA solid, PADIST dashed)")
ax_speed.legend(fontsize=8)

cfg_pba = technique("PBA")
ax_dist.plot(distances / R, [gain(cfg_pba, 0.0, d, geom) for d in distances])
ax_dist.set_xlabel("standing distance (multiples of R)")
ax_dist.set_ylabel("CD gain")
ax_dist.set_title("distance-driven gain (PBA)")

cfg_size = technique("PASIZE")
ax_size.plot(speeds, [100 * cursor_diameter(cfg_size, s) for s in speeds])
ax_size.axhline(2.5, color="gray", lw=0.5)
ax_size.set_xlabel("controller speed (m/s)")
ax_size.set_ylabel("cursor diameter (cm)")
ax_size.set_title("speed-driven enlargement (SIZE variants)")

fig.tight_layout()
fig.savefig("transfer_curves.png", dpi=120)
print("wrote transfer_curves.png")
print(f"PBA gain at 0.5R: {gain(cfg_pba, 0, 0.5 * R, geom):.3f}")
print(f"PBA gain at 1.5R: {gain(cfg_pba, 0, 1.5 * R, geom):.3f}")
print(f"PA gain at rest:  {gain(technique('PA'), 0, R, geom):.4f}")
