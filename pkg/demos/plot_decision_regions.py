"""
Decision regions of the 5-fold channel
======================================

Classify a grid of channels in the parameter triangle and overlay the level
curves of the BAC-function that bound the regions.
"""

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from bacequiv import ChannelParams, classify, critical_set, trace_level_curve

n = 5
values = critical_set(n).values
print("critical values:", [str(v) for v in values])

# Exact classification on a rational grid; unstable points are rare enough
# on a grid that we simply drop them.
grid = 120
pts, labels = [], []
for i in range(1, grid):
    for j in range(i, grid):
        p, q = Fraction(i, 2 * grid), Fraction(j, 2 * grid)
        if p + q >= 1:
            continue
        c = classify(ChannelParams(p, q), n)
        if c.stable:
            pts.append((float(p), float(q)))
            labels.append(c.index)
pts = np.array(pts)

fig, ax = plt.subplots(figsize=(5, 5))
ax.scatter(pts[:, 0], pts[:, 1], c=labels, s=4, cmap="tab10")
for r in values[1:]:
    curve = trace_level_curve(r, 200)
    ax.plot(curve.points[:, 0], curve.points[:, 1], "k", lw=0.8)
ax.plot([0, 0], [0, 1], "k", lw=0.8)
ax.set_xlabel("p")
ax.set_ylabel("q")
ax.set_title(f"{len(values) - 1} stable criteria for n = {n}")
fig.savefig("decision_regions_n5.png", dpi=120)
