"""
Critical curves on the unit square
==================================

Mirror the critical curves of the triangle into the other reasonable
triangle with (p, q) -> (q, p), then into the unreasonable half with
(p, q) -> (1 - q, 1 - p). Curves for r and 1/r share a colour.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from bacequiv import square_curves

curves = square_curves(7, samples=300)
colours = {}
fig, ax = plt.subplots(figsize=(5, 5))
for c in curves:
    if c.region == "noisy":
        ax.plot(c.points[:, 0], c.points[:, 1], "k:", lw=1)
        continue
    key = min(c.r, 1 / c.r) if c.r else 0
    colour = colours.setdefault(key, f"C{len(colours) % 10}")
    ax.plot(c.points[:, 0], c.points[:, 1], color=colour, lw=0.9)
ax.set_xlim(0, 1)
ax.set_ylim(0, 1)
ax.set_aspect("equal")
ax.set_xlabel("p")
ax.set_ylabel("q")
fig.savefig("square_curves_n7.png", dpi=120)
print(len(curves), "curves drawn")
