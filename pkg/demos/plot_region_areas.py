"""
How likely is each decision criterion?
======================================

A channel drawn uniformly from the triangle falls in a region with
probability four times the region's area. The region next to the BSC is
the largest one from n = 4 on.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from bacequiv import percentages, ratios

for n in range(3, 10):
    table = percentages(n)
    print(n, table.rounded() if n < 8 else [round(v, 2) for v in table.percentages])

# Ratios of the BSC-nearest and Z-nearest regions to the average region.
for n in (4, 8, 16, 40, 100, 200):
    rec = ratios(n)
    print(f"n={n:3d}  R={rec.R:8.3f}  r={rec.r_small:6.3f}")

table = percentages(40)
fig, ax = plt.subplots(figsize=(8, 3))
ax.bar(range(len(table.percentages)), table.percentages, width=1.0)
ax.set_xlabel("stable region (ordered by BAC-function value)")
ax.set_ylabel("% of triangle")
ax.set_title(f"{len(table.percentages)} stable regions for n = 40")
fig.tight_layout()
fig.savefig("region_areas_n40.png", dpi=120)
