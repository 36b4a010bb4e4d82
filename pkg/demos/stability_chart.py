"""Mathieu stability: where does parametric drive keep motion bounded?

The optical trap's time-dependent potential maps onto the Mathieu
equation x'' + [a - 2q cos(2 tau)] x = 0.  The monodromy matrix over one
drive period decides stability (|trace| < 2).  This script scans a patch
of the (a, q) plane, locates the a = 0 boundary, and writes the map CSV
that `trap stability` would produce.  If matplotlib is available it also
draws the chart.
"""

import numpy as np

from optrap import monodromy_stability, stability_scan

# the first stability tongue along the q axis ends near q = 0.908
for q in (0.85, 0.90, 0.92, 1.0):
    res = monodromy_stability((0.0, q))
    print(f"a=0, q={q:4.2f}: trace={np.trace(res.monodromy_matrix):+8.4f} "
          f"{'stable' if res.stable else 'unstable'}")

# bisect the boundary
lo, hi = 0.85, 1.0
for _ in range(40):
    mid = 0.5 * (lo + hi)
    if monodromy_stability((0.0, mid)).stable:
        lo = mid
    else:
        hi = mid
print(f"\nboundary at a = 0: q = {0.5 * (lo + hi):.6f}")

print("\nscanning [0, 1.5] x [0, 1.5] at step 0.05 ...")
grid = stability_scan((0.0, 1.5), (0.0, 1.5), 0.05)
csv_text = grid.to_csv_text()
with open("stability_demo.csv", "w", encoding="utf-8") as fh:
    fh.write(csv_text)
print(f"wrote stability_demo.csv ({csv_text.count(chr(10)) - 1} rows)")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the chart")
else:
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.pcolormesh(grid.q_values, grid.a_values, grid.stable,
                  shading="nearest", cmap="Greys_r")
    ax.set_xlabel("q")
    ax.set_ylabel("a")
    ax.set_title("stable (white) regions of the Mathieu plane")
    fig.tight_layout()
    fig.savefig("stability_demo.png", dpi=150)
    print("wrote stability_demo.png")
