"""Correction-count curves for a few code lengths and their p = 1/n peaks.

Writes curves.csv next to this script. If matplotlib is installed the curves
are also plotted.
"""

from pathlib import Path

from unary_ecc import capacity_curve, optimal_p
from unary_ecc.capacity import curve_csv, default_double_total, uniform_grid

grid = uniform_grid(0.01)
chunks = []
for n in (3, 5, 10):
    pts = capacity_curve(n, grid, default_double_total(n))
    best = max(pts, key=lambda pt: pt.single_correction)
    print(f"n={n:2d}  1/n={optimal_p(n):.4f}  grid peak p={best.p:.2f}  value={best.single_correction:.4f}")
    chunks.append(curve_csv(pts))

out = Path(__file__).with_name("curves.csv")
# one header, then the rows of every curve
out.write_text(chunks[0] + "".join(c.split("\n", 1)[1] for c in chunks[1:]))
print("wrote", out)

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    for n in (3, 5, 10):
        pts = capacity_curve(n, grid)
        plt.plot([pt.p for pt in pts], [pt.single_correction for pt in pts], label=f"n={n}")
    plt.xlabel("bit error probability p")
    plt.ylabel("(n-1)^2 p (1-p)^(n-1)")
    plt.legend()
    plt.savefig(Path(__file__).with_name("curves.png"), dpi=120)
