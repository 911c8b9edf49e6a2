"""Plot the logistic map bifurcation diagram with matplotlib.

Usage: python scripts/bifurcation_figure.py [out.png]
"""
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from chaodna.chaos import CHAOS_THRESHOLD, bifurcation_scan

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "bifurcation.png"
    pts = bifurcation_scan(2.5, 4.0, 1500, transient=1000, samples_per_u=200, p0=0.5)
    fig, ax = plt.subplots(figsize=(9, 5))
    ax.plot(pts[:, 0], pts[:, 1], ",k", alpha=0.25)
    ax.axvline(CHAOS_THRESHOLD, color="r", lw=0.8, ls="--")
    ax.set_xlabel("u")
    ax.set_ylabel("p")
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(out)
