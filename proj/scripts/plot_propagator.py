#!/usr/bin/env python3
"""Surface plot of a propagator-grid CSV.

    asianpath propagator-grid --mu 0.03 --sigma 0.25 --T 1 --nu 0.03 --xi 0.25 \
        --s0y 100 --rho 0 --barrier 122.14027581601698 \
        --grid "x=-0.8:0.8:61,y=-0.8:yb:61" --xbar 0 --out grid.csv
    scripts/plot_propagator.py grid.csv grid.png
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("csv")
    parser.add_argument("png")
    args = parser.parse_args()

    with open(args.csv) as f:
        axis1, axis2, _ = f.readline().strip().split(",")
    data = np.loadtxt(args.csv, delimiter=",", skiprows=1)
    u = np.unique(data[:, 0])
    v = np.unique(data[:, 1])
    z = data[:, 2].reshape(len(u), len(v))
    uu, vv = np.meshgrid(u, v, indexing="ij")

    fig = plt.figure(figsize=(7, 5))
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(uu, vv, z, cmap="viridis", linewidth=0)
    ax.set_xlabel(axis1)
    ax.set_ylabel(axis2)
    ax.set_zlabel("density")
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
