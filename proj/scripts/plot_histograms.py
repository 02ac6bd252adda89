#!/usr/bin/env python3
"""Exact vs approximate average histograms from one or more histogram CSVs.

    for rho in 0 0.4 0.8; do
      asianpath histogram --mu 0.03 --sigma 0.25 --s0 100 --T 1 --nu 0.03 --xi 0.25 \
          --s0y 100 --rho $rho --barrier 122.14027581601698 --out hist_$rho.csv
    done
    scripts/plot_histograms.py hist_0.csv hist_0.4.csv hist_0.8.csv -o hist.png
"""

import argparse
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("csv", nargs="+")
    parser.add_argument("-o", "--output", required=True)
    args = parser.parse_args()

    fig, axes = plt.subplots(1, len(args.csv), figsize=(4 * len(args.csv), 3.5), squeeze=False)
    for ax, path in zip(axes[0], args.csv):
        data = np.loadtxt(path, delimiter=",", skiprows=1)
        left, right, exact, approx = data.T
        width = right - left
        ax.bar(left, exact / width, width=width, align="edge", alpha=0.5, label="exact")
        ax.step(left, approx / width, where="post", color="k", label="approximate")
        l1 = np.abs(exact - approx).sum()
        ax.set_title(f"{pathlib.Path(path).stem}  (L1 = {l1:.3f})", fontsize=9)
        ax.set_xlabel("average logreturn")
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)


if __name__ == "__main__":
    main()
