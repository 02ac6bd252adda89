#!/usr/bin/env python3
"""Closed-form vs Monte Carlo prices from a sweep CSV, one curve per rho.

    asianpath sweep --mu 0.03 --sigma 0.25 --s0 100 --T 1 --r 0.03 --strike 100 \
        --nu 0.03 --xi 0.25 --s0y 100 --barrier 150 \
        --param s0y --from 50 --to 150 --points 11 --rho-list 0,0.4,0.8 \
        --extrapolate --out sweep.csv
    scripts/plot_sweep.py sweep.csv sweep.png
"""

import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("csv")
    parser.add_argument("png")
    parser.add_argument("--xlabel", default="swept parameter")
    args = parser.parse_args()

    series = defaultdict(list)
    with open(args.csv, newline="") as f:
        for row in csv.DictReader(f):
            series[float(row["rho"])].append(
                (float(row["param_value"]), float(row["analytic_value"]), float(row["mc_value"]),
                 float(row["mc_std_error"]))
            )

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for i, (rho, rows) in enumerate(sorted(series.items())):
        rows.sort()
        x = [r[0] for r in rows]
        color = f"C{i}"
        ax.plot(x, [r[1] for r in rows], color=color, label=f"closed form, rho={rho:g}")
        ax.errorbar(x, [r[2] for r in rows], yerr=[3 * r[3] for r in rows], fmt="o", color=color, ms=3,
                    capsize=2, label=f"MC (3 se), rho={rho:g}")
    ax.set_xlabel(args.xlabel)
    ax.set_ylabel("price")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
