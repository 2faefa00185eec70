"""Residual ||U xi1 - xi2||^2 over orthogonal local gates, per sign case.

Scans the three block angles on a grid and writes a CSV of the minimum over
the third angle, so the landscape can be plotted as a 2-D heat map.
"""

import argparse
import csv
import itertools
from pathlib import Path

import numpy as np

from qorbits.groebner import SIGN_CASES, orthogonal_residual


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--step", type=float, default=10.0, help="grid step in degrees")
    ap.add_argument("--out", type=Path, default=Path("out/residual_landscape.csv"))
    args = ap.parse_args()

    th = np.deg2rad(np.arange(0.0, 360.0, args.step))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["signs", "theta1_deg", "theta2_deg", "min_residual"])
        for case in SIGN_CASES:
            lowest = np.inf
            for t1, t2 in itertools.product(th, th):
                r = min(orthogonal_residual((t1, t2, t3), case) for t3 in th)
                lowest = min(lowest, r)
                w.writerow(["".join("+" if s > 0 else "-" for s in case),
                            round(float(np.rad2deg(t1)), 6), round(float(np.rad2deg(t2)), 6), f"{r:.12f}"])
            print(f"{case}: grid minimum {lowest:.6f}")


if __name__ == "__main__":
    main()
