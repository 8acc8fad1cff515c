"""Holomorphic and sectional curvature of the calibrated ball metric at random points."""

import argparse

import numpy as np

from polar_ch2 import ball


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-radius", type=float, default=0.9)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    hol, sec = [], []
    for _ in range(args.points):
        p = ball.random_point(rng, args.max_radius)
        hol.append(ball.holomorphic_curvature(p, rng.normal(size=4)))
        sec.append(ball.sectional_curvature(p, rng.normal(size=4), rng.normal(size=4)))
    hol, sec = np.array(hol), np.array(sec)
    print(f"metric scale c = {ball.METRIC_SCALE}")
    print(f"holomorphic: mean {hol.mean():+.6f}, max |K + 1| = {np.abs(hol + 1).max():.2e}")
    print(f"sectional:   min {sec.min():+.4f}, max {sec.max():+.4f} (expected range [-1, -1/4])")


if __name__ == "__main__":
    main()
