"""Orthogonality scan for every catalog entry over several grid sizes.

Also scans each entry with its section replaced by p_alpha, as a control
that the scan detects non-orthogonal planes.
"""

import argparse

from polar_ch2 import ball
from polar_ch2.catalog import catalog
from polar_ch2.suites import faulty_entry


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grids", type=int, nargs="+", default=[5, 15, 25])
    ap.add_argument("--radius", type=float, default=2.0)
    args = ap.parse_args()
    head = "entry  " + "".join(f"{'n=' + str(n):>12s}" for n in args.grids) + f"{'control':>12s}"
    print(head)
    for e in catalog():
        vals = [ball.orthogonality_scan(e, n, args.radius) for n in args.grids]
        ctrl = ball.orthogonality_scan(faulty_entry(e.id), 7, args.radius)
        print(f"{e.id:6s} " + "".join(f"{v:12.2e}" for v in vals) + f"{ctrl:12.2e}")


if __name__ == "__main__":
    main()
