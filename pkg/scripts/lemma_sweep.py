"""Run the two-dimensional subalgebra replay over a range of seeds."""

import argparse
import time

from polar_ch2.lemma import run_lemma_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--samples", type=int, default=100)
    args = ap.parse_args()
    print("seed  Y=0  Y!=0  a-forced  conj(a,b,c)  failures  time")
    for seed in range(args.seeds):
        t = time.perf_counter()
        r = run_lemma_suite(args.samples, seed)
        c = r["conjugations"]["exact_matches"]
        print(f"{seed:4d} {r['Y=0']['accepted']:4d} {r['Y!=0']['accepted']:5d} {r['Y!=0']['a_forced_zero']:9d}"
              f"  {c['a']:3d},{c['b']:3d},{c['c']:3d}  {len(r['failures']):8d}  {time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
