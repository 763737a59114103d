"""Build the mod-2 inverse theta bitmap and census its sparse residue class.

Walkthrough of the main pipeline: invert the squares theta series mod 2 out
to 2^23 coefficients, optionally save the bitmap, then count members
congruent to 15 mod 16 in consecutive blocks of 16x indices. Each block
holds exactly x candidates, so x/2 is the half-density baseline.
"""

import argparse
import time

import thetaparity as tp


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--log2-limit", type=int, default=23,
                    help="build 2^this + 1 coefficients (default 23)")
    ap.add_argument("--log2-x", type=int, default=16,
                    help="candidates per block x = 2^this (default 16)")
    ap.add_argument("--intervals", type=int, default=8)
    ap.add_argument("--save", metavar="PATH",
                    help="also write the bitmap as a .f2s file")
    args = ap.parse_args()

    limit = (1 << args.log2_limit) + 1
    t0 = time.perf_counter()
    b = tp.build_B(limit)
    t1 = time.perf_counter()
    print(f"built {b.length} coefficients in {t1 - t0:.2f}s, "
          f"{b.popcount()} members")

    if args.save:
        tp.write_f2s(b, args.save)
        print(f"wrote {args.save}")

    x = 1 << args.log2_x
    table = tp.interval_counts(b, x, args.intervals)
    width = table.interval_width
    print(f"\nresidue-15 census with x = 2^{args.log2_x} candidates per block:")
    print(f"{'block':>24} {'count':>8} {'count - x/2':>12}")
    for k, count in enumerate(table.counts):
        span = f"[{k * width}, {(k + 1) * width})"
        print(f"{span:>24} {count:>8} {count - x // 2:>+12}")
    print(f"{'total':>24} {table.total:>8}")


if __name__ == "__main__":
    main()
