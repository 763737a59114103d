"""Sweep the normalized residue-15 deficiency alpha(x) over many x.

The residue class 15 mod 16 is where membership in B gets sparse. For a
window size x, the range [0, 16x) holds exactly x integers congruent to
15 mod 16; beta(x) counts how many of those are members, and
alpha(x) = (2*beta(x) - x) / (2*sqrt(x)) measures the gap from the
half-density baseline in sqrt(x) units. The sweep prints the extremes and
checks the empirical window (-1.1, 0.58) in exact arithmetic.
"""

import argparse

import thetaparity as tp


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--log2-max-x", type=int, default=19,
                    help="sweep x = step, 2*step, ... up to 2^this")
    ap.add_argument("--log2-step", type=int, default=10)
    ap.add_argument("--rows", type=int, default=10,
                    help="how many of the smallest-alpha rows to print")
    args = ap.parse_args()

    max_x = 1 << args.log2_max_x
    step = 1 << args.log2_step
    b = tp.build_B(16 * max_x + 1)
    sweep = tp.alpha_sweep(b, max_x, step)

    print(f"{len(sweep.rows)} sweep points, step {step}")
    lo, hi = sweep.argmin, sweep.argmax
    print(f"minimum alpha {lo.alpha:+.6f} at x = {lo.x} (beta = {lo.beta})")
    print(f"maximum alpha {hi.alpha:+.6f} at x = {hi.x} (beta = {hi.beta})")
    inside = sweep.all_within()
    print(f"every alpha strictly inside (-1.1, 0.58): {inside}")

    ranked = sorted(sweep.rows, key=lambda r: r.alpha)[:args.rows]
    print(f"\n{args.rows} most negative rows:")
    print(f"{'x':>10} {'beta':>10} {'alpha':>10}")
    for row in ranked:
        print(f"{row.x:>10} {row.beta:>10} {row.alpha:>10.6f}")


if __name__ == "__main__":
    main()
