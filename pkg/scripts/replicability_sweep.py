"""Time the replicability checks for J as the truncation grows.

    python scripts/replicability_sweep.py --k-max 10 --orders 20 30 50
"""

import argparse
import time

from moonshine.lambda_ops import replicability_check_faber_form, replicability_check_theorem_form


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k-max", type=int, default=10)
    ap.add_argument("--orders", type=int, nargs="+", default=[20, 30, 50])
    ap.add_argument("--grid", type=int, nargs="+", default=[6, 9, 12])
    args = ap.parse_args()
    for order in args.orders:
        t0 = time.perf_counter()
        r = replicability_check_faber_form(args.k_max, order)
        print(f"Faber form   k<={args.k_max:<3} q-order {order:<4} ok={r.ok}  {time.perf_counter() - t0:6.2f}s")
    for n in args.grid:
        t0 = time.perf_counter()
        r = replicability_check_theorem_form(n, n)
        print(f"theorem form grid {n}x{n:<10} ok={r.ok}  {time.perf_counter() - t0:6.2f}s")


if __name__ == "__main__":
    main()
