"""Run every verification once and print a timing per check.

    python scripts/run_verify_all.py [--seed N]
"""

import argparse
import time

from moonshine import verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    args = ap.parse_args()
    bad = 0
    for name, fn in verify.ALL_CHECKS:
        t0 = time.perf_counter()
        r = fn(seed=args.seed) if name in ("lambda", "kernel") else fn()
        print(f"{r.line():<45} {time.perf_counter() - t0:6.2f}s")
        bad += not r.ok
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
