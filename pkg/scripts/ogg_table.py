"""Print the supersingular j-invariants for each prime up to a bound.

    python scripts/ogg_table.py --bound 100
"""

import argparse

from moonshine.supersingular import MONSTER_ORDER, ogg_scan, prime_divisors


def fmt_j(j):
    a, b = j
    return str(a) if b == 0 else f"{a}+{b}s"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=100)
    args = ap.parse_args()
    r = ogg_scan(args.bound)
    print(f"{'p':>5}  {'delta':>5}  {'#j':>3}  in F_p  j-invariants (s = sqrt(delta))")
    for p, rep in r.reports.items():
        js = ", ".join(fmt_j(j) for j in rep.sorted_j())
        print(f"{p:>5}  {rep.delta:>5}  {len(rep.j_set):>3}  {'yes' if rep.all_in_prime_field else 'no ':>6}  {js}")
    monster = [p for p in prime_divisors(MONSTER_ORDER) if p <= args.bound]
    print(f"\npassing: {r.passing}")
    print(f"prime divisors of |M| up to {args.bound}: {monster}")
    print("match" if r.passing == monster else "MISMATCH")


if __name__ == "__main__":
    main()
