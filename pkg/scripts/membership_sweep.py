"""All relations between small join-semilattices: does equality of the two
composites coincide with decomposability of the left leg?"""

import argparse
import time

from weaklaw.lifted import membership_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=3)
    args = ap.parse_args()
    t0 = time.perf_counter()
    r = membership_sweep(args.max_size)
    print(f"relations checked: {r.checked}")
    for cls, n in sorted(r.by_class.items()):
        print(f"  {cls:26s} {n}")
    print(f"discrepancies: {len(r.discrepancies)}  [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    main()
