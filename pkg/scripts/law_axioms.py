"""Axiom report for every named law over small carriers."""

import argparse
import time

from weaklaw.laws import axiom_report, law_by_name
from weaklaw.verdict import Budget

LAWS = ["distrPP", "distrDP", "canonicalP:P", "canonicalP:P*", "canonicalP:Opt", "canonicalP:L", "canonicalP:M", "canonicalP:D"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="0,1,2")
    ap.add_argument("--samples", type=int, default=None, help="cap on random inputs (default: sweep what fits)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sizes = tuple(int(s) for s in args.sizes.split(","))
    budget = Budget(samples=args.samples, seed=args.seed)
    for name in LAWS:
        t0 = time.perf_counter()
        r = axiom_report(law_by_name(name), sizes, budget)
        cells = "  ".join(f"{k}={v.status.value}({v.checked})" for k, v in r.verdicts.items())
        print(f"{name:16s} {r.classification:34s} {cells}  [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    main()
