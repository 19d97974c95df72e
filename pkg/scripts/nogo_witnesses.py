"""Reproduce every negative result and write the witnesses as JSON."""

import argparse
from pathlib import Path

from weaklaw.algebra import powerset_lattice, simplex
from weaklaw.laws import DISTR_PP
from weaklaw.nogo import (
    collapse_map,
    collapse_segment_instance,
    distribution_no_go,
    multiset_no_go,
    parity_map,
    pi_yang_baxter_check,
    reproduce_mon_cmon,
    search_conv_counterexample,
    search_preservation_counterexample,
    singleton_lifting_test,
    yang_baxter_check,
)
from weaklaw.serial import dumps
from weaklaw.verdict import Budget


def collect(size: int, lmax: int) -> dict:
    out = {}
    for label, A in (("jsl", powerset_lattice(range(2))), ("conv", simplex(2))):
        r = singleton_lifting_test(A)
        out[f"singleton/{label}"] = {"holds": r.holds, "witness": r.witness, "replays": r.witness.replay()}
    for label, check in (("yang-baxter", yang_baxter_check), ("pi-yang-baxter", pi_yang_baxter_check)):
        v, w = check(DISTR_PP, DISTR_PP, DISTR_PP, range(size), Budget())
        out[label] = {"verdict": v, "witness": w, "replays": bool(w and w.replay())}
    for nonempty in (False, True):
        w = search_preservation_counterexample([parity_map(4)], nonempty=nonempty)
        out[f"jsl-search/{'nonempty' if nonempty else 'all'}"] = {"witness": w, "replays": w.replay()}
    res, w = collapse_segment_instance()
    out["conv/collapse"] = {"certified": res.certified_infeasible, "witness": w, "replays": w.replay()}
    w = search_conv_counterexample(collapse_map(), 3, 2)
    out["conv/search"] = {"witness": w, "replays": w.replay()}
    for name, ng in reproduce_mon_cmon(lmax).items():
        out[f"P/{name}"] = {"confirmed": ng.confirmed, "witness": ng.witness}
    for comm in (False, True):
        name = "CMon" if comm else "Mon"
        out[f"M/{name}"] = {"confirmed": multiset_no_go(comm, lmax).confirmed}
        out[f"D/{name}"] = {"confirmed": distribution_no_go(comm).confirmed}
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=2)
    ap.add_argument("--lmax", type=int, default=2)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    text = dumps(collect(args.size, args.lmax))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")


if __name__ == "__main__":
    main()
