#!/usr/bin/env python3
"""Run the fast decision and the brute-force oracle over the whole instance
corpus and print a verdict table plus any disagreements.

Usage:
    python3 scripts/run_corpus.py [--rank4-limit N] [--include-dependent] [--json]
"""

import argparse
import collections
import json
import sys
import time

from hypertope.corpus import build_corpus
from hypertope.cplus import build_cplus, check_ic_plus, is_chiral_hypertope
from hypertope.oracle import chirality_bruteforce


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank4-limit", type=int, default=6,
                    help="rank-4 instances per catalog group (default 6)")
    ap.add_argument("--include-dependent", action="store_true",
                    help="also sweep non-independent generating tuples")
    ap.add_argument("--json", action="store_true", help="emit one JSON row per instance")
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    corpus = build_corpus(independent=None if args.include_dependent else True,
                          rank4_limit_per_group=args.rank4_limit)
    tally = collections.Counter()
    disagreements = []
    for inst in corpus:
        S = build_cplus(inst.group, inst.R)
        fast = is_chiral_hypertope(S, check_all_k=(inst.rank >= 4))
        oracle = chirality_bruteforce(S)
        code = fast.failing_condition
        tally[(fast.verdict, code)] += 1
        if fast.verdict != oracle.verdict:
            disagreements.append((inst.name, fast.verdict, oracle.verdict))
        if args.json:
            print(json.dumps({
                "name": inst.name, "rank": inst.rank, "order": inst.group.order,
                "ic_plus": check_ic_plus(S), "verdict": fast.verdict,
                "code": code, "oracle": oracle.verdict,
            }))
    elapsed = time.perf_counter() - t0

    print(f"\n{len(corpus)} instances in {elapsed:.1f}s", file=sys.stderr)
    for (verdict, code), n in sorted(tally.items(), key=lambda kv: -kv[1]):
        label = verdict + (f" (code {code})" if code else "")
        print(f"  {n:5d}  {label}", file=sys.stderr)
    if disagreements:
        print("DISAGREEMENTS:", file=sys.stderr)
        for row in disagreements:
            print(f"  {row}", file=sys.stderr)
        return 1
    print("fast and oracle verdicts agree on every instance", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
