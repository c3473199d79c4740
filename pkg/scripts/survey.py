"""Run the structural checks over a seeded corpus of random plats and summarize.

    python3 scripts/survey.py --count 100 --seed 2024 --field 3
"""

from __future__ import annotations

import argparse
import random
from collections import Counter

from legaug.bordered import assemble
from legaug.ncpoly import Ring
from legaug.plat import MaslovError, random_plat, solve_maslov
from legaug.verify import CHECKS, Workspace, run_checks


def corpus(count: int, seed: int, max_n: int, max_crossings: int):
    rng = random.Random(seed)
    found = 0
    while found < count:
        d = random_plat(rng, max_n, max_crossings)
        try:
            solve_maslov(d)
        except MaslovError:
            continue
        found += 1
        yield d


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--field", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--max-crossings", type=int, default=12)
    parser.add_argument("--sample", type=int, default=12, help="A-infinity samples per arity")
    args = parser.parse_args()
    ring = Ring(args.field)
    names = sorted(CHECKS)
    checked: Counter = Counter()
    failed: Counter = Counter()
    aug_counts: Counter = Counter()
    for d in corpus(args.count, args.seed, args.max_n, args.max_crossings):
        asm = assemble(d, ring)
        ws = Workspace(asm.dga, ring, asm, sample=args.sample)
        aug_counts[len(ws.augs)] += 1
        for res in run_checks(ws, names):
            checked[res.name] += res.checked
            if not res.ok:
                failed[res.name] += 1
                print(" ".join(d.to_text().split()), "|", res.name, "|", res.messages[0])
    print(f"augmentation counts over F{args.field}: {dict(sorted(aug_counts.items()))}")
    for name in names:
        print(f"{'FAIL' if failed[name] else 'PASS'} {name}: {checked[name]} items, {failed[name]} failing diagrams")


if __name__ == "__main__":
    main()
