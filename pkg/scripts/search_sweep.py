#!/usr/bin/env python3
"""Violation frequency of min(B_p, B_q) > Hölder under random search, as a function of p.

Writes CSV ``p,trials,violations,rate,best_gap`` to stdout (or --out).

    python scripts/search_sweep.py --trials 20000 --atoms 8 --seed 1
"""

import sys
from argparse import ArgumentParser

from holder_maxmin.search import SearchConfig, random_search
from holder_maxmin.serialize import format_float


def main():
    parser = ArgumentParser()
    parser.add_argument("--atoms", type=int, default=8)
    parser.add_argument("--trials", type=int, default=20_000)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--low", type=float, default=0.0)
    parser.add_argument("--high", type=float, default=10.0)
    parser.add_argument("--workers", type=int, default=4)
    parser.add_argument("--out")
    args = parser.parse_args()

    rows = []
    for p in (1.1, 1.25, 1.5, 1.75, 1.9, 1.99, 2.0, 2.01, 2.1, 2.5, 3.0, 4.0, 6.0, 10.0):
        cfg = SearchConfig(
            p=p, atoms=args.atoms, trials=args.trials, seed=args.seed,
            value_range=(args.low, args.high),
        )
        r = random_search(cfg, workers=args.workers)
        rate = r.violations_found / r.trials
        rows.append(f"{p:g},{r.trials},{r.violations_found},{format_float(rate)},{format_float(r.best_gap)}")
    text = "p,trials,violations,rate,best_gap\n" + "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
