#!/usr/bin/env python3
"""Write d1, d2 and min_gap along the family for the reference parameter sets.

One CSV per (p, m, w) into --outdir, named ``curve_p{p}_m{m}_w{w}.csv``.
"""

from argparse import ArgumentParser
from pathlib import Path

from holder_maxmin.cli import main as cli_main

PARAMS = [(1.5, 0.5, 0.5), (3.0, 0.5, 2.0), (4.0, 0.5, 2.0), (1.2, 0.3, 0.2), (6.0, 0.7, 1.5)]


def main():
    parser = ArgumentParser()
    parser.add_argument("--outdir", default="curves")
    parser.add_argument("--t-max", type=float, default=0.9)
    parser.add_argument("--steps", type=int, default=181)
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for p, m, w in PARAMS:
        out = outdir / f"curve_p{p:g}_m{m:g}_w{w:g}.csv"
        code = cli_main([
            "curve", "--p", str(p), "--m", str(m), "--w", str(w),
            "--t-max", str(args.t_max), "--steps", str(args.steps), "--out", str(out),
        ])
        if code:
            raise SystemExit(code)
        print(out)


if __name__ == "__main__":
    main()
