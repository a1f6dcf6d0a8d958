#!/usr/bin/env python3
"""Sweep p over (1, 2) and (2, inf) and show where min(B_p, B_q) beats Hölder.

For each p the family is taken at m = 0.5 with w = 0.5 (p < 2) or w = 2
(p > 2). Prints the slope at t = 0 (formula and finite difference), the
first violating grid t and the largest gap seen on the scan.

    python scripts/reproduce_counterexample.py --t-max 0.5
"""

from argparse import ArgumentParser

import numpy as np

from holder_maxmin.family import (
    derivative_at_zero,
    fd_derivative_at_zero,
    find_violation_t,
    validate_params,
)


def main():
    parser = ArgumentParser()
    parser.add_argument("--m", type=float, default=0.5)
    parser.add_argument("--t-max", type=float, default=0.5)
    parser.add_argument("--steps", type=int, default=400)
    args = parser.parse_args()

    ps = np.concatenate([np.linspace(1.1, 1.95, 10), [1.99, 2.01], np.linspace(2.05, 8.0, 10)])
    print(f"{'p':>6} {'w':>4} {'slope':>12} {'fd slope':>12} {'first t':>10} {'max gap':>12} {'at t':>8}")
    for p in ps:
        w = 0.5 if p < 2 else 2.0
        params = validate_params(p, args.m, w)
        scan = find_violation_t(params, args.t_max, args.steps)
        first = f"{scan.t:10.3g}" if scan.found else f"{'none':>10}"
        print(
            f"{p:6.3f} {w:4.1f} {derivative_at_zero(params):12.6g} "
            f"{fd_derivative_at_zero(params):12.6g} {first} "
            f"{scan.max_min_gap:12.5g} {scan.t_at_max:8.3g}"
        )


if __name__ == "__main__":
    main()
