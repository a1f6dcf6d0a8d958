"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 a numerical invariant failed,
3 a ``--expect-*`` flag was not met. Payloads go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bounds import bound_report, cs_identity_report, order_tol
from .errors import HolderError, InvariantError, UsageError
from .family import (
    derivative_at_zero,
    family_functions,
    fd_derivative_at_zero,
    find_violation_t,
    gap_curve,
    gap_pair,
    validate_params,
)
from .measure import IDENTITY_TOL, ORDER_TOL, ExponentPair, as_instance
from .search import SearchConfig, corpus_instance, random_search, reverify
from .serialize import csv_rows, dumps
from .transforms import parse_transform, transformed_holder_bound

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT, EXIT_EXPECTATION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(EXIT_USAGE if status else EXIT_OK)


def load_instance(path: str):
    """Read ``{"weights": [...], "f": [...], "g": [...]}``."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(data, dict):
        raise UsageError(f"{path}: top level must be an object with keys weights, f, g")
    arrays = {}
    for key in ("weights", "f", "g"):
        if key not in data:
            raise UsageError(f"{path}: missing key {key!r}")
        val = data[key]
        if not isinstance(val, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in val
        ):
            raise UsageError(f"{path}: key {key!r} must be an array of numbers")
        arr = np.asarray(val, dtype=np.float64)
        if not np.all(np.isfinite(arr)):
            raise UsageError(f"{path}: key {key!r} contains non-finite numbers")
        if key == "weights" and (arr.size == 0 or np.any(arr <= 0)):
            raise UsageError(f"{path}: key 'weights' must be non-empty and strictly positive")
        if key != "weights" and np.any(arr < 0):
            raise UsageError(f"{path}: key {key!r} must be nonnegative")
        arrays[key] = arr
    n = arrays["weights"].size
    for key in ("f", "g"):
        if arrays[key].size != n:
            raise UsageError(f"{path}: key {key!r} has {arrays[key].size} entries, weights has {n}")
    return as_instance(arrays["weights"], arrays["f"], arrays["g"])


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _family_args(sp):
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--m", type=float, required=True)
    sp.add_argument("--w", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="holder-maxmin", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--version",
        action="version",
        version=f"holder-maxmin {__version__} (order_tol={ORDER_TOL:g}, identity_tol={IDENTITY_TOL:g})",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("bounds", help="Hölder, max-min and symmetrized bounds for one instance")
    sp.add_argument("--input", required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--transform")

    sp = sub.add_parser("identity", help="p = 2 max-min identity on one file or a random corpus")
    sp.add_argument("--input")
    sp.add_argument("--random", action="store_true")
    sp.add_argument("--n", type=int, default=64, help="maximum atoms per random instance")
    sp.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int)

    sp = sub.add_parser("family", help="gap curves and bound report at one point of the family")
    _family_args(sp)
    sp.add_argument("--t", type=float, required=True)

    sp = sub.add_parser("curve", help="write t,d1,d2,min_gap on a uniform grid as CSV")
    _family_args(sp)
    sp.add_argument("--t-max", type=float, required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--out", required=True)

    sp = sub.add_parser("scan", help="smallest log-grid t with a strict Hölder violation")
    _family_args(sp)
    sp.add_argument("--t-max", type=float, default=0.1)
    sp.add_argument("--steps", type=int, default=200)

    sp = sub.add_parser("derivative", help="slope at t = 0: formula vs finite difference")
    _family_args(sp)
    sp.add_argument("--h", type=float, default=1e-5)

    sp = sub.add_parser("search", help="seeded random search for violations")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--atoms", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    expect = sp.add_mutually_exclusive_group()
    expect.add_argument("--expect-none", action="store_true")
    expect.add_argument("--expect-some", action="store_true")
    sp.add_argument("--inject-family", metavar="M,W,T")
    return parser


def _cmd_bounds(args) -> int:
    mu, f, g = load_instance(args.input)
    e = ExponentPair(args.p)
    report = bound_report(mu, f, g, e)
    payload = report.to_dict()
    if args.transform:
        T = parse_transform(args.transform)
        bound = transformed_holder_bound(mu, f, g, e, T)
        payload["transform"] = str(T)
        payload["transformed_bound"] = bound
    _emit(payload)
    report.check()
    if args.transform and report.mu_fg > bound + order_tol(bound):
        raise InvariantError(f"mu(fg) exceeds the transformed bound {bound!r}")
    return EXIT_OK


def _cmd_identity(args) -> int:
    if args.random == (args.input is not None):
        raise UsageError("identity needs exactly one of --input FILE or --random")
    if args.input is not None:
        mu, f, g = load_instance(args.input)
        report = cs_identity_report(mu, f, g)
        _emit(report.to_dict())
        cs_identity_report(mu, f, g, check=True)
        return EXIT_OK

    if args.trials is None or args.seed is None:
        raise UsageError("identity --random requires --trials and --seed")
    if args.trials < 1 or args.n < 2:
        raise UsageError("identity --random needs --trials >= 1 and --n >= 2")
    worst, worst_trial, failures = 0.0, 0, 0
    for i in range(args.trials):
        mu, f, g = as_instance(*corpus_instance(args.seed, i, args.n))
        report = cs_identity_report(mu, f, g)
        if report.relative_residual > worst:
            worst, worst_trial = report.relative_residual, i
        try:
            cs_identity_report(mu, f, g, check=True)
        except InvariantError:
            failures += 1
    _emit(
        {
            "trials": args.trials,
            "max_atoms": args.n,
            "seed": args.seed,
            "worst_relative_residual": worst,
            "worst_trial": worst_trial,
            "failures": failures,
        }
    )
    return EXIT_INVARIANT if failures else EXIT_OK


def _params(args):
    return validate_params(args.p, args.m, args.w)


def _cmd_family(args) -> int:
    params = _params(args)
    point = gap_pair(params, args.t)
    mu, f, g = family_functions(params, args.t)
    report = bound_report(mu, f, g, ExponentPair(params.p))
    _emit(
        {
            "params": {"p": params.p, "m": params.m, "w": params.w, "t": args.t},
            "gap": point.to_dict(),
            "report": report.to_dict(),
        }
    )
    tol = IDENTITY_TOL * (1.0 + report.holder)
    if abs(point.d1 - (report.b_p - report.holder)) > tol or abs(
        point.d2 - (report.b_q - report.holder)
    ) > tol:
        raise InvariantError("closed-form gap curves disagree with the direct bound computation")
    report.check()
    return EXIT_OK


def _cmd_curve(args) -> int:
    params = _params(args)
    if not 0 < args.t_max < 1 or args.steps < 2:
        raise UsageError("curve needs 0 < --t-max < 1 and --steps >= 2")
    points = gap_curve(params, np.linspace(0.0, args.t_max, args.steps))
    text = csv_rows(("t", "d1", "d2", "min_gap"), ((p.t, p.d1, p.d2, p.min_gap) for p in points))
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    return EXIT_OK


def _cmd_scan(args) -> int:
    params = _params(args)
    result = find_violation_t(params, args.t_max, args.steps)
    _emit({"params": {"p": params.p, "m": params.m, "w": params.w}, **result.to_dict()})
    return EXIT_OK


def _cmd_derivative(args) -> int:
    params = _params(args)
    formula = derivative_at_zero(params)
    fd1 = fd_derivative_at_zero(params, args.h, 1)
    fd2 = fd_derivative_at_zero(params, args.h, 2)
    rel = max(abs(fd1 - formula), abs(fd2 - formula)) / abs(formula)
    _emit(
        {
            "params": {"p": params.p, "m": params.m, "w": params.w},
            "h": args.h,
            "formula": formula,
            "fd_d1": fd1,
            "fd_d2": fd2,
            "relative_error": rel,
        }
    )
    if not formula > 0:
        raise InvariantError(f"derivative at zero is not positive: {formula!r}")
    return EXIT_OK


def _cmd_search(args) -> int:
    inject = None
    if args.inject_family:
        parts = args.inject_family.split(",")
        try:
            inject = tuple(float(v) for v in parts)
        except ValueError:
            inject = ()
        if len(inject) != 3:
            raise UsageError(f"--inject-family expects M,W,T, got {args.inject_family!r}")
    cfg = SearchConfig(
        p=args.p, atoms=args.atoms, trials=args.trials, seed=args.seed, inject_family=inject
    )
    result = random_search(cfg, workers=args.workers)
    _emit(result.to_dict())
    for i in result.violation_trials:
        if not reverify(cfg, i).violates_holder_order:
            raise InvariantError(f"trial {i} flagged as a violation but does not re-verify")
    if args.expect_none and result.violations_found:
        print(f"expected no violations, found {result.violations_found}", file=sys.stderr)
        return EXIT_EXPECTATION
    if args.expect_some and not result.violations_found:
        print("expected at least one violation, found none", file=sys.stderr)
        return EXIT_EXPECTATION
    return EXIT_OK


_COMMANDS = {
    "bounds": _cmd_bounds,
    "identity": _cmd_identity,
    "family": _cmd_family,
    "curve": _cmd_curve,
    "scan": _cmd_scan,
    "derivative": _cmd_derivative,
    "search": _cmd_search,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except HolderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
