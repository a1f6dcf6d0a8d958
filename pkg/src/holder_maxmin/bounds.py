"""Hölder bound, the max-min bound B_p, its symmetrization and the p = 2 identity.

With ``a = f**2`` and ``b = g**2`` the Cauchy-Schwarz bound splits exactly as

    mu(a) mu(b) = mu(a v b) mu(a ^ b) + mu((a - b)+) mu((b - a)+)

so B_2 never exceeds the Cauchy-Schwarz bound. For p != 2 the symmetrized
max-min bound can exceed Hölder's; see :mod:`holder_maxmin.family`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import InvariantError
from .measure import (
    IDENTITY_TOL,
    ORDER_TOL,
    DiscreteMeasure,
    ExponentPair,
    SampledFunction,
    _check_paired,
    integrate,
    lr_mean_kernel,
    pointwise,
)


def holder_kernel(w, f, g, p, q):
    return lr_mean_kernel(w, f, p) * lr_mean_kernel(w, g, q)


def maxmin_kernel(w, f, g, r, s):
    return lr_mean_kernel(w, np.maximum(f, g), r) * lr_mean_kernel(w, np.minimum(f, g), s)


def gap_kernel(w, f, g, p, q):
    """Return ``(min(B_p, B_q) - holder, holder)`` along the last axis."""
    holder = holder_kernel(w, f, g, p, q)
    sym = np.minimum(maxmin_kernel(w, f, g, p, q), maxmin_kernel(w, f, g, q, p))
    return sym - holder, holder


def order_tol(value: float) -> float:
    return ORDER_TOL * (1.0 + value)


def holder_rhs(mu: DiscreteMeasure, f: SampledFunction, g: SampledFunction, e: ExponentPair) -> float:
    """mu(f**p)**(1/p) * mu(g**q)**(1/q)."""
    _check_paired(mu, f, g)
    return float(holder_kernel(mu.weights, f.values, g.values, e.p, e.q))


def maxmin_bound(mu: DiscreteMeasure, f: SampledFunction, g: SampledFunction, e: ExponentPair) -> float:
    """B_p(f, g) = mu(max(f,g)**p)**(1/p) * mu(min(f,g)**q)**(1/q)."""
    _check_paired(mu, f, g)
    return float(maxmin_kernel(mu.weights, f.values, g.values, e.p, e.q))


def _maxmin_swapped(mu, f, g, e) -> float:
    return float(maxmin_kernel(mu.weights, f.values, g.values, e.q, e.p))


def symmetrized_bound(mu: DiscreteMeasure, f: SampledFunction, g: SampledFunction, e: ExponentPair) -> float:
    """min(B_p, B_q)."""
    _check_paired(mu, f, g)
    return min(maxmin_bound(mu, f, g, e), _maxmin_swapped(mu, f, g, e))


@dataclass(frozen=True)
class BoundReport:
    mu_fg: float
    holder: float
    b_p: float
    b_q: float
    symmetrized: float
    improves_holder: bool
    violates_holder_order: bool

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def gap(self) -> float:
        return self.symmetrized - self.holder

    def check(self) -> None:
        """Raise :class:`InvariantError` if mu(fg) exceeds any of the bounds."""
        for name in ("holder", "b_p", "b_q"):
            bound = getattr(self, name)
            if self.mu_fg > bound + order_tol(bound):
                raise InvariantError(f"mu(fg) = {self.mu_fg!r} exceeds {name} = {bound!r}")


def bound_report(mu: DiscreteMeasure, f: SampledFunction, g: SampledFunction, e: ExponentPair) -> BoundReport:
    _check_paired(mu, f, g)
    holder = holder_rhs(mu, f, g, e)
    b_p = maxmin_bound(mu, f, g, e)
    b_q = _maxmin_swapped(mu, f, g, e)
    sym = min(b_p, b_q)
    violates = sym - holder > order_tol(holder)
    return BoundReport(
        mu_fg=integrate(mu, pointwise("product", f, g)),
        holder=holder,
        b_p=b_p,
        b_q=b_q,
        symmetrized=sym,
        improves_holder=not violates,
        violates_holder_order=violates,
    )


@dataclass(frozen=True)
class CsIdentityReport:
    lhs: float
    rhs_main: float
    improvement: float
    residual: float
    eps_bound: float

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def relative_residual(self) -> float:
        return abs(self.residual) / (1.0 + self.lhs)


def cs_identity_report(
    mu: DiscreteMeasure, f: SampledFunction, g: SampledFunction, check: bool = False
) -> CsIdentityReport:
    """Split mu(f**2) mu(g**2) into the max-min product and the improvement term.

    With ``check=True`` the identity residual, the Cauchy-Schwarz form of the
    max-min bound and the sup-norm bound on the improvement term are verified,
    and :class:`InvariantError` is raised on failure.
    """
    _check_paired(mu, f, g)
    a = pointwise("product", f, f)
    b = pointwise("product", g, g)
    lhs = integrate(mu, a) * integrate(mu, b)
    rhs_main = integrate(mu, pointwise("max", a, b)) * integrate(mu, pointwise("min", a, b))
    improvement = integrate(mu, pointwise("pos_diff", a, b)) * integrate(mu, pointwise("pos_diff", b, a))
    eps = float(np.max(np.abs(a.values - b.values)))
    report = CsIdentityReport(
        lhs=lhs,
        rhs_main=rhs_main,
        improvement=improvement,
        residual=lhs - rhs_main - improvement,
        eps_bound=mu.total_mass() ** 2 * eps**2,
    )
    if check:
        mu_fg = integrate(mu, pointwise("product", f, g))
        _check_cs(report, mu_fg)
    return report


def _check_cs(r: CsIdentityReport, mu_fg: float) -> None:
    if r.relative_residual > IDENTITY_TOL:
        raise InvariantError(f"identity residual {r.residual!r} too large for lhs {r.lhs!r}")
    if r.improvement < 0:
        raise InvariantError(f"negative improvement term {r.improvement!r}")
    if r.improvement > r.eps_bound + IDENTITY_TOL * (1.0 + r.eps_bound):
        raise InvariantError(f"improvement {r.improvement!r} exceeds sup-norm bound {r.eps_bound!r}")
    if r.rhs_main > r.lhs + IDENTITY_TOL * (1.0 + r.lhs):
        raise InvariantError("max-min bound exceeds the Cauchy-Schwarz bound")
    if mu_fg**2 > r.rhs_main + order_tol(r.rhs_main):
        raise InvariantError(f"mu(fg)^2 = {mu_fg**2!r} exceeds max-min bound {r.rhs_main!r}")
