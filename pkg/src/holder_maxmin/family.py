"""Two-step counterexample family on [0, 1) and its closed-form gap curves.

For p != 2, m in (0, 1) and w on the side of 1 that makes w**p > w**q::

    g = w on [0, m),          1 on [m, 1)
    f = (1 - t) w on [0, m),  (1 + t) on [m, 1)

d1(t) = B_p(f, g) - Hölder and d2(t) = B_q(f, g) - Hölder both vanish at
t = 0 with the same positive slope, so min(d1, d2) > 0 for small t > 0.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, ExceptionalExponentError, SignConditionError, UsageError
from .measure import ORDER_TOL, DiscreteMeasure, SampledFunction, conjugate


@dataclass(frozen=True)
class FamilyParams:
    p: float
    m: float
    w: float

    @property
    def q(self) -> float:
        return conjugate(self.p)


def validate_params(p: float, m: float, w: float) -> FamilyParams:
    p, m, w = float(p), float(m), float(w)
    if not (math.isfinite(p) and p > 1):
        raise DomainError(f"p must be a finite real > 1, got {p!r}")
    if p == 2:
        raise ExceptionalExponentError("p = 2 is self-conjugate; the family needs p != 2")
    if not (0 < m < 1):
        raise DomainError(f"m must lie in (0, 1), got {m!r}")
    if not (math.isfinite(w) and w > 0):
        raise DomainError(f"w must be a finite real > 0, got {w!r}")
    if p < 2 and not w < 1:
        raise SignConditionError(f"for p < 2 the family needs w in (0, 1), got {w!r}")
    if p > 2 and not w > 1:
        raise SignConditionError(f"for p > 2 the family needs w > 1, got {w!r}")
    q = conjugate(p)
    if not w**p - w**q > 0:
        raise SignConditionError(f"w**p - w**q = {w**p - w**q!r} is not positive")
    return FamilyParams(p, m, w)


def _check_t(t) -> np.ndarray:
    ta = np.asarray(t, dtype=np.float64)
    if not np.all((ta >= 0) & (ta < 1)):
        raise DomainError("t must lie in [0, 1)")
    return ta


def family_functions(
    params: FamilyParams, t: float
) -> tuple[DiscreteMeasure, SampledFunction, SampledFunction]:
    """Two-atom encoding (weights m, 1 - m) of the step functions f and g."""
    t = float(_check_t(t))
    p = params
    mu = DiscreteMeasure([p.m, 1.0 - p.m])
    f = SampledFunction([(1.0 - t) * p.w, 1.0 + t])
    g = SampledFunction([p.w, 1.0])
    return mu, f, g


def holder_along(params: FamilyParams, t):
    """Hölder bound mu(f**p)**(1/p) mu(g**q)**(1/q) along the family."""
    t = _check_t(t)
    p, m, w = params.p, params.m, params.w
    q = params.q
    return ((1 - m) * (1 + t) ** p + m * (1 - t) ** p * w**p) ** (1 / p) * (
        1 - m + m * w**q
    ) ** (1 / q)


def gap_curves(params: FamilyParams, t):
    """Closed forms ``(d1(t), d2(t), holder(t))``; ``t`` may be an array."""
    t = _check_t(t)
    p, m, w = params.p, params.m, params.w
    q = params.q
    holder = holder_along(params, t)
    b_p = ((1 - m) * (1 + t) ** p + m * w**p) ** (1 / p) * (
        1 - m + m * (1 - t) ** q * w**q
    ) ** (1 / q)
    b_q = ((1 - m) * (1 + t) ** q + m * w**q) ** (1 / q) * (
        1 - m + m * (1 - t) ** p * w**p
    ) ** (1 / p)
    return b_p - holder, b_q - holder, holder


@dataclass(frozen=True)
class GapPoint:
    t: float
    d1: float
    d2: float
    min_gap: float

    def to_dict(self) -> dict:
        return asdict(self)


def gap_pair(params: FamilyParams, t: float) -> GapPoint:
    d1, d2, _ = gap_curves(params, t)
    d1, d2 = float(d1), float(d2)
    return GapPoint(float(t), d1, d2, min(d1, d2))


def gap_curve(params: FamilyParams, ts) -> list[GapPoint]:
    ts = np.asarray(ts, dtype=np.float64)
    d1, d2, _ = gap_curves(params, ts)
    return [
        GapPoint(float(t), float(a), float(b), float(min(a, b)))
        for t, a, b in zip(ts, d1, d2)
    ]


def derivative_at_zero(params: FamilyParams) -> float:
    """Common slope of d1 and d2 at t = 0."""
    p, m, w = params.p, params.m, params.w
    q = params.q
    return (
        (1 - m) * m * (w**p - w**q)
        * (1 - m + m * w**p) ** (-1 / q)
        * (1 - m + m * w**q) ** (-1 / p)
    )


def fd_derivative_at_zero(params: FamilyParams, h: float = 1e-5, j: int = 1) -> float:
    """One-sided difference quotient at 0 with one Richardson step.

    D(s) = d_j(s) / s has error c s + O(s**2), so 2 D(h/2) - D(h) cancels the
    linear term.
    """
    h = float(h)
    if not (0 < h <= 1e-2):
        raise UsageError(f"step h must lie in (0, 1e-2], got {h!r}")
    if j not in (1, 2):
        raise UsageError(f"j must be 1 or 2, got {j!r}")

    def quotient(s):
        return float(gap_curves(params, s)[j - 1]) / s

    return 2.0 * quotient(h / 2) - quotient(h)


@dataclass(frozen=True)
class ScanResult:
    found: bool
    t: Optional[float]
    min_gap: Optional[float]
    holder: Optional[float]
    max_min_gap: float
    t_at_max: float
    steps: int
    t_max: float

    def to_dict(self) -> dict:
        return asdict(self)


SCAN_T_MIN = 1e-6


def scan_grid(t_max: float, steps: int) -> np.ndarray:
    t_max = float(t_max)
    if not (SCAN_T_MIN < t_max < 1):
        raise UsageError(f"t_max must lie in ({SCAN_T_MIN}, 1), got {t_max!r}")
    if int(steps) != steps or steps < 1:
        raise UsageError(f"steps must be a positive integer, got {steps!r}")
    return np.geomspace(SCAN_T_MIN, t_max, int(steps))


def find_violation_t(params: FamilyParams, t_max: float = 0.1, steps: int = 200) -> ScanResult:
    """Smallest log-grid t where min(d1, d2) clears the ordering tolerance.

    Positivity is certified on the grid points only. Not finding one (which
    can happen for p within about 0.05 of 2) is reported, not raised.
    """
    ts = scan_grid(t_max, steps)
    d1, d2, holder = gap_curves(params, ts)
    gaps = np.minimum(d1, d2)
    hits = np.flatnonzero(gaps > ORDER_TOL * (1.0 + holder))
    best = int(np.argmax(gaps))
    common = dict(
        max_min_gap=float(gaps[best]),
        t_at_max=float(ts[best]),
        steps=int(steps),
        t_max=float(t_max),
    )
    if hits.size == 0:
        return ScanResult(found=False, t=None, min_gap=None, holder=None, **common)
    i = int(hits[0])
    return ScanResult(
        found=True, t=float(ts[i]), min_gap=float(gaps[i]), holder=float(holder[i]), **common
    )
