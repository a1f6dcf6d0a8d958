"""Product-preserving maps T = (T1, T2) on the closed positive quadrant.

Only the named examples exist (scaling, swap, max-min) plus compositions of
them, so every constructible spec preserves ``x * y`` by construction;
:func:`verify_product_preserving` audits that numerically.

Text form used on the command line::

    scale:2          (k x, y / k)
    swap             (y, x)
    maxmin           (max(x, y), min(x, y))
    scale:2>maxmin   left-to-right composition
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import DomainError, UsageError
from .measure import (
    DiscreteMeasure,
    ExponentPair,
    SampledFunction,
    _check_paired,
    lr_mean_kernel,
)


@dataclass(frozen=True)
class Scale:
    k: float

    def __post_init__(self):
        k = float(self.k)
        if not (math.isfinite(k) and k > 0):
            raise DomainError(f"scale factor must be finite and > 0, got {self.k!r}")
        object.__setattr__(self, "k", k)

    def _map(self, x, y):
        return self.k * x, y / self.k

    def __str__(self):
        return f"scale:{self.k!r}"


@dataclass(frozen=True)
class Swap:
    def _map(self, x, y):
        return y, x

    def __str__(self):
        return "swap"


@dataclass(frozen=True)
class MaxMin:
    def _map(self, x, y):
        return np.maximum(x, y), np.minimum(x, y)

    def __str__(self):
        return "maxmin"


@dataclass(frozen=True)
class Compose:
    """Apply ``steps`` in order, first to last."""

    steps: tuple

    def __post_init__(self):
        steps = tuple(self.steps)
        if not steps:
            raise DomainError("a composition needs at least one step")
        for s in steps:
            if not isinstance(s, (Scale, Swap, MaxMin, Compose)):
                raise DomainError(f"not a transform: {s!r}")
        object.__setattr__(self, "steps", steps)

    def _map(self, x, y):
        for s in self.steps:
            x, y = s._map(x, y)
        return x, y

    def __str__(self):
        return ">".join(str(s) for s in self.steps)


TransformSpec = Union[Scale, Swap, MaxMin, Compose]


def apply(T: TransformSpec, x, y):
    """Return ``(T1(x, y), T2(x, y))``; works elementwise on arrays."""
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(ya))):
        raise DomainError("transform arguments must be finite")
    if np.any(xa < 0) or np.any(ya < 0):
        raise DomainError("transform arguments must be nonnegative")
    t1, t2 = T._map(xa, ya)
    if xa.ndim == 0 and ya.ndim == 0:
        return float(t1), float(t2)
    return t1, t2


def verify_product_preserving(T: TransformSpec, grid) -> float:
    """Largest ``|T1 * T2 - x * y|`` over the grid points."""
    pts = np.asarray(grid, dtype=np.float64)
    if pts.size == 0:
        raise UsageError("grid must contain at least one point")
    pts = pts.reshape(-1, 2)
    x, y = pts[:, 0], pts[:, 1]
    t1, t2 = apply(T, x, y)
    return float(np.max(np.abs(t1 * t2 - x * y)))


def transformed_holder_bound(
    mu: DiscreteMeasure,
    f: SampledFunction,
    g: SampledFunction,
    e: ExponentPair,
    T: TransformSpec,
) -> float:
    """Hölder's right-hand side evaluated on the transformed pair (T1(f,g), T2(f,g))."""
    _check_paired(mu, f, g)
    t1, t2 = T._map(f.values, g.values)
    return float(lr_mean_kernel(mu.weights, t1, e.p) * lr_mean_kernel(mu.weights, t2, e.q))


def _parse_token(tok: str) -> TransformSpec:
    name, _, arg = tok.strip().partition(":")
    name = name.strip().lower()
    if name == "swap" and not arg:
        return Swap()
    if name == "maxmin" and not arg:
        return MaxMin()
    if name == "scale" and arg:
        try:
            k = float(arg)
        except ValueError:
            raise UsageError(f"bad scale factor in transform token {tok!r}") from None
        try:
            return Scale(k)
        except DomainError as exc:
            raise UsageError(f"transform token {tok!r}: {exc}") from None
    raise UsageError(f"unrecognized transform token {tok!r}")


def parse_transform(text: str) -> TransformSpec:
    """Parse ``"scale:k"``, ``"swap"``, ``"maxmin"`` or ``"a>b>..."``."""
    tokens = text.split(">")
    if any(not t.strip() for t in tokens):
        raise UsageError(f"empty token in transform {text!r}")
    specs = [_parse_token(t) for t in tokens]
    return specs[0] if len(specs) == 1 else Compose(tuple(specs))


def random_transform(rng: np.random.Generator, depth: int = 2) -> TransformSpec:
    """Random composition of ``depth`` built-in transforms."""
    steps: list[TransformSpec] = []
    for _ in range(depth):
        kind = rng.integers(3)
        if kind == 0:
            steps.append(Scale(float(10.0 ** rng.uniform(-2, 2))))
        elif kind == 1:
            steps.append(Swap())
        else:
            steps.append(MaxMin())
    return Compose(tuple(steps))


BUILTINS: Sequence[TransformSpec] = (Scale(0.5), Swap(), MaxMin())
