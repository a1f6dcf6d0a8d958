"""Finite discrete measures, nonnegative sampled functions and their integrals.

A measure is a vector of strictly positive atom weights; a function is a
vector of nonnegative values, one per atom. Step functions on ``[0, 1)`` are
represented exactly by weighting each atom with the length of its piece.

The ``*_kernel`` helpers reduce along the last axis so that the batched search
and the single-instance API run literally the same arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .errors import DimensionError, DomainError

#: Tolerance for one-sided inequality checks, scaled by ``1 + value``.
ORDER_TOL = 1e-9
#: Relative tolerance for exact identities.
IDENTITY_TOL = 1e-12

PointwiseOp = Literal["product", "max", "min", "pos_diff"]


def _frozen_array(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """Finite measure space given by positive atom weights."""

    weights: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.weights, "weights")
        if arr.size == 0:
            raise DomainError("a measure needs at least one atom")
        if np.any(arr <= 0):
            raise DomainError("atom weights must be strictly positive")
        object.__setattr__(self, "weights", arr)

    @property
    def n_atoms(self) -> int:
        return int(self.weights.size)

    def total_mass(self) -> float:
        """mu(1), the integral of the constant-one function."""
        return integrate(self, constant(self, 1.0))


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Nonnegative function on the atoms of a discrete measure."""

    values: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.values, "values")
        if np.any(arr < 0):
            raise DomainError("function values must be nonnegative")
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return int(self.values.size)


def constant(mu: DiscreteMeasure, c: float) -> SampledFunction:
    return SampledFunction(np.full(mu.n_atoms, float(c)))


def conjugate(p: float) -> float:
    """Conjugate exponent p / (p - 1)."""
    p = float(p)
    if not (math.isfinite(p) and p > 1):
        raise DomainError(f"exponent must be a finite real > 1, got {p!r}")
    return p / (p - 1.0)


@dataclass(frozen=True)
class ExponentPair:
    """Conjugate exponents; ``q`` is always derived from ``p``."""

    p: float
    q: float = field(init=False)

    def __post_init__(self):
        q = conjugate(self.p)
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "q", q)
        if abs(1.0 / self.p + 1.0 / q - 1.0) > 1e-14:
            raise DomainError(f"exponent {self.p!r} is too close to 1 to conjugate accurately")


def _check_paired(mu: DiscreteMeasure, *fs: SampledFunction) -> None:
    for f in fs:
        if len(f) != mu.n_atoms:
            raise DimensionError(
                f"function has {len(f)} values but the measure has {mu.n_atoms} atoms"
            )


def weighted_sum_kernel(w: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.sum(w * v, axis=-1)


def lr_mean_kernel(w: np.ndarray, v: np.ndarray, r: float) -> np.ndarray:
    # Factor out the sup so large r cannot overflow: M * (sum w (v/M)^r)^(1/r).
    top = np.max(v, axis=-1, keepdims=True)
    safe = np.where(top > 0, top, 1.0)
    inner = weighted_sum_kernel(w, (v / safe) ** r)
    return np.where(top[..., 0] > 0, top[..., 0] * inner ** (1.0 / r), 0.0)


def integrate(mu: DiscreteMeasure, f: SampledFunction) -> float:
    """Integral of ``f`` against ``mu``: sum of weight times value."""
    _check_paired(mu, f)
    return float(weighted_sum_kernel(mu.weights, f.values))


def lr_mean(mu: DiscreteMeasure, f: SampledFunction, r: float) -> float:
    """(integral of f**r)**(1/r) for r > 1."""
    r = float(r)
    if not (math.isfinite(r) and r > 1):
        raise DomainError(f"L^r mean needs a finite r > 1, got {r!r}")
    _check_paired(mu, f)
    return float(lr_mean_kernel(mu.weights, f.values, r))


_OPS = {
    "product": np.multiply,
    "max": np.maximum,
    "min": np.minimum,
    "pos_diff": lambda x, y: np.maximum(x - y, 0.0),
}


def pointwise(op: PointwiseOp, f: SampledFunction, g: SampledFunction) -> SampledFunction:
    """Atomwise product, max, min or positive part of the difference."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise DomainError(f"unknown pointwise operation {op!r}") from None
    if len(f) != len(g):
        raise DimensionError(f"length mismatch: {len(f)} vs {len(g)}")
    return SampledFunction(fn(f.values, g.values))


def as_instance(
    weights: Sequence[float], f: Sequence[float], g: Sequence[float]
) -> tuple[DiscreteMeasure, SampledFunction, SampledFunction]:
    mu = DiscreteMeasure(weights)
    sf, sg = SampledFunction(f), SampledFunction(g)
    _check_paired(mu, sf, sg)
    return mu, sf, sg
