"""Seeded random search for instances where min(B_p, B_q) exceeds Hölder's bound.

Every trial draws from its own Philox stream keyed by ``(seed, trial)``, so an
instance can be regenerated from its index alone and the result does not
depend on how trials are split across worker threads.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import bound_report, gap_kernel
from .errors import UsageError
from .family import family_functions, validate_params
from .measure import ORDER_TOL, ExponentPair, as_instance, conjugate

WEIGHT_LOW = 0.01
MAX_ATOMS = 256
_U64 = 2**64


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent counter-based stream for one trial."""
    return np.random.Generator(np.random.Philox(key=int(seed) + (int(index) << 64)))


def draw_instance(rng: np.random.Generator, atoms: int, value_range=(0.0, 10.0)):
    """Weights uniform on (0.01, 1]; f, g uniform on [low, high)."""
    low, high = value_range
    weights = 1.0 - (1.0 - WEIGHT_LOW) * rng.random(atoms)
    f = low + (high - low) * rng.random(atoms)
    g = low + (high - low) * rng.random(atoms)
    return weights, f, g


def corpus_instance(seed: int, index: int, max_atoms: int = 64, value_range=(0.0, 10.0)):
    """Instance ``index`` of a reproducible corpus with 2..max_atoms atoms."""
    rng = trial_rng(seed, index)
    atoms = int(rng.integers(2, max_atoms + 1))
    return draw_instance(rng, atoms, value_range)


@dataclass(frozen=True)
class SearchConfig:
    p: float
    atoms: int = 16
    trials: int = 1000
    seed: int = 0
    value_range: tuple = (0.0, 10.0)
    inject_family: Optional[tuple] = None  # (m, w, t) placed at trial 0

    def __post_init__(self):
        conjugate(self.p)
        if int(self.atoms) != self.atoms or not 2 <= self.atoms <= MAX_ATOMS:
            raise UsageError(f"atoms must be an integer in [2, {MAX_ATOMS}], got {self.atoms!r}")
        if int(self.trials) != self.trials or self.trials < 1:
            raise UsageError(f"trials must be a positive integer, got {self.trials!r}")
        if int(self.seed) != self.seed or not 0 <= self.seed < _U64:
            raise UsageError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        low, high = (float(v) for v in self.value_range)
        if not (math.isfinite(low) and math.isfinite(high) and 0 <= low < high):
            raise UsageError(f"value_range needs 0 <= low < high, got {self.value_range!r}")
        object.__setattr__(self, "value_range", (low, high))
        if self.inject_family is not None:
            m, w, t = (float(v) for v in self.inject_family)
            validate_params(self.p, m, w)
            if not 0 <= t < 1:
                raise UsageError(f"injected t must lie in [0, 1), got {t!r}")
            object.__setattr__(self, "inject_family", (m, w, t))


@dataclass(frozen=True)
class SearchResult:
    p: float
    atoms: int
    trials: int
    seed: int
    best_gap: float
    best_trial: int
    best_instance: dict
    violations_found: int
    violation_trials: tuple

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "atoms": self.atoms,
            "trials": self.trials,
            "seed": self.seed,
            "best_gap": self.best_gap,
            "best_trial": self.best_trial,
            "best_instance": self.best_instance,
            "violations_found": self.violations_found,
        }


def trial_instance(cfg: SearchConfig, index: int):
    """Regenerate ``(weights, f, g)`` for one trial."""
    if index == 0 and cfg.inject_family is not None:
        m, w, t = cfg.inject_family
        mu, f, g = family_functions(validate_params(cfg.p, m, w), t)
        return mu.weights.copy(), f.values.copy(), g.values.copy()
    return draw_instance(trial_rng(cfg.seed, index), cfg.atoms, cfg.value_range)


def _evaluate_chunk(cfg: SearchConfig, p: float, q: float, start: int, stop: int):
    w, f, g = (np.stack(a) for a in zip(*(trial_instance(cfg, i) for i in range(start, stop))))
    return gap_kernel(w, f, g, p, q)


def random_search(cfg: SearchConfig, workers: int = 1, chunk: int = 2048) -> SearchResult:
    """Evaluate every trial, count violations and keep the largest gap.

    Ties in the gap go to the larger trial index.
    """
    if workers < 1:
        raise UsageError(f"workers must be >= 1, got {workers!r}")
    e = ExponentPair(cfg.p)
    gaps = np.empty(cfg.trials)
    holders = np.empty(cfg.trials)

    first = 0
    if cfg.inject_family is not None:
        # Injected instance has 2 atoms; evaluate it apart from the batch.
        w0, f0, g0 = trial_instance(cfg, 0)
        gaps[0], holders[0] = gap_kernel(w0, f0, g0, e.p, e.q)
        first = 1

    bounds = [(s, min(s + chunk, cfg.trials)) for s in range(first, cfg.trials, chunk)]
    if workers == 1 or len(bounds) <= 1:
        parts = [_evaluate_chunk(cfg, e.p, e.q, s, t) for s, t in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _evaluate_chunk(cfg, e.p, e.q, *b), bounds))
    for (s, t), (gp, hd) in zip(bounds, parts):
        gaps[s:t] = gp
        holders[s:t] = hd

    violating = np.flatnonzero(gaps > ORDER_TOL * (1.0 + holders))
    best_gap = gaps.max()
    best = int(np.flatnonzero(gaps == best_gap)[-1])
    bw, bf, bg = trial_instance(cfg, best)
    return SearchResult(
        p=e.p,
        atoms=int(cfg.atoms),
        trials=int(cfg.trials),
        seed=int(cfg.seed),
        best_gap=float(best_gap),
        best_trial=best,
        best_instance={"weights": bw.tolist(), "f": bf.tolist(), "g": bg.tolist()},
        violations_found=int(violating.size),
        violation_trials=tuple(int(i) for i in violating),
    )


def reverify(cfg: SearchConfig, index: int):
    """Recompute the :class:`BoundReport` for one trial through the scalar API."""
    mu, f, g = as_instance(*trial_instance(cfg, index))
    return bound_report(mu, f, g, ExponentPair(cfg.p))
