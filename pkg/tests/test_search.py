import numpy as np
import pytest

from holder_maxmin.bounds import bound_report
from holder_maxmin.errors import DomainError, SignConditionError, UsageError
from holder_maxmin.family import gap_pair, validate_params
from holder_maxmin.measure import ExponentPair, as_instance
from holder_maxmin.search import (
    SearchConfig,
    corpus_instance,
    random_search,
    reverify,
    trial_instance,
    trial_rng,
)
from holder_maxmin.serialize import dumps


def test_trial_streams_are_independent_and_reproducible():
    a = trial_rng(5, 0).random(4)
    assert np.array_equal(a, trial_rng(5, 0).random(4))
    assert not np.array_equal(a, trial_rng(5, 1).random(4))
    assert not np.array_equal(a, trial_rng(6, 0).random(4))


def test_draw_ranges():
    cfg = SearchConfig(p=3, atoms=256, trials=1, seed=1, value_range=(2.0, 3.0))
    w, f, g = trial_instance(cfg, 0)
    assert w.shape == f.shape == g.shape == (256,)
    assert np.all((w > 0.01) & (w <= 1.0))
    assert np.all((f >= 2.0) & (f < 3.0)) and np.all((g >= 2.0) & (g < 3.0))


def test_corpus_atom_counts():
    sizes = {corpus_instance(9, i, 64)[0].size for i in range(400)}
    assert min(sizes) >= 2 and max(sizes) <= 64 and len(sizes) > 30


@pytest.mark.parametrize(
    "kwargs, exc",
    [
        (dict(p=2, trials=0), UsageError),
        (dict(p=2, atoms=1), UsageError),
        (dict(p=2, atoms=257), UsageError),
        (dict(p=2, seed=-1), UsageError),
        (dict(p=2, seed=2**64), UsageError),
        (dict(p=2, value_range=(3.0, 1.0)), UsageError),
        (dict(p=2, value_range=(-1.0, 1.0)), UsageError),
        (dict(p=1.0), DomainError),
        (dict(p=3, inject_family=(0.5, 0.5, 0.05)), SignConditionError),
        (dict(p=3, inject_family=(0.5, 2.0, 1.0)), UsageError),
    ],
)
def test_config_validation(kwargs, exc):
    with pytest.raises(exc):
        SearchConfig(**kwargs)


def test_p2_finds_nothing():
    r = random_search(SearchConfig(p=2, atoms=16, trials=10_000, seed=3))
    assert r.violations_found == 0
    assert r.best_gap <= 1e-9


def test_injected_family_instance_is_found():
    cfg = SearchConfig(p=3, atoms=16, trials=500, seed=11, inject_family=(0.5, 2.0, 0.05))
    r = random_search(cfg)
    assert r.violations_found >= 1
    assert 0 in r.violation_trials
    expected = gap_pair(validate_params(3, 0.5, 2), 0.05).min_gap
    assert r.best_gap >= expected * (1 - 1e-12)


@pytest.mark.parametrize("p", [1.3, 3.0, 6.0])
def test_violations_reverify(p):
    cfg = SearchConfig(p=p, atoms=4, trials=3000, seed=2, value_range=(0.5, 2.0))
    r = random_search(cfg)
    for i in r.violation_trials:
        assert reverify(cfg, i).violates_holder_order


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_best_gap_reevaluates(p):
    cfg = SearchConfig(p=p, atoms=8, trials=2000, seed=4)
    r = random_search(cfg)
    inst = r.best_instance
    rep = bound_report(*as_instance(inst["weights"], inst["f"], inst["g"]), ExponentPair(p))
    assert abs(rep.gap - r.best_gap) <= 1e-12 * abs(r.best_gap)


@pytest.mark.parametrize("workers, chunk", [(1, 2048), (4, 2048), (3, 97), (8, 1)])
def test_determinism_across_parallelism(workers, chunk):
    cfg = SearchConfig(p=3.5, atoms=8, trials=3000, seed=123, inject_family=(0.5, 2.0, 0.05))
    base = random_search(cfg)
    other = random_search(cfg, workers=workers, chunk=chunk)
    assert dumps(base.to_dict()) == dumps(other.to_dict())
    assert base.violation_trials == other.violation_trials


def test_workers_validation():
    with pytest.raises(UsageError):
        random_search(SearchConfig(p=2, trials=5), workers=0)
