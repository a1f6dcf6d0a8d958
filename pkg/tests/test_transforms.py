import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from holder_maxmin.bounds import holder_rhs, maxmin_bound
from holder_maxmin.errors import DomainError, UsageError
from holder_maxmin.measure import (
    DiscreteMeasure,
    ExponentPair,
    SampledFunction,
    integrate,
    pointwise,
)
from holder_maxmin.transforms import (
    BUILTINS,
    Compose,
    MaxMin,
    Scale,
    Swap,
    apply,
    parse_transform,
    random_transform,
    transformed_holder_bound,
    verify_product_preserving,
)

from conftest import exponents, instances, rel_close

builtin_specs = st.sampled_from([Scale(0.1), Scale(1.0), Scale(10.0), Scale(0.5), Swap(), MaxMin()])


def test_apply_examples():
    assert apply(Swap(), 3, 5) == (5.0, 3.0)
    assert apply(MaxMin(), 2, 7) == (7.0, 2.0)
    x, y = apply(Compose((Scale(2), MaxMin())), 3, 5)
    assert (x, y) == (6.0, 2.5)
    assert x * y == 15.0


def test_compose_is_left_to_right():
    # swap first, then scale the new first component
    assert apply(Compose((Swap(), Scale(2))), 3, 5) == (10.0, 1.5)
    assert apply(Compose((Scale(2), Swap())), 3, 5) == (2.5, 6.0)


def test_apply_rejects_negative_or_nonfinite():
    with pytest.raises(DomainError):
        apply(Swap(), -1, 2)
    with pytest.raises(DomainError):
        apply(Swap(), math.nan, 2)


@pytest.mark.parametrize("k", [0.0, -1.0, math.inf, math.nan])
def test_scale_validation(k):
    with pytest.raises(DomainError):
        Scale(k)


def test_empty_compose_rejected():
    with pytest.raises(DomainError):
        Compose(())


def test_verify_examples():
    rng = np.random.default_rng(0)
    grid = rng.uniform(0, 10, size=(100, 2))
    assert verify_product_preserving(Swap(), grid) == 0.0
    assert verify_product_preserving(MaxMin(), [(2, 7)]) == 0.0
    big = rng.uniform(0, 1e3, size=(10_000, 2))
    assert verify_product_preserving(Scale(3), big) <= 1e-9
    with pytest.raises(UsageError):
        verify_product_preserving(Swap(), [])


@given(builtin_specs, builtin_specs, st.integers(0, 2**32 - 1))
def test_composition_closure(T, U, seed):
    grid = np.random.default_rng(seed).uniform(0, 100, size=(256, 2))
    assert verify_product_preserving(Compose((T, U)), grid) <= 1e-9
    t1, t2 = apply(Compose((T, U)), grid[:, 0], grid[:, 1])
    xy = grid[:, 0] * grid[:, 1]
    assert np.all(np.abs(t1 * t2 - xy) <= 1e-12 * (1 + xy))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("swap", Swap()),
        ("maxmin", MaxMin()),
        ("scale:2", Scale(2.0)),
        ("scale:2>maxmin", Compose((Scale(2.0), MaxMin()))),
        (" swap > scale:0.5 ", Compose((Swap(), Scale(0.5)))),
    ],
)
def test_parse(text, expected):
    T = parse_transform(text)
    assert T == expected
    assert parse_transform(str(T)) == T


@pytest.mark.parametrize("text, bad", [("rotate", "rotate"), ("scale:x", "scale:x"), ("swap>>maxmin", ""), ("scale:-1", "scale:-1"), ("scale", "scale")])
def test_parse_errors_name_token(text, bad):
    with pytest.raises(UsageError) as exc:
        parse_transform(text)
    assert bad in str(exc.value)


def test_random_transform_is_seeded():
    a = random_transform(np.random.default_rng(3))
    b = random_transform(np.random.default_rng(3))
    assert a == b and isinstance(a, Compose)


@pytest.mark.parametrize("k", [0.1, 1.0, 10.0])
def test_scale_bound_equals_holder(k):
    mu, f, g = DiscreteMeasure([0.2, 0.3, 0.5]), SampledFunction([1, 4, 0.5]), SampledFunction([2, 0, 3])
    e = ExponentPair(3)
    assert rel_close(transformed_holder_bound(mu, f, g, e, Scale(k)), holder_rhs(mu, f, g, e), 1e-12)


def test_swap_single_atom():
    mu, f, g = DiscreteMeasure([1]), SampledFunction([2]), SampledFunction([3])
    assert transformed_holder_bound(mu, f, g, ExponentPair(2), Swap()) == pytest.approx(6.0, rel=1e-15)


def test_maxmin_two_atoms_equality_case():
    mu, f, g = DiscreteMeasure([0.5, 0.5]), SampledFunction([1, 2]), SampledFunction([2, 1])
    bound = transformed_holder_bound(mu, f, g, ExponentPair(2), MaxMin())
    assert bound == pytest.approx(2.0, rel=1e-15)
    assert integrate(mu, pointwise("product", f, g)) == 2.0


@given(instances(), exponents, st.sampled_from(list(BUILTINS)), st.integers(0, 2**32 - 1))
def test_generalized_holder(inst, p, T, seed):
    mu, f, g = inst
    e = ExponentPair(p)
    lhs = integrate(mu, pointwise("product", f, g))
    for spec in (T, random_transform(np.random.default_rng(seed))):
        bound = transformed_holder_bound(mu, f, g, e, spec)
        assert lhs <= bound + 1e-9 * (1 + bound)


@given(instances(), exponents, st.floats(1e-3, 1e3))
def test_scale_invariance(inst, p, k):
    mu, f, g = inst
    e = ExponentPair(p)
    a = transformed_holder_bound(mu, f, g, e, Scale(k))
    b = holder_rhs(mu, f, g, e)
    assert abs(a - b) <= 1e-12 * max(a, b, 1e-300)


@given(instances(), exponents)
def test_swap_duality(inst, p):
    mu, f, g = inst
    e = ExponentPair(p)
    a = transformed_holder_bound(mu, f, g, e, Swap())
    b = holder_rhs(mu, g, f, e)
    assert abs(a - b) <= 1e-12 * max(a, b, 1e-300)


@given(instances(), exponents)
def test_maxmin_specialization(inst, p):
    mu, f, g = inst
    e = ExponentPair(p)
    a = transformed_holder_bound(mu, f, g, e, MaxMin())
    b = maxmin_bound(mu, f, g, e)
    assert abs(a - b) <= 1e-12 * max(a, b, 1e-300)
