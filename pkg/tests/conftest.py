import numpy as np
import pytest
from hypothesis import strategies as st

from holder_maxmin.measure import DiscreteMeasure, SampledFunction

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def log(number, ok, detail):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok

    return log


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


values = st.floats(min_value=0.0, max_value=10.0, allow_nan=False, allow_infinity=False)
weights = st.floats(min_value=0.01, max_value=1.0, allow_nan=False, allow_infinity=False)


# Zero or bounded away from the subnormal range, for comparisons with naive sums.
normal_values = st.one_of(st.just(0.0), st.floats(min_value=1e-3, max_value=10.0))


@st.composite
def instances(draw, max_atoms=64, values=values):
    """(mu, f, g) with 1..max_atoms atoms."""
    n = draw(st.integers(1, max_atoms))
    w = draw(st.lists(weights, min_size=n, max_size=n))
    f = draw(st.lists(values, min_size=n, max_size=n))
    g = draw(st.lists(values, min_size=n, max_size=n))
    return DiscreteMeasure(w), SampledFunction(f), SampledFunction(g)


exponents = st.one_of(
    st.floats(min_value=1.01, max_value=1.99),
    st.floats(min_value=2.01, max_value=20.0),
    st.just(2.0),
)


def rel_close(a, b, rel):
    return abs(a - b) <= rel * max(abs(a), abs(b), np.finfo(float).tiny)
