from fractions import Fraction

import pytest
from hypothesis import strategies as st

from z2tec.measure import Measure

_acceptance_lines = []


@st.composite
def measures(draw, l=3, max_weight=30):
    n = 1 << l
    w = draw(st.lists(st.integers(0, max_weight), min_size=n, max_size=n).filter(any))
    return Measure.from_weights(w)


@st.composite
def rational_vectors(draw, n=8):
    nums = draw(st.lists(st.integers(-50, 50), min_size=n, max_size=n))
    dens = draw(st.lists(st.integers(1, 12), min_size=n, max_size=n))
    return [Fraction(a, b) for a, b in zip(nums, dens)]


@pytest.fixture
def record_criterion():
    """Register a one-line acceptance result printed in the terminal summary."""

    def record(number, passed, detail):
        _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
