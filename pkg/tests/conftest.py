import random

import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from ietwords import (
    BoundarySet,
    Component,
    ExactScalar,
    Subdivision,
    make_scalar,
    rotation,
)


def q(num, den=1, d=0):
    """Shorthand rational scalar."""
    return make_scalar(num, den, 0, 1, d)


def as_fraction(x):
    """Rational value of a scalar with no radical part (test-side helper)."""
    assert x.radical_part == 0
    return x.rational_part


@pytest.fixture
def golden():
    """(rotation, partition, x0) whose coding is the Fibonacci word."""
    alpha = make_scalar(-1, 2, 1, 2, 5)
    one = ExactScalar.one(5)
    zero = ExactScalar.zero(5)
    cut = one - alpha
    sub = Subdivision(
        {
            "1": BoundarySet([Component(zero, True, cut, False)]),
            "0": BoundarySet([Component(cut, True, one, False)]),
        }
    )
    return rotation(alpha), sub, alpha


@pytest.fixture
def rng():
    return random.Random(0xE17)
