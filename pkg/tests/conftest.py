import itertools
from fractions import Fraction

import pytest

ACCEPTANCE_LINES: list[str] = []


def brute_value(n, weights, side):
    """Cut value from explicit vertex sets, independent of the bitmask code."""
    side = set(side)
    pairs = list(itertools.combinations(range(n), 2))
    return sum((w for (i, j), w in zip(pairs, weights) if (i in side) != (j in side)), Fraction(0))


def labelings(n, a, b):
    """All four (side of a, side of b) choices as Python sets."""
    v = set(range(n))
    return [(p, q) for p in (set(a), v - set(a)) for q in (set(b), v - set(b))]


@pytest.fixture
def record_acceptance():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
