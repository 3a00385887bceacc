import numpy as np
import pytest

from gl22r.params import make_global
from gl22r.suites import sample_point


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def gp():
    return make_global(0.37 + 0.08j, 1.3 - 0.4j)


@pytest.fixture
def sites(rng, gp):
    return sample_point(rng, 3, gp)[1]


def pytest_terminal_summary(terminalreporter):
    from tests_acceptance_lines import LINES  # populated by test_acceptance

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
