import random

import pytest
from hypothesis import settings, strategies as st

from seqcong.enumeration import random_partition

settings.register_profile("default", max_examples=300, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, max_size=200):
    """Uniformly random partition of a size drawn from 0..max_size."""
    n = draw(st.integers(0, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_partition(n, random.Random(seed))


@pytest.fixture
def rng():
    return random.Random(20261016)


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
