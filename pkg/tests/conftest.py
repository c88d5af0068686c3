import math
from functools import reduce

import pytest
from hypothesis import settings, strategies as st

from numsemi import enumerate_by_genus, from_generators

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def generator_lists(draw, max_gen=18, max_len=5):
    gens = draw(st.lists(st.integers(2, max_gen), min_size=1, max_size=max_len, unique=True))
    if reduce(math.gcd, gens) != 1:
        gens.append(draw(st.sampled_from([p for p in (3, 5, 7, 11, 13) if reduce(math.gcd, gens + [p]) == 1] or [1])))
    return sorted(gens)


@st.composite
def semigroups(draw, **kw):
    s = from_generators(draw(generator_lists(**kw)))
    if s.genus == 0:
        s = from_generators([2, 3])
    return s


@pytest.fixture(scope="session")
def genus7():
    return [s for s in enumerate_by_genus(7) if s.genus >= 1]


@pytest.fixture(scope="session")
def genus10():
    return [s for s in enumerate_by_genus(10) if s.genus >= 1]


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
