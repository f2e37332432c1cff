import numpy as np
import pytest
from hypothesis import strategies as st

from fdpairs.groups import make_group

SMALL_ORDERS = [2, 3, 4, 5, 6, 7, 8, 9, 12, 16]


@st.composite
def groups(draw, bound=256, max_factors=3):
    orders = draw(st.lists(st.sampled_from(SMALL_ORDERS), min_size=1, max_size=max_factors)
                  .filter(lambda o: int(np.prod(o)) <= bound))
    return make_group(orders)


@st.composite
def subsets(draw, G, min_size=1):
    ranks = draw(st.sets(st.integers(0, G.order - 1), min_size=min_size, max_size=G.order))
    return [G.unrank(r) for r in sorted(ranks)]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
