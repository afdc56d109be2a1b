import math
import random

import pytest
from hypothesis import strategies as st

from j3 import J3

coord = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
j3s = st.builds(J3, coord, coord, coord)


def rel_close(x: J3, y: J3, rtol: float, scale: float = 1.0) -> bool:
    d = math.dist(tuple(x), tuple(y))
    return d <= rtol * max(scale, 1e-300)


def rand_j3(rng: random.Random, lo: float = -10.0, hi: float = 10.0) -> J3:
    return J3(rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
