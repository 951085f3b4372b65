import itertools
import random

import pytest
from hypothesis import strategies as st

from ofa import StringTuple, parse_tuple
from ofa.verify import ALPHABET

WORKED = "aaa\nbbc\naab\nacb\n"

_criteria = []


@pytest.fixture
def worked():
    return parse_tuple(WORKED)


@pytest.fixture
def criterion():
    """Call ``criterion(number, text, passed)`` to report an acceptance line."""
    def report(number, text, passed):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}"
        _criteria.append(line)
        print(line)
        assert passed, line
    return report


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in _criteria:
            terminalreporter.write_line(line)


@st.composite
def string_tuples(draw, max_n=8, max_m=5, max_alphabet=3):
    """Adjacent-distinct tuples; each string is drawn from all strings except its predecessor."""
    m = draw(st.integers(1, max_m))
    size = draw(st.integers(2, max_alphabet))
    pool = ["".join(p) for p in itertools.product(ALPHABET[:size], repeat=m)]
    n = draw(st.integers(1, max_n))
    strings = [draw(st.sampled_from(pool))]
    while len(strings) < n:
        strings.append(draw(st.sampled_from([s for s in pool if s != strings[-1]])))
    return StringTuple(tuple(strings))


def seeded_tuples(count, max_n, max_m, alphabets=(2, 3), seed=0):
    from ofa.verify import random_tuple
    out = []
    for r in range(count):
        rng = random.Random(seed + r)
        n, m = rng.randint(1, max_n), rng.randint(1, max_m)
        out.append(random_tuple(rng, n, m, rng.choice(alphabets)))
    return out
