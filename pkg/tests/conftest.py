import random

import pytest
from hypothesis import settings, strategies as st

from bvcalc import trees as tr
from bvcalc.braids import BraidWord
from bvcalc.words import FINITE_BV, GeneratorWord

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def trees(draw, max_carets=8):
    n = draw(st.integers(0, max_carets))
    t = tr.LEAF
    for _ in range(n):
        t = tr.graft(t, draw(st.integers(1, t.leaves)), tr.CARET)
    return t


@st.composite
def braid_words(draw, min_strands=2, max_strands=6, max_len=12):
    m = draw(st.integers(min_strands, max_strands))
    if m == 1:
        return BraidWord(1)
    letters = draw(
        st.lists(
            st.integers(1, m - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max_len,
        )
    )
    return BraidWord(m, tuple(letters))


@st.composite
def finite_words(draw, max_len=8):
    return GeneratorWord(tuple(draw(st.lists(st.sampled_from(FINITE_BV), max_size=max_len))))


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
