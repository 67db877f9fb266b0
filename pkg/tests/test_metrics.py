import numpy as np
import pytest
from hypothesis import given, strategies as st

from bvcalc import braids as br
from bvcalc.diagrams import identity_diagram
from bvcalc.metrics import (
    UPPER_BOUND_CONSTANT,
    check_bounds,
    metrics,
    step_growth,
    xtau_counts,
    xtau_experiment,
)
from bvcalc.words import delta_word, evaluate, parse, synthesize_word

from conftest import finite_words


def test_identity_metrics():
    m = metrics(identity_diagram())
    assert (m.nodes, m.crossings, m.max_pair_crossings) == (0, 0, 0)
    assert m.lower_bound == 0 and m.upper_bound_letters == 0
    assert m.strands == 1


def test_xtau_square_metrics():
    m = metrics(evaluate("x1 t1 x1 t1"))
    assert m.nodes == 5 and m.crossings == 18
    assert m.strands == 6


def test_delta_metrics():
    m = metrics(evaluate(delta_word(3)))
    assert (m.nodes, m.crossings, m.max_pair_crossings) == (3, 6, 1)
    assert m.lower_bound <= 11 <= m.upper_bound_letters


@pytest.mark.parametrize("n,expected", [(1, (5, 18)), (2, (7, 64)), (3, (9, 150)), (4, (11, 288))])
def test_xtau_counts(n, expected):
    assert xtau_counts(n) == expected


def test_xtau_experiment_rows():
    rows = xtau_experiment(4)
    assert [(r.n, r.word_length, r.nodes, r.crossings, r.passed) for r in rows] == [
        (1, 4, 5, 18, True),
        (2, 8, 7, 64, True),
        (3, 12, 9, 150, True),
        (4, 16, 11, 288, True),
    ]
    with pytest.raises(ValueError):
        xtau_experiment(0)


def test_record_keys():
    rec = metrics(evaluate("x0 s1")).record()
    assert list(rec) == [
        "nodes", "strands", "crossings", "max_pair_crossings", "lower_bound",
        "upper_bound_letters", "pair_bound", "permutation", "top_tree", "bottom_tree",
    ]


@pytest.mark.parametrize("N", [1, 2, 5, 9])
def test_tau_power_saturates_pair_bound(N):
    r = check_bounds(parse("t1") * N)
    assert r.max_pair_crossings == N == r.length
    assert r.passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_xtau_bounds_cubic_growth(n):
    r = check_bounds(parse("x1 t1") * (2 * n))
    assert r.length == 4 * n
    assert r.crossings == 2 * n * (n + 2) ** 2
    assert r.crossings <= r.pair_bound <= r.cubic_bound
    assert r.passed


def test_empty_word_bounds():
    r = check_bounds("")
    assert r.passed
    assert (r.length, r.nodes, r.crossings, r.max_pair_crossings, r.upper_bound_letters) == (0, 0, 0, 0, 0)


def test_single_x1_exceeds_twice_length():
    r = check_bounds("x1")
    assert r.nodes == 3
    assert not r.nodes_within_twice_length
    assert r.nodes_within_root_bound


def test_check_bounds_rejects_infinite_letters():
    with pytest.raises(ValueError):
        check_bounds("x2")


@given(finite_words(max_len=14))
def test_metric_invariants(w):
    m = metrics(evaluate(w))
    assert m.crossings <= m.pair_bound
    assert m.lower_bound <= m.upper_bound_letters
    assert m.max_pair_crossings <= m.crossings
    assert (m.max_pair_crossings == 0) == (m.crossings == 0)
    assert m.max_pair_crossings <= len(w)
    assert m.nodes <= 2 * len(w) + 1
    assert m.upper_bound_letters <= UPPER_BOUND_CONSTANT * (m.nodes + m.nodes * m.crossings)
    assert int(np.triu(m.crossing_matrix, 1).sum()) == m.crossings


@given(finite_words(max_len=14))
def test_step_growth(w):
    g = step_growth(w)
    assert g.max_s_growth_braid <= 1
    assert g.max_s_growth_x <= 0
    if len(w) >= 1:
        assert g.first_step_node_growth <= 3
    assert g.max_node_growth <= 3


def test_node_growth_after_first_step_at_most_two():
    w = parse("x1 x1 x1 x1 x0 x1 t1 x1")
    d_prev = evaluate("x1")
    for k in range(2, len(w) + 1):
        d = evaluate(type(w)(w.letters[:k]))
        assert d.carets <= d_prev.carets + 2
        d_prev = d


def test_single_x1_defeats_ceiling_lower_bound():
    # 3 carets at length 1: ceil(n/2) = 2 exceeds the length, floor(n/2) does not
    for w in ("x1", "x1^-1"):
        m = metrics(evaluate(w))
        assert m.nodes == 3 and len(synthesize_word(evaluate(w))) == 1
        assert -(-m.nodes // 2) > 1
        assert m.lower_bound == 1 == m.upper_bound_letters
