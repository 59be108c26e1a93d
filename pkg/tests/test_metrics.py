import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hbic import biclustering_error, dmax, recovery, relevance, s_match, union_cell_count
from hbic.core import make_bicluster
from hbic.errors import EmptySolution
from hbic.metrics import MetricReport, evaluate, max_assignment, multiset_union_count

from oracles import cells, dmax_brute, relevance_ref


def sol(*pairs):
    return [make_bicluster(r, c) for r, c in pairs]


SMALL = sol(([0, 1], [0, 1]))
WIDER = sol(([0, 1, 2], [0, 1]))


def test_s_match_examples():
    assert s_match(SMALL, SMALL, "rows") == s_match(SMALL, SMALL, "cols") == 1.0
    assert s_match(SMALL, WIDER, "rows") == pytest.approx(2 / 3)
    assert s_match(SMALL, WIDER, "cols") == 1.0
    assert s_match(SMALL, sol(([5, 6], [0])), "rows") == 0.0


def test_relevance_examples():
    assert relevance(SMALL, SMALL) == 1.0
    assert relevance(SMALL, WIDER) == pytest.approx(math.sqrt(2 / 3))
    assert relevance(SMALL, sol(([4], [4]))) == 0.0


def test_recovery_ignores_spurious_extras():
    truth = sol(([0, 1], [0, 1]), ([4, 5], [3, 4]))
    found = truth + sol(([7, 8, 9], [0, 5]), ([2], [2]))
    assert recovery(found, truth) == 1.0
    assert relevance(found, truth) < 1.0


def test_union_examples():
    assert union_cell_count(SMALL, SMALL) == 4
    assert union_cell_count(SMALL, WIDER) == 6
    assert union_cell_count(SMALL, sol(([5, 6], [5, 6]))) == 8


def test_dmax_examples():
    assert dmax(WIDER, WIDER) == 6
    assert dmax(SMALL, sol(([5], [5]))) == 0


def test_dmax_not_greedy():
    assert max_assignment([[5, 4], [4, 0]]) == 8


def test_dmax_not_greedy_on_solutions():
    # single-row biclusters whose overlap matrix is [[5, 4], [4, 0]]
    a = sol(([0], range(0, 9)), ([0], range(9, 13)))
    b = sol(([0], [0, 1, 2, 3, 4, 9, 10, 11, 12]), ([0], range(5, 9)))
    assert [[len(cells(x.key) & cells(y.key)) for y in b] for x in a] == [[5, 4], [4, 0]]
    assert dmax(a, b) == 8


def test_biclustering_error_examples():
    assert biclustering_error(WIDER, WIDER) == 1.0
    assert biclustering_error(SMALL, WIDER) == pytest.approx(4 / 6)
    assert biclustering_error(SMALL, sol(([5], [5]))) == 0.0


@pytest.mark.parametrize("fn", [relevance, recovery, biclustering_error, dmax])
def test_empty_solution(fn):
    with pytest.raises(EmptySolution):
        fn([], SMALL)


def test_report_format():
    assert MetricReport(1.0, 2 / 3, 0.5).to_json() == \
        '{"relevance": 1.000000, "recovery": 0.666667, "biclustering_error": 0.500000}'


@st.composite
def solutions(draw, dim=12, max_k=5):
    k = draw(st.integers(1, max_k))
    out = {}
    for _ in range(k):
        rows = draw(st.sets(st.integers(0, dim - 1), min_size=1, max_size=dim))
        cols = draw(st.sets(st.integers(0, dim - 1), min_size=1, max_size=dim))
        b = make_bicluster(rows, cols)
        out[b.key] = b
    return list(out.values())


@settings(max_examples=150, deadline=None)
@given(solutions(), solutions())
def test_against_reference(a, b):
    ka, kb = [x.key for x in a], [y.key for y in b]
    assert relevance(a, b) == pytest.approx(relevance_ref(ka, kb), abs=1e-12)
    assert dmax(a, b) == dmax_brute(ka, kb)
    cell_union = set().union(*(cells(x) for x in ka + kb))
    assert union_cell_count(a, b, "hashed") == union_cell_count(a, b, "bitset") == len(cell_union)


@settings(max_examples=150, deadline=None)
@given(solutions(), solutions())
def test_metric_properties(a, b):
    rep = evaluate(a, b)
    for v in (rep.relevance, rep.recovery, rep.biclustering_error):
        assert 0.0 <= v <= 1.0
    assert recovery(a, b) == relevance(b, a)
    assert biclustering_error(a, b) == biclustering_error(b, a)
    assert evaluate(a, a) == MetricReport(1.0, 1.0, 1.0)


@settings(max_examples=100, deadline=None)
@given(solutions(), solutions(), st.data())
def test_duplicate_region_never_lowers_recovery(a, truth, data):
    src = data.draw(st.sampled_from(a))
    rows = data.draw(st.sets(st.sampled_from(src.rows), min_size=1))
    cols = data.draw(st.sets(st.sampled_from(src.cols), min_size=1))
    extra = make_bicluster(rows, cols)
    if extra.key in {x.key for x in a}:
        return
    assert recovery(a + [extra], truth) >= recovery(a, truth)


def test_multiset_union_matches_set_union_when_disjoint():
    a = sol(([0, 1], [0, 1]), ([2, 3], [2, 3]))
    b = sol(([1, 2], [1, 2]))
    assert multiset_union_count(a, b) == union_cell_count(a, b)


def test_bitset_path_on_large_input():
    rng = random.Random(5)
    a = [make_bicluster(rng.sample(range(900), 300), rng.sample(range(400), 200))
         for _ in range(3)]
    assert union_cell_count(a, a[:1]) == union_cell_count(a, a[:1], "hashed")
