import random

import pytest
from hypothesis import given, settings, strategies as st

from proxsweep import (
    Interval,
    Query,
    brute_force_critical_ranges,
    build_index,
    is_candidate,
    plane_sweep,
    tokenize,
)


def intervals(result):
    return [(iv.start, iv.end) for iv in result.criticals]


class TestQuery:
    def test_defaults(self):
        q = Query(["A", "B"])
        assert q.freqs == (1, 1)
        assert q.threshold == 2
        assert q.size == 2

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(keywords=[]),
            dict(keywords=["A", "A"]),
            dict(keywords=["A"], freqs=[0]),
            dict(keywords=["A"], freqs=[1, 1]),
            dict(keywords=["A", "B"], threshold=0),
            dict(keywords=["A", "B"], threshold=3),
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            Query(**kwargs)


class TestIsCandidate:
    def test_reference_window(self, runs_index):
        q = Query(["A", "B", "C"])
        assert is_candidate(Interval(0, 2), runs_index, q) is True
        assert is_candidate(Interval(0, 1), runs_index, q) is False

    def test_frequency_requirement(self, runs_index):
        q = Query(["B"], freqs=[3])
        assert is_candidate(Interval(9, 11), runs_index, q) is True
        assert is_candidate(Interval(9, 10), runs_index, q) is False

    def test_threshold_below_query_size(self, runs_index):
        q = Query(["A", "C", "Z"], threshold=2)
        assert is_candidate(Interval(0, 1), runs_index, q) is True

    def test_out_of_bounds(self, runs_index):
        with pytest.raises(ValueError):
            is_candidate(Interval(0, 99), runs_index, Query(["A"]))


class TestPlaneSweep:
    def test_reference_example(self, runs_index):
        result = plane_sweep(runs_index, Query(["A", "B", "C"]))
        assert intervals(result) == [(0, 2), (5, 7), (6, 8), (7, 9)]
        assert (result.minimal.start, result.minimal.end) == (0, 2)
        assert result.stats.ranges_emitted == 4

    def test_single_keyword_one_critical_per_occurrence(self, runs_index):
        result = plane_sweep(runs_index, Query(["A"]))
        assert intervals(result) == [(1, 1), (3, 3), (5, 5), (8, 8)]

    def test_absent_keyword_empty_result(self, runs_index):
        result = plane_sweep(runs_index, Query(["A", "Z"]))
        assert result.criticals == []
        assert result.minimal is None
        assert result.stats.comparisons == 0

    def test_generalized_frequency(self, runs_index):
        result = plane_sweep(runs_index, Query(["B"], freqs=[3]))
        assert (result.minimal.start, result.minimal.end) == (9, 11)
        assert result.minimal.size == 3

    def test_threshold_relaxation(self):
        index = build_index(tokenize("AB"))
        result = plane_sweep(index, Query(["A", "B", "C"], threshold=2))
        assert intervals(result) == [(0, 1)]

    def test_minimal_tie_breaks_on_start(self, runs_index):
        # four size-3 criticals; the earliest one wins
        result = plane_sweep(runs_index, Query(["A", "B", "C"]))
        sizes = {iv.size for iv in result.criticals}
        assert sizes == {3}
        assert result.minimal == Interval(0, 2)

    def test_stats_identity(self, runs_index):
        stats = plane_sweep(runs_index, Query(["A", "B", "C"])).stats
        assert stats.gamma == 0
        assert stats.cn == stats.beta - stats.gamma == stats.comparisons


@st.composite
def sweep_instances(draw):
    letters = "ABCDE"
    tokens = draw(st.lists(st.sampled_from(letters), max_size=40))
    kq = draw(st.integers(1, 4))
    keywords = draw(st.permutations(letters))[:kq]
    freqs = draw(st.lists(st.integers(1, 2), min_size=kq, max_size=kq))
    threshold = draw(st.integers(1, kq))
    return tokens, Query(keywords, freqs=freqs, threshold=threshold)


@given(sweep_instances())
@settings(max_examples=200)
def test_matches_brute_force_oracle(instance):
    tokens, query = instance
    result = plane_sweep(build_index(tokens), query)
    assert result.criticals == brute_force_critical_ranges(tokens, query)


@given(sweep_instances())
@settings(max_examples=150)
def test_criticals_pairwise_non_nested(instance):
    tokens, query = instance
    criticals = plane_sweep(build_index(tokens), query).criticals
    for a in criticals:
        for b in criticals:
            if a != b:
                assert not (a.start <= b.start and b.end <= a.end)


@given(sweep_instances())
@settings(max_examples=150)
def test_criticality_margins(instance):
    # shrinking either endpoint past the boundary occurrence breaks candidacy
    tokens, query = instance
    index = build_index(tokens)
    for iv in plane_sweep(index, query).criticals:
        assert is_candidate(iv, index, query)
        if iv.start + 1 <= iv.end:
            assert not is_candidate(Interval(iv.start + 1, iv.end), index, query)
            assert not is_candidate(Interval(iv.start, iv.end - 1), index, query)


def test_comparison_count_linear_bound():
    # each merged occurrence is touched at most twice, so <= 2 * n * k'
    rng = random.Random(7)
    for n in (50, 100, 200, 400):
        tokens = [rng.choice("ABC") for _ in range(n)]
        query = Query(["A", "B", "C"])
        stats = plane_sweep(build_index(tokens), query).stats
        assert stats.comparisons <= 2 * n * query.size
