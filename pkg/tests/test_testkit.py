import pytest

from proxsweep import (
    CorpusGenerationError,
    Interval,
    Query,
    brute_force_critical_ranges,
    build_index,
    collapse_run_duplicates,
    compute_wsim,
    generate_corpus,
    tokenize,
)
from conftest import DOC_RUNS


class TestOracle:
    def test_reference_example(self):
        criticals = brute_force_critical_ranges(tokenize(DOC_RUNS), Query(["A", "B", "C"]))
        assert criticals == [Interval(0, 2), Interval(5, 7), Interval(6, 8), Interval(7, 9)]

    def test_singleton(self):
        assert brute_force_critical_ranges(["A"], Query(["A"])) == [Interval(0, 0)]

    def test_absent_keyword(self):
        assert brute_force_critical_ranges(list("AAAA"), Query(["A", "B"])) == []

    def test_empty_document(self):
        assert brute_force_critical_ranges([], Query(["A"])) == []

    def test_sorted_by_start(self):
        criticals = brute_force_critical_ranges(tokenize(DOC_RUNS), Query(["A", "B"]))
        starts = [iv.start for iv in criticals]
        assert starts == sorted(starts)


class TestCollapseRunDuplicates:
    def test_singletons_collapse_to_run_start(self):
        index = build_index(tokenize("BBB"))
        collapsed = collapse_run_duplicates(
            [Interval(0, 0), Interval(1, 1), Interval(2, 2)], index
        )
        assert collapsed == [Interval(0, 0)]

    def test_multi_point_intervals_pass_through(self, runs_index):
        original = [Interval(0, 2), Interval(5, 7)]
        assert collapse_run_duplicates(original, runs_index) == original


class TestGenerateCorpus:
    def test_deterministic(self):
        a = generate_corpus(17, 500, 3, 0.4)
        b = generate_corpus(17, 500, 3, 0.4)
        assert a == b

    def test_different_seeds_differ(self):
        assert generate_corpus(1, 500, 3, 0.4) != generate_corpus(2, 500, 3, 0.4)

    def test_zero_target_has_no_adjacent_repeats(self):
        tokens = generate_corpus(5, 200, 3, 0.0)
        assert all(a != b for a, b in zip(tokens, tokens[1:]))

    def test_hits_tolerance(self):
        tokens = generate_corpus(11, 4000, 3, 0.4)
        wsim = compute_wsim(build_index(tokens))
        assert 0.38 <= wsim <= 0.42

    def test_alphabet_respected(self):
        tokens = generate_corpus(3, 300, 2, 0.1)
        assert set(tokens) <= {"A", "B"}

    def test_letter_distribution_roughly_uniform(self):
        tokens = generate_corpus(23, 3000, 3, 0.2)
        for letter in "ABC":
            frequency = tokens.count(letter) / len(tokens)
            assert abs(frequency - 1 / 3) <= 0.1 / 3

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(seed=1, size=0, alphabet_size=3, wsim_target=0.0),
            dict(seed=1, size=10, alphabet_size=1, wsim_target=0.0),
            dict(seed=1, size=10, alphabet_size=27, wsim_target=0.0),
            dict(seed=1, size=10, wsim_target=0.95, alphabet_size=3),
            dict(seed=1, size=10, wsim_target=-0.1, alphabet_size=3),
        ],
    )
    def test_rejects_invalid_parameters(self, kwargs):
        with pytest.raises(ValueError):
            generate_corpus(**kwargs)

    def test_unreachable_tolerance_errors(self):
        # size 3 admits alpha in {0, 1, 2} only: no value of alpha/3 lands
        # within 0.02 of 0.5
        with pytest.raises(CorpusGenerationError):
            generate_corpus(1, 3, 2, 0.5)
