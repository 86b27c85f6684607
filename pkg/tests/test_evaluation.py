"""Sensitivity / PPV / accuracy metrics against hand and brute-force oracles."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualnet.evaluation import (
    accuracy,
    contingency_table,
    evaluate,
    ppv,
    sensitivity,
)


def brute_force_contingency(known, extracted):
    """Oracle: count shared members by explicit membership tests."""
    return tuple(
        tuple(sum(1 for node in k if node in e) for e in extracted)
        for k in known
    )


class TestSensitivity:
    def test_identical_sets_give_one(self):
        communities = [{"a", "b"}, {"c", "d", "e"}]
        per, value = sensitivity(communities, communities)
        assert per == (1.0, 1.0)
        assert value == 1.0

    def test_disjoint_gives_zero(self):
        per, value = sensitivity([{"a", "b"}], [{"x", "y"}])
        assert per == (0.0,)
        assert value == 0.0

    def test_partial_coverage(self):
        per, value = sensitivity([{"a", "b", "c", "d"}], [{"a", "b"}, {"c"}])
        assert per == (0.5,)
        assert value == 0.5

    def test_empty_known_rejected(self):
        with pytest.raises(ValueError):
            sensitivity([], [{"a"}])
        with pytest.raises(ValueError):
            sensitivity([set()], [{"a"}])


class TestPpv:
    def test_identical_sets_give_one(self):
        communities = [{"a", "b"}, {"c", "d"}]
        per, value = ppv(communities, communities)
        assert per == (1.0, 1.0)
        assert value == 1.0

    def test_straddling_two_equal_halves(self):
        per, value = ppv([{"a", "b"}, {"c", "d"}], [{"a", "b", "c", "d"}])
        assert per == (0.5,)
        assert value == 0.5

    def test_unknown_nodes_give_zero_column(self):
        per, value = ppv([{"a", "b"}], [{"x", "y"}])
        assert per == (0.0,)
        assert value == 0.0

    def test_empty_extracted_rejected(self):
        with pytest.raises(ValueError):
            ppv([{"a"}], [])


class TestAccuracy:
    def test_perfect(self):
        assert accuracy(1.0, 1.0) == 1.0

    def test_reported_benchmark_values(self):
        assert accuracy(0.78, 0.70) == pytest.approx(0.739, abs=5e-4)
        assert accuracy(0.68, 0.68) == pytest.approx(0.68, abs=1e-12)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            accuracy(1.2, 0.5)
        with pytest.raises(ValueError):
            accuracy(0.5, -0.1)


def random_community_sets(rng, universe_size=20):
    universe = [f"u{i}" for i in range(universe_size)]
    def draw():
        count = rng.randint(1, 5)
        return [
            set(rng.sample(universe, rng.randint(1, 8))) for _ in range(count)
        ]
    return draw(), draw()


class TestEvaluate:
    def test_identical_collections_score_exactly_one(self):
        communities = [{"a", "b", "c"}, {"d", "e"}]
        report = evaluate(communities, communities)
        assert (report.sn, report.ppv, report.acc) == (1.0, 1.0, 1.0)

    def test_acc_is_geometric_mean(self):
        rng = random.Random(4)
        for _ in range(50):
            known, extracted = random_community_sets(rng)
            report = evaluate(known, extracted)
            assert report.acc == pytest.approx(
                math.sqrt(report.sn * report.ppv), abs=1e-9
            )

    def test_contingency_matches_brute_force(self):
        rng = random.Random(6)
        for _ in range(30):
            known, extracted = random_community_sets(rng)
            report = evaluate(known, extracted)
            assert report.contingency == brute_force_contingency(known, extracted)

    def test_row_sums_bounded_by_known_sizes(self):
        rng = random.Random(8)
        for _ in range(30):
            known, extracted = random_community_sets(rng)
            report = evaluate(known, extracted)
            for row, k in zip(report.contingency, known):
                # each entry is bounded by the known community size even when
                # extracted communities overlap
                assert max(row) <= len(k)

    def test_row_sums_bounded_for_disjoint_extractions(self):
        # toolkit extractions are disjoint partitions: then a known
        # community's whole row sums to at most its size
        rng = random.Random(12)
        universe = [f"u{i}" for i in range(24)]
        for _ in range(25):
            known = [
                set(rng.sample(universe, rng.randint(1, 9)))
                for _ in range(rng.randint(1, 4))
            ]
            shuffled = rng.sample(universe, len(universe))
            cut_points = sorted(rng.sample(range(1, len(universe)), 3))
            extracted = [
                set(shuffled[a:b])
                for a, b in zip([0, *cut_points], [*cut_points, len(universe)])
                if shuffled[a:b]
            ]
            report = evaluate(known, extracted)
            for row, k in zip(report.contingency, known):
                assert sum(row) <= len(k)

    def test_vector_lengths(self):
        known = [{"a"}, {"b"}, {"c"}]
        extracted = [{"a", "b"}]
        report = evaluate(known, extracted)
        assert len(report.per_known_sn) == 3
        assert len(report.per_extracted_ppv) == 1


communities_strategy = st.lists(
    st.sets(st.integers(min_value=0, max_value=15), min_size=1, max_size=8).map(
        lambda s: {f"u{i}" for i in s}
    ),
    min_size=1,
    max_size=5,
)


@given(communities_strategy, communities_strategy)
@settings(max_examples=60, deadline=None)
def test_metric_identities_hold_for_arbitrary_inputs(known, extracted):
    report = evaluate(known, extracted)
    assert 0.0 <= report.sn <= 1.0
    assert 0.0 <= report.ppv <= 1.0
    assert report.acc == pytest.approx(math.sqrt(report.sn * report.ppv), abs=1e-9)
    assert contingency_table(known, extracted) == brute_force_contingency(
        known, extracted
    )
