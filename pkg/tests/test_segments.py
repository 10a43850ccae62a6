import random

import pytest

from madcycle.errors import PreconditionError
from madcycle.graph import build_graph
from madcycle.oracles import oracle_segments
from madcycle.segments import (
    find_segments,
    find_segments_partitioned,
    validate_segment_system,
)

from conftest import cycle_graph, path_graph, random_graph


class TestFindSegments:
    def test_path3(self):
        sys_ = find_segments(path_graph(3), {0, 2}, 1, 1)
        assert sys_ is not None and sys_.r == 1 and sys_.p == 1

    def test_path3_no_two_internals(self):
        assert find_segments(path_graph(3), {0, 2}, 1, 2) is None

    def test_c6_duplicate_pair_blocked(self):
        assert find_segments(cycle_graph(6), {0, 3}, 2, 4) is None

    def test_c6_single(self):
        sys_ = find_segments(cycle_graph(6), {0, 3}, 1, 2)
        assert sys_ is not None

    def test_r_gt_p_rejected_immediately(self):
        assert find_segments(cycle_graph(6), {0, 3}, 3, 2) is None

    def test_bad_counts(self):
        with pytest.raises(PreconditionError):
            find_segments(cycle_graph(6), {0, 3}, 0, 1)


class TestFindSegmentsPartitioned:
    def test_ab_segment(self):
        sys_ = find_segments_partitioned(cycle_graph(6), {0, 3}, {0}, {3}, 1, 2, 0, 0)
        assert sys_ is not None and sys_.classification == (0, 0)

    def test_a_segment_two_internals(self):
        sys_ = find_segments_partitioned(
            cycle_graph(6), {0, 3}, {0, 3}, set(), 1, 2, 1, 0
        )
        assert sys_ is not None and sys_.classification == (1, 0)

    def test_a_segment_one_internal_gated(self):
        assert (
            find_segments_partitioned(cycle_graph(6), {0, 3}, {0, 3}, set(), 1, 1, 1, 0)
            is None
        )

    def test_split_exceeds_r(self):
        with pytest.raises(PreconditionError):
            find_segments_partitioned(cycle_graph(6), {0, 3}, {0}, {3}, 1, 2, 1, 1)

    def test_invalid_partition(self):
        with pytest.raises(PreconditionError):
            find_segments_partitioned(cycle_graph(6), {0, 3}, {0}, {0, 3}, 1, 2, 0, 0)


def _combos(max_p=4):
    for p in range(1, max_p + 1):
        for r in range(1, p + 1):
            yield r, p


class TestOracleEquivalence:
    def test_plain_random(self):
        rng = random.Random(3)
        for _ in range(25):
            g = random_graph(rng, rng.randint(4, 10), rng.uniform(0.25, 0.7))
            T = set(rng.sample(range(g.n), rng.randint(2, min(5, g.n))))
            for r, p in _combos():
                got = find_segments(g, T, r, p, seed=9)
                want = oracle_segments(g, T, r, p)
                assert (got is not None) == want, (g.adj, sorted(T), r, p)
                if got is not None:
                    ok, reason = validate_segment_system(g, got, T, expect=(r, p))
                    assert ok, reason

    def test_partitioned_random(self):
        rng = random.Random(5)
        for _ in range(15):
            g = random_graph(rng, rng.randint(4, 10), rng.uniform(0.3, 0.7))
            T = set(rng.sample(range(g.n), rng.randint(2, min(5, g.n))))
            A = {v for v in T if rng.random() < 0.5}
            B = T - A
            for r, p in _combos():
                for s in range(0, r + 1):
                    for t in range(0, r - s + 1):
                        got = find_segments_partitioned(g, T, A, B, r, p, s, t, seed=4)
                        want = oracle_segments(
                            g, T, r, p, partition=(A, B), s=s, t=t
                        )
                        assert (got is not None) == want, (
                            g.adj, sorted(T), sorted(A), r, p, s, t,
                        )
                        if got is not None:
                            ok, reason = validate_segment_system(
                                g, got, T,
                                partition=(A, B),
                                expect=(r, p),
                                expect_st=(s, t),
                                require_a_two_internals=True,
                            )
                            assert ok, reason


class TestTrialIndependence:
    def test_or_of_split_runs(self):
        # existential monotonicity across disjoint seed streams
        g = build_graph(
            [(0, 5), (5, 6), (6, 1), (2, 7), (7, 3), (0, 2), (4, 8), (8, 9)], 10
        )
        T = {0, 1, 2, 3}
        t1, t2 = 7, 9
        full = find_segments(g, T, 2, 3, seed=2, trials=t1 + t2, det_cap=4)
        first = find_segments(g, T, 2, 3, seed=2, trials=t1, det_cap=4)
        second = find_segments(
            g, T, 2, 3, seed=2, trials=t2, trial_offset=t1, det_cap=4
        )
        assert (full is not None) == ((first is not None) or (second is not None))

    def test_color_budget_bound(self):
        # a feasible system spans at most p + 2r vertices
        rng = random.Random(11)
        for _ in range(10):
            g = random_graph(rng, 9, 0.5)
            for r, p in _combos(3):
                got = find_segments(g, {0, 1, 2}, r, p, seed=1)
                if got is not None:
                    span = set()
                    for path in got.paths:
                        span |= set(path.vertices)
                    assert len(span) <= p + 2 * r
