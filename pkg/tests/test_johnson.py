import itertools

import pytest
from hypothesis import given, settings, strategies as st

from routing_flowshop.instance import Job
from routing_flowshop.johnson import (
    BlockStats,
    PriorityVector,
    f2_stats,
    johnson_optimal,
    priority_vector,
    proper_order,
    suffix_block_stats,
)


def critical_path_makespan(seq):
    """F2 makespan as the longest A-prefix + B-suffix path."""
    if not seq:
        return 0
    return max(sum(j.a for j in seq[: k + 1]) + sum(j.b for j in seq[k:]) for k in range(len(seq)))


def jobs_from(pairs, first_id=0):
    return [Job(first_id + k, 1, a, b) for k, (a, b) in enumerate(pairs)]


job_lists = st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), min_size=0, max_size=7).map(jobs_from)


class TestPriorityVector:
    @pytest.mark.parametrize(
        "a, b, job_id, expected",
        [(2, 5, 3, (1, 2, 3)), (4, 1, 7, (2, -1, 7)), (3, 3, 1, (1, 3, 1))],
    )
    def test_examples(self, a, b, job_id, expected):
        assert priority_vector(Job(job_id, 1, a, b)) == PriorityVector(*expected)

    @given(job_lists)
    def test_strict_total_order(self, jobs):
        keys = [priority_vector(j) for j in jobs]
        for x, y in itertools.product(keys, repeat=2):
            assert (x < y) + (y < x) + (x == y) == 1
            if x is not y:
                assert x != y  # distinct ids make every pair comparable
        for x, y, z in itertools.product(keys[:5], repeat=3):
            if x < y and y < z:
                assert x < z


class TestProperOrder:
    def test_example(self):
        jobs = [Job(1, 1, 1, 3), Job(2, 1, 3, 1), Job(3, 1, 2, 2)]
        assert [j.id for j in proper_order(jobs)] == [1, 3, 2]

    def test_single(self):
        job = Job(0, 1, 5, 2)
        assert proper_order([job]) == [job]

    @given(job_lists)
    def test_permutation(self, jobs):
        assert sorted(proper_order(jobs), key=lambda j: j.id) == sorted(jobs, key=lambda j: j.id)


class TestF2Stats:
    def test_example(self):
        assert f2_stats(jobs_from([(1, 3), (2, 2), (3, 1)])) == BlockStats(6, 6, 7, 1)

    def test_empty(self):
        assert f2_stats([]) == BlockStats(0, 0, 0, 0)

    @given(st.integers(0, 20), st.integers(0, 20))
    def test_single_job(self, a, b):
        assert f2_stats([Job(0, 1, a, b)]) == BlockStats(a, b, a + b, a)

    @given(job_lists)
    def test_matches_critical_path(self, jobs):
        assert f2_stats(jobs).cmax == critical_path_makespan(jobs)

    @given(job_lists.filter(bool))
    def test_bounds(self, jobs):
        s = f2_stats(jobs)
        assert s.delta >= 0
        assert max(s.L1, s.L2) <= s.cmax <= s.L1 + s.L2
        assert s.cmax >= s.L1 + min(j.b for j in jobs)
        assert s.cmax >= s.L2 + min(j.a for j in jobs)


class TestJohnsonOptimal:
    def test_two_jobs(self):
        jobs = [Job(0, 1, 2, 1), Job(1, 1, 1, 2)]
        assert [j.id for j in proper_order(jobs)] == [1, 0]
        assert johnson_optimal(jobs).cmax == 4
        assert f2_stats(jobs).cmax == 5

    @given(st.integers(1, 8), st.integers(0, 9))
    def test_identical_jobs(self, n, c):
        assert johnson_optimal(jobs_from([(c, c)] * n)).cmax == (n + 1) * c

    @given(job_lists)
    @settings(max_examples=150, deadline=None)
    def test_exhaustive_optimality(self, jobs):
        best = min(critical_path_makespan(list(p)) for p in itertools.permutations(jobs))
        assert johnson_optimal(jobs).cmax == best


@given(job_lists)
def test_suffix_block_stats(jobs):
    table = suffix_block_stats(jobs)
    for hi in range(len(jobs) + 1):
        for d in range(hi + 1):
            assert table[hi][d] == f2_stats(jobs[hi - d : hi])
