"""Two-machine flow shop (F2) without travel: Johnson ordering and block statistics."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .instance import Job

__all__ = [
    "BlockStats",
    "PriorityVector",
    "f2_stats",
    "johnson_optimal",
    "priority_vector",
    "proper_order",
    "suffix_block_stats",
]


class PriorityVector(NamedTuple):
    cls: int
    key: int
    tiebreak: int


class BlockStats(NamedTuple):
    """Workloads and makespan of a job sequence processed A-then-B from time 0."""

    L1: int
    L2: int
    cmax: int
    delta: int


def priority_vector(job: Job) -> PriorityVector:
    if job.a <= job.b:
        return PriorityVector(1, job.a, job.id)
    return PriorityVector(2, -job.b, job.id)


def proper_order(jobs: Sequence[Job]) -> list[Job]:
    """Sort jobs ascending by priority vector (Johnson's rule with id tiebreak)."""
    return sorted(jobs, key=priority_vector)


def f2_stats(sequence: Sequence[Job]) -> BlockStats:
    done_a = done_b = 0
    for job in sequence:
        done_a += job.a
        done_b = max(done_b, done_a) + job.b
    total_b = sum(job.b for job in sequence)
    return BlockStats(done_a, total_b, done_b, done_b - total_b)


def johnson_optimal(jobs: Sequence[Job]) -> BlockStats:
    return f2_stats(proper_order(jobs))


def suffix_block_stats(sequence: Sequence[Job]) -> list[list[BlockStats]]:
    """Stats of every contiguous block of ``sequence``.

    ``table[hi][d]`` describes ``sequence[hi - d:hi]`` for ``1 <= d <= hi``;
    ``table[hi][0]`` is the empty block.  Blocks are grown by prepending jobs,
    using ``cmax(j + S) = a_j + max(b_j + L2(S), cmax(S))``.
    """
    table = []
    for hi in range(len(sequence) + 1):
        row = [BlockStats(0, 0, 0, 0)]
        L1 = L2 = cmax = 0
        for lo in range(hi - 1, -1, -1):
            job = sequence[lo]
            cmax = job.a + max(job.b + L2, cmax)
            L1 += job.a
            L2 += job.b
            row.append(BlockStats(L1, L2, cmax, cmax - L2))
        table.append(row)
    return table
