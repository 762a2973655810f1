"""Exact dynamic program over Pareto frontiers of machine completion times.

The search is restricted to permutation schedules in which each node's jobs
are processed in Johnson (proper) order.  A partial schedule is summarised by
its configuration ``(K, i)``: ``K[v - 1]`` jobs of node ``v`` are done and the
last block was processed at node ``i``.  For each configuration we keep every
non-dominated pair ``(F1, F2)`` of A- and B-completion times, sorted by
``F1`` ascending (hence ``F2`` descending).

Configurations are filled in order of ``sum(K)``; a configuration is reached
from a pre-configuration ``(K', i')`` by processing a block of ``d`` jobs at
node ``i``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .instance import INF, Instance
from .johnson import BlockStats, proper_order, suffix_block_stats
from .schedule import Schedule, check_feasible, evaluate_permutation

__all__ = [
    "ConfigKey",
    "DPInvariantError",
    "ParetoList",
    "ParetoPoint",
    "Solution",
    "SolveStats",
    "enumerate_configs",
    "extend",
    "pre_configs",
    "scan",
    "solve",
]

log = logging.getLogger(__name__)

ConfigKey = tuple[tuple[int, ...], int]


class DPInvariantError(RuntimeError):
    """Raised when the solver's own consistency checks fail."""


@dataclass(slots=True)
class ParetoPoint:
    F1: int
    F2: float
    # (pre-configuration key, source point, block size)
    back: Optional[tuple[ConfigKey, "ParetoPoint", int]] = field(default=None, repr=False, compare=False)

    @property
    def delta(self) -> float:
        return self.F2 - self.F1


class ParetoList:
    """Frontier of one configuration with the resumable control-element merge.

    A fresh list holds only the dummy point ``(0, inf)``.  Call
    :meth:`begin_scan` before feeding the candidates derived from one
    pre-configuration; within a scan candidates must arrive with
    non-decreasing ``F1``.
    """

    def __init__(self, points: Sequence[ParetoPoint] | None = None):
        self.points: list[ParetoPoint] = list(points) if points is not None else [ParetoPoint(0, INF)]
        self.control = 0
        self.inserted = 0
        self.removed = 0

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, k):
        return self.points[k]

    def pairs(self) -> list[tuple[int, float]]:
        return [(p.F1, p.F2) for p in self.points]

    def begin_scan(self) -> None:
        self.control = 0

    def merge(self, candidate: ParetoPoint) -> bool:
        """Offer ``candidate``; return whether it was inserted."""
        pts = self.points
        c = self.control
        f1 = candidate.F1
        while c + 1 < len(pts) and pts[c + 1].F1 <= f1:
            c += 1
        self.control = c
        control = pts[c]
        f2 = candidate.F2
        if control.F2 <= f2:
            return False
        start = c if control.F1 == f1 else c + 1
        end = c + 1
        while end < len(pts) and pts[end].F2 >= f2:
            end += 1
        pts[start:end] = [candidate]
        self.removed += end - start
        self.inserted += 1
        self.control = start
        return True

    def check_invariants(self) -> None:
        pts = self.points
        if not pts or pts[0].F1 != 0:
            raise DPInvariantError(f"first frontier point must have F1 = 0: {self.pairs()}")
        for p, q in zip(pts, pts[1:]):
            if not (p.F1 < q.F1 and p.F2 > q.F2):
                raise DPInvariantError(f"frontier not strictly monotone at {p} -> {q}")


def extend(point: ParetoPoint, travel: int, stats: BlockStats) -> tuple[ParetoPoint, bool]:
    """Append a block after ``point``.  Returns the new point and whether it is type (b).

    Type (a): B is held up by its own previous finish.  Type (b): B waits for A
    inside the block, so later (larger ``F1``) source points cannot help.
    """
    f1 = point.F1 + travel
    if point.F2 - point.F1 >= stats.delta:
        return ParetoPoint(f1 + stats.L1, point.F2 + travel + stats.L2), False
    return ParetoPoint(f1 + stats.L1, f1 + stats.cmax), True


def scan(target: ParetoList, source: ParetoList, travel: int, stats: BlockStats,
         back_key: ConfigKey | None = None, d: int = 0) -> int:
    """Extend every real point of ``source`` into ``target``; return candidates generated."""
    target.begin_scan()
    generated = 0
    for point in source.points:
        if point.F2 == INF:
            continue
        candidate, type_b = extend(point, travel, stats)
        candidate.back = (back_key, point, d)
        generated += 1
        target.merge(candidate)
        if type_b:
            break
    return generated


def enumerate_configs(n_per_node: Sequence[int]) -> Iterator[ConfigKey]:
    """Basic configurations grouped by ``sum(K)``, lexicographic within a group."""
    by_norm: dict[int, list[tuple[int, ...]]] = {}
    for K in itertools.product(*(range(n + 1) for n in n_per_node)):
        by_norm.setdefault(sum(K), []).append(K)
    for norm in range(1, sum(n_per_node) + 1):
        for K in by_norm.get(norm, ()):
            for i, k in enumerate(K, start=1):
                if k > 0:
                    yield K, i


def pre_configs(key: ConfigKey, d: int) -> list[ConfigKey]:
    K, i = key
    if not 1 <= d <= K[i - 1]:
        raise ValueError(f"block size {d} outside [1, {K[i - 1]}] for configuration {key}")
    prev = K[: i - 1] + (K[i - 1] - d,) + K[i:]
    if not any(prev):
        return [(prev, 0)]
    return [(prev, j) for j, k in enumerate(prev, start=1) if k > 0 and j != i]


@dataclass
class SolveStats:
    configurations: int = 0
    candidates: int = 0
    inserted: int = 0
    removed: int = 0
    max_list_size: int = 0


@dataclass
class Solution:
    makespan: int
    schedule: Schedule
    stats: SolveStats

    @property
    def route(self) -> tuple[int, ...]:
        return self.schedule.route_a


def solve(instance: Instance, check: bool = False) -> Solution:
    """Optimal makespan and a permutation schedule attaining it.

    With ``check=True`` every frontier is validated after each merge.
    """
    if instance.n == 0:
        raise ValueError("instance has no jobs")
    g = instance.g
    rho = instance.rho
    N = tuple(instance.n_per_node)
    order = {v: proper_order(instance.jobs_at(v)) for v in range(1, g + 1)}
    blocks = {v: suffix_block_stats(order[v]) for v in order}

    initial: ConfigKey = ((0,) * g, 0)
    frontier: dict[ConfigKey, ParetoList] = {initial: ParetoList([ParetoPoint(0, 0)])}
    stats = SolveStats()

    for key in enumerate_configs(N):
        K, i = key
        target = ParetoList()
        for d in range(1, K[i - 1] + 1):
            block = blocks[i][K[i - 1]][d]
            for pre in pre_configs(key, d):
                stats.candidates += scan(target, frontier[pre], rho[pre[1]][i], block, pre, d)
                if check:
                    target.check_invariants()
        frontier[key] = target
        stats.configurations += 1
        stats.inserted += target.inserted
        stats.removed += target.removed
        stats.max_list_size = max(stats.max_list_size, len(target))

    best = None
    for i in range(1, g + 1):
        last = frontier[(N, i)].points[-1]
        value = last.F2 + rho[i][g + 1]
        if best is None or value < best[0]:
            best = (value, (N, i), last)
    makespan, key, point = best
    if makespan == INF:
        raise DPInvariantError("final configuration unreachable")

    route = _reconstruct(key, point, order)
    schedule = evaluate_permutation(instance, route)
    if schedule.makespan != makespan:
        raise DPInvariantError(f"reconstructed makespan {schedule.makespan} != frontier value {makespan}")
    if check:
        violations = check_feasible(instance, schedule)
        if violations:
            raise DPInvariantError("; ".join(violations))
    log.debug("solved n=%d g=%d: makespan=%d %s", instance.n, g, makespan, stats)
    return Solution(int(makespan), schedule, stats)


def _reconstruct(key: ConfigKey, point: ParetoPoint, order) -> list[int]:
    blocks = []
    while point.back is not None:
        pre, parent, d = point.back
        K, i = key
        hi = K[i - 1]
        blocks.append([job.id for job in order[i][hi - d : hi]])
        key, point = pre, parent
    return [j for block in reversed(blocks) for j in block]
