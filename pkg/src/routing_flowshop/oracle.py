"""Exhaustive reference solvers and empirical checks of the solver's structural basis.

Everything here scores routes only through :func:`schedule.makespan_pair`, so
the oracles share no code with the dynamic program beyond the schedule
evaluator.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import dp
from .instance import Instance
from .johnson import priority_vector
from .schedule import check_feasible, makespan_pair

__all__ = [
    "OracleLimitError",
    "PAIRS_LIMIT",
    "PERMUTATION_LIMIT",
    "brute_force_pairs",
    "brute_force_permutation",
    "has_johnson_local_property",
    "optimal_permutations",
    "verify_dp",
    "verify_theorem1",
    "verify_theorem2",
]

PERMUTATION_LIMIT = 8
PAIRS_LIMIT = 5


class OracleLimitError(ValueError):
    pass


def _require(instance: Instance, limit: int) -> None:
    if instance.n > limit:
        raise OracleLimitError(f"n={instance.n} exceeds oracle limit {limit}")


def has_johnson_local_property(instance: Instance, route: Sequence[int]) -> bool:
    """True iff every node's jobs appear in ``route`` in proper order."""
    last: dict[int, tuple] = {}
    for j in route:
        job = instance.job(j)
        key = priority_vector(job)
        if job.node in last and not last[job.node] < key:
            return False
        last[job.node] = key
    return True


def _best_with_prefix(instance: Instance, first: int, proper_only: bool) -> tuple[int, tuple[int, ...]] | None:
    rest = sorted(j.id for j in instance.jobs if j.id != first)
    best = None
    for tail in itertools.permutations(rest):
        route = (first, *tail)
        if proper_only and not has_johnson_local_property(instance, route):
            continue
        value = makespan_pair(instance, route, route)
        if best is None or value < best[0]:
            best = (value, route)
    return best


def brute_force_permutation(instance: Instance, limit: int = PERMUTATION_LIMIT, proper_only: bool = False,
                            workers: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Minimum permutation-schedule makespan over all ``n!`` job orders.

    Ties go to the lexicographically smallest route.  ``proper_only`` restricts
    the search to routes with the Johnson local property (a faster oracle that
    cannot be used to check that property).  ``workers`` splits the search by
    first route element across processes; the result is unchanged.
    """
    _require(instance, limit)
    firsts = sorted(j.id for j in instance.jobs)
    args = [(instance, f, proper_only) for f in firsts]
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_best_with_prefix, *zip(*args)))
    else:
        parts = [_best_with_prefix(*a) for a in args]
    return min(p for p in parts if p is not None)


def optimal_permutations(instance: Instance, limit: int = PERMUTATION_LIMIT) -> tuple[int, list[tuple[int, ...]]]:
    """Optimal permutation makespan and every route attaining it."""
    _require(instance, limit)
    best, winners = None, []
    for route in itertools.permutations(sorted(j.id for j in instance.jobs)):
        value = makespan_pair(instance, route, route)
        if best is None or value < best:
            best, winners = value, [route]
        elif value == best:
            winners.append(route)
    return best, winners


def brute_force_pairs(instance: Instance, limit: int = PAIRS_LIMIT) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Minimum makespan over all ``(n!)**2`` pairs of machine routes."""
    _require(instance, limit)
    routes = list(itertools.permutations(sorted(j.id for j in instance.jobs)))
    best = None
    for route_a in routes:
        for route_b in routes:
            value = makespan_pair(instance, route_a, route_b)
            if best is None or value < best[0]:
                best = (value, route_a, route_b)
    return best


def verify_theorem1(instance: Instance, limit: int = PAIRS_LIMIT) -> bool:
    """Some optimal schedule is a permutation schedule."""
    return brute_force_pairs(instance, limit)[0] == brute_force_permutation(instance, max(limit, PERMUTATION_LIMIT))[0]


def verify_theorem2(instance: Instance, limit: int = PERMUTATION_LIMIT) -> bool:
    """Some optimal permutation route has the Johnson local property."""
    _, winners = optimal_permutations(instance, limit)
    return any(has_johnson_local_property(instance, r) for r in winners)


def verify_dp(instance: Instance, limit: int = PERMUTATION_LIMIT) -> bool:
    """Solver matches the permutation oracle and its schedule checks out."""
    _require(instance, limit)
    solution = dp.solve(instance)
    expected, _ = brute_force_permutation(instance, limit)
    return (
        solution.makespan == expected
        and not check_feasible(instance, solution.schedule)
        and solution.schedule.makespan == solution.makespan
    )
