"""Dense schedules for given machine routes, and a schedule validator.

Machine A leaves the start-depot at time 0, machine B at time ``r``; both then
follow their job routes without idling.  Consecutive jobs at the same node are
separated by ``rho[v][v] = 0`` travel, so node blocks need no special casing.
The smallest feasible ``r`` gives the active schedule of the route pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .instance import Instance

__all__ = [
    "RouteError",
    "Schedule",
    "check_feasible",
    "dense_schedule",
    "evaluate_pair",
    "evaluate_permutation",
    "makespan_pair",
    "r_hat",
    "schedule_from_json",
    "schedule_to_json",
]


class RouteError(ValueError):
    pass


@dataclass(frozen=True)
class Schedule:
    route_a: tuple[int, ...]
    route_b: tuple[int, ...]
    r: int
    start_a: dict[int, int]
    start_b: dict[int, int]
    makespan: int

    @property
    def is_permutation(self) -> bool:
        return self.route_a == self.route_b


def _check_route(instance: Instance, route: Sequence[int]) -> None:
    ids = sorted(j.id for j in instance.jobs)
    if sorted(route) != ids:
        raise RouteError(f"route {list(route)} is not a permutation of job ids {ids}")


def _arrivals(instance: Instance, route: Sequence[int], use_a: bool) -> tuple[list[int], int]:
    """Start offsets of each job when the machine departs at 0 and never idles.

    Returns the offsets (in route order) and the total route length including
    the return to the finish-depot.
    """
    rho = instance.rho
    t = 0
    here = 0
    starts = []
    for job_id in route:
        job = instance.job(job_id)
        t += rho[here][job.node]
        starts.append(t)
        t += job.a if use_a else job.b
        here = job.node
    return starts, t + rho[here][instance.g + 1]


def r_hat(instance: Instance, route_a: Sequence[int], route_b: Sequence[int]) -> int:
    """Minimum departure delay of machine B that keeps the dense schedule feasible."""
    _check_route(instance, route_a)
    _check_route(instance, route_b)
    return _r_hat(instance, route_a, route_b)


def _r_hat(instance, route_a, route_b, starts_b=None):
    starts_a, _ = _arrivals(instance, route_a, True)
    if starts_b is None:
        starts_b, _ = _arrivals(instance, route_b, False)
    done_a = {j: s + instance.job(j).a for j, s in zip(route_a, starts_a)}
    return max(0, max(done_a[j] - s for j, s in zip(route_b, starts_b)))


def makespan_pair(instance: Instance, route_a: Sequence[int], route_b: Sequence[int]) -> int:
    """Makespan of the active schedule for ``(route_a, route_b)`` without building it.

    Routes are not validated; this is the inner loop of the exhaustive oracles.
    """
    starts_b, length_b = _arrivals(instance, route_b, False)
    return _r_hat(instance, route_a, route_b, starts_b) + length_b


def dense_schedule(instance: Instance, route_a: Sequence[int], route_b: Sequence[int], r: int) -> Schedule:
    """Dense schedule with B departing at ``r``; infeasible when ``r < r_hat``."""
    _check_route(instance, route_a)
    _check_route(instance, route_b)
    starts_a, _ = _arrivals(instance, route_a, True)
    starts_b, length_b = _arrivals(instance, route_b, False)
    return Schedule(
        route_a=tuple(route_a),
        route_b=tuple(route_b),
        r=r,
        start_a=dict(zip(route_a, starts_a)),
        start_b={j: r + s for j, s in zip(route_b, starts_b)},
        makespan=r + length_b,
    )


def evaluate_pair(instance: Instance, route_a: Sequence[int], route_b: Sequence[int]) -> Schedule:
    return dense_schedule(instance, route_a, route_b, r_hat(instance, route_a, route_b))


def evaluate_permutation(instance: Instance, route: Sequence[int]) -> Schedule:
    return evaluate_pair(instance, route, route)


def check_feasible(instance: Instance, schedule: Schedule) -> list[str]:
    """List every violated schedule invariant; an empty list means feasible."""
    violations = []
    ids = sorted(j.id for j in instance.jobs)
    rho = instance.rho
    finish = instance.g + 1

    for name, route in (("A", schedule.route_a), ("B", schedule.route_b)):
        if sorted(route) != ids:
            violations.append(f"route {name} is not a permutation of all jobs")
    if violations:
        return violations
    if schedule.r < 0:
        violations.append(f"B departs at r={schedule.r} < 0")

    for name, route, starts, depart, attr in (
        ("A", schedule.route_a, schedule.start_a, 0, "a"),
        ("B", schedule.route_b, schedule.start_b, schedule.r, "b"),
    ):
        missing = [j for j in route if j not in starts]
        if missing:
            violations.append(f"machine {name}: no start time for jobs {missing}")
            continue
        here, free = 0, depart
        for j in route:
            job = instance.job(j)
            earliest = free + rho[here][job.node]
            if starts[j] < 0:
                violations.append(f"machine {name}: job {j} starts at negative time {starts[j]}")
            if starts[j] < earliest:
                violations.append(
                    f"machine {name}: job {j} starts at {starts[j]} but travel from node {here} "
                    f"to node {job.node} allows {earliest} at the earliest"
                )
            here, free = job.node, starts[j] + getattr(job, attr)
        busy = sorted((starts[j], starts[j] + getattr(instance.job(j), attr), j) for j in route
                      if getattr(instance.job(j), attr) > 0)
        for (s1, e1, j1), (s2, _, j2) in zip(busy, busy[1:]):
            if s2 < e1:
                violations.append(f"machine {name}: operations of jobs {j1} and {j2} overlap")
        if name == "B":
            arrival = free + rho[here][finish]
            if schedule.makespan != arrival:
                violations.append(f"makespan {schedule.makespan} differs from B's finish-depot arrival {arrival}")

    if not any("no start time" in v for v in violations):
        for job in instance.jobs:
            if schedule.start_b[job.id] < schedule.start_a[job.id] + job.a:
                violations.append(
                    f"job {job.id}: B starts at {schedule.start_b[job.id]} before A completes at "
                    f"{schedule.start_a[job.id] + job.a}"
                )
    return violations


def schedule_to_json(schedule: Schedule) -> str:
    doc = {
        "makespan": schedule.makespan,
        "r": schedule.r,
        "route": list(schedule.route_a),
        "ops": [{"job": j, "startA": schedule.start_a[j], "startB": schedule.start_b[j]}
                for j in schedule.route_a],
    }
    if not schedule.is_permutation:
        doc["routeB"] = list(schedule.route_b)
    return json.dumps(doc)


def schedule_from_json(text: str) -> Schedule:
    doc = json.loads(text)
    try:
        route_a = tuple(doc["route"])
        ops = doc["ops"]
        return Schedule(
            route_a=route_a,
            route_b=tuple(doc.get("routeB", route_a)),
            r=doc["r"],
            start_a={op["job"]: op["startA"] for op in ops},
            start_b={op["job"]: op["startB"] for op in ops},
            makespan=doc["makespan"],
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed schedule document: {exc!r}") from None
