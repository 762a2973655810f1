"""Instance model for the two-machine routing flow shop.

A problem instance lives on a *reduced* network: a complete digraph whose
vertex 0 is the start-depot, vertices ``1..g`` are the job nodes and vertex
``g + 1`` is the finish-depot.  Arc weights are shortest-path distances of the
source network, so they obey the triangle inequality but need not be
symmetric.

Raw networks (arbitrary digraphs with one depot) are turned into reduced ones
by :func:`build_reduced_network`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

__all__ = [
    "INF",
    "DisconnectedInstanceError",
    "Instance",
    "InstanceError",
    "Job",
    "ParseError",
    "RawNetwork",
    "ReducedNetwork",
    "ValidationError",
    "build_reduced_network",
    "from_raw",
    "generate",
    "metric_closure",
    "parse",
    "serialize",
    "validate",
]

INF = float("inf")


class InstanceError(ValueError):
    """Base class for instance construction failures."""


class DisconnectedInstanceError(InstanceError):
    pass


class ParseError(InstanceError):
    def __init__(self, message: str, position: str | None = None):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


class ValidationError(InstanceError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class RawNetwork:
    node_count: int
    depot: int
    arcs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        if self.node_count < 1:
            raise InstanceError("raw network needs at least one node")
        if not 0 <= self.depot < self.node_count:
            raise InstanceError(f"depot {self.depot} out of range")
        for u, v, w in self.arcs:
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise InstanceError(f"arc ({u}, {v}) references a missing node")
            if w < 0:
                raise InstanceError(f"arc ({u}, {v}) has negative weight {w}")


@dataclass(frozen=True)
class ReducedNetwork:
    g: int
    rho: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(tuple(int(x) for x in row) for row in self.rho))

    @property
    def finish(self) -> int:
        return self.g + 1

    def as_array(self) -> np.ndarray:
        return np.array(self.rho, dtype=np.int64).reshape(len(self.rho), -1)


@dataclass(frozen=True)
class Job:
    id: int
    node: int
    a: int
    b: int


@dataclass(frozen=True)
class Instance:
    network: ReducedNetwork
    jobs: tuple[Job, ...]
    n_per_node: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "jobs", tuple(self.jobs))
        counts = [0] * self.network.g
        for job in self.jobs:
            if 1 <= job.node <= self.network.g:
                counts[job.node - 1] += 1
        object.__setattr__(self, "n_per_node", tuple(counts))

    @property
    def g(self) -> int:
        return self.network.g

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def rho(self) -> tuple[tuple[int, ...], ...]:
        return self.network.rho

    def job(self, job_id: int) -> Job:
        return self._by_id[job_id]

    @property
    def _by_id(self) -> dict[int, Job]:
        # cached lazily; frozen dataclass forbids plain assignment
        try:
            return self.__dict__["_job_index"]
        except KeyError:
            index = {j.id: j for j in self.jobs}
            object.__setattr__(self, "_job_index", index)
            return index

    def jobs_at(self, node: int) -> list[Job]:
        return [j for j in self.jobs if j.node == node]

    def scaled(self, c: int) -> "Instance":
        """Multiply every processing time and distance by ``c``."""
        rho = tuple(tuple(c * x for x in row) for row in self.rho)
        jobs = tuple(Job(j.id, j.node, c * j.a, c * j.b) for j in self.jobs)
        return Instance(ReducedNetwork(self.g, rho), jobs)


def metric_closure(weights: np.ndarray) -> np.ndarray:
    """All-pairs shortest paths by Floyd-Warshall relaxation.

    ``weights`` is a square matrix with ``inf`` for missing arcs.  The diagonal
    is forced to zero.
    """
    dist = np.array(weights, dtype=float)
    np.fill_diagonal(dist, 0.0)
    for k in range(dist.shape[0]):
        np.minimum(dist, dist[:, k : k + 1] + dist[k : k + 1, :], out=dist)
    return dist


def build_reduced_network(raw: RawNetwork, job_nodes: Iterable[int]) -> ReducedNetwork:
    """Reduce ``raw`` to the complete digraph over ``job_nodes`` and two depot copies.

    Job nodes are indexed ``1..g`` in ascending order of their raw index.  If
    the depot itself holds jobs it also appears as a job node, at distance
    zero from both depot copies.
    """
    nodes = sorted(set(job_nodes))
    for v in nodes:
        if not 0 <= v < raw.node_count:
            raise InstanceError(f"job node {v} not in raw network")

    weights = np.full((raw.node_count, raw.node_count), INF)
    for u, v, w in raw.arcs:
        weights[u, v] = min(weights[u, v], w)
    dist = metric_closure(weights)

    order = [raw.depot, *nodes, raw.depot]
    sub = dist[np.ix_(order, order)]
    if not np.isfinite(sub).all():
        bad = [nodes[i - 1] for i in range(1, len(order) - 1) if not np.isfinite(sub[[0, -1], i]).all()
               or not np.isfinite(sub[i, [0, -1]]).all()]
        raise DisconnectedInstanceError(f"disconnected instance: job nodes {bad} and depot are not mutually reachable")
    return ReducedNetwork(len(nodes), sub.astype(np.int64).tolist())


def from_raw(raw: RawNetwork, jobs: Sequence[tuple[int, int, int]]) -> Instance:
    """Build an :class:`Instance` from raw-network jobs ``(raw_node, a, b)``.

    Job ids follow input order.
    """
    job_nodes = sorted({v for v, _, _ in jobs})
    network = build_reduced_network(raw, job_nodes)
    index = {v: i + 1 for i, v in enumerate(job_nodes)}
    return Instance(network, tuple(Job(k, index[v], a, b) for k, (v, a, b) in enumerate(jobs)))


def validate(instance: Instance) -> list[str]:
    """Return every violated invariant of ``instance``; empty means valid."""
    violations = []
    g = instance.g
    rho = instance.rho
    size = g + 2
    if g < 1:
        violations.append(f"g={g}: at least one job node required")
    if len(rho) != size or any(len(row) != size for row in rho):
        violations.append(f"rho must be {size}x{size}")
        shape_ok = False
    else:
        shape_ok = True

    if shape_ok:
        for i in range(size):
            if rho[i][i] != 0:
                violations.append(f"rho[{i}][{i}]={rho[i][i]} must be 0")
            for j in range(size):
                if rho[i][j] < 0:
                    violations.append(f"rho[{i}][{j}]={rho[i][j]} is negative")
        arr = np.array(rho, dtype=np.int64)
        # arr[i, k] > arr[i, j] + arr[j, k]
        via = arr[:, :, None] + arr[None, :, :]
        bad = np.argwhere(arr[:, None, :] > via)
        for i, j, k in bad:
            violations.append(
                f"triangle inequality violated: rho[{i}][{k}]={arr[i, k]} > "
                f"rho[{i}][{j}] + rho[{j}][{k}]={arr[i, j] + arr[j, k]}"
            )

    if not instance.jobs:
        violations.append("instance has no jobs")
    seen = set()
    for job in instance.jobs:
        if job.id in seen:
            violations.append(f"duplicate job id {job.id}")
        seen.add(job.id)
        if not 1 <= job.node <= g:
            violations.append(f"job {job.id}: node index {job.node} outside [1, {g}]")
        if job.a < 0 or job.b < 0:
            violations.append(f"job {job.id}: negative processing time")
    for i, count in enumerate(instance.n_per_node, start=1):
        if count == 0:
            violations.append(f"job node {i} holds no jobs")
    return violations


def generate(seed: int, g: int, n: int, max_time: int, max_dist: int) -> Instance:
    """Random instance with ``g`` job nodes and ``n`` jobs.

    Arc weights of a complete digraph over the depot and job nodes are drawn
    uniformly from ``[0, max_dist]`` and closed under shortest paths.
    Processing times are uniform in ``[0, max_time]``.
    """
    if g < 1 or n < g or max_time < 1 or max_dist < 0:
        raise InstanceError(f"invalid generator parameters g={g} n={n} max_time={max_time} max_dist={max_dist}")
    rng = np.random.default_rng(seed)
    weights = rng.integers(0, max_dist, size=(g + 1, g + 1), endpoint=True)
    arcs = tuple((u, v, int(weights[u, v])) for u in range(g + 1) for v in range(g + 1) if u != v)
    raw = RawNetwork(g + 1, 0, arcs)

    nodes = np.concatenate([np.arange(1, g + 1), rng.integers(1, g, size=n - g, endpoint=True)])
    rng.shuffle(nodes)
    times = rng.integers(0, max_time, size=(n, 2), endpoint=True)
    return from_raw(raw, [(int(v), int(a), int(b)) for v, (a, b) in zip(nodes, times)])


# -- JSON documents ---------------------------------------------------------


def serialize(instance: Instance) -> str:
    doc = {
        "format": "reduced",
        "g": instance.g,
        "rho": [list(row) for row in instance.rho],
        "jobs": [{"node": j.node, "a": j.a, "b": j.b} for j in sorted(instance.jobs, key=lambda j: j.id)],
    }
    return json.dumps(doc)


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected integer, got {value!r}", where)
    return value


def _get(doc: dict, key: str, where: str) -> Any:
    if not isinstance(doc, dict):
        raise ParseError("expected object", where)
    if key not in doc:
        raise ParseError(f"missing key {key!r}", where)
    return doc[key]


def _list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"expected array, got {type(value).__name__}", where)
    return value


def _parse_jobs(doc: dict) -> list[tuple[int, int, int]]:
    jobs = []
    for k, item in enumerate(_list(_get(doc, "jobs", "$"), "$.jobs")):
        where = f"$.jobs[{k}]"
        jobs.append(tuple(_int(_get(item, key, where), f"{where}.{key}") for key in ("node", "a", "b")))
    return jobs


def parse(text: str) -> Instance:
    """Parse a reduced- or raw-form instance document.

    Raises :class:`ParseError` for malformed documents and
    :class:`ValidationError` when the result breaks an instance invariant.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None

    fmt = _get(doc, "format", "$")
    if fmt == "reduced":
        g = _int(_get(doc, "g", "$"), "$.g")
        rows = _list(_get(doc, "rho", "$"), "$.rho")
        rho = [[_int(x, f"$.rho[{i}][{j}]") for j, x in enumerate(_list(row, f"$.rho[{i}]"))]
               for i, row in enumerate(rows)]
        jobs = _parse_jobs(doc)
        instance = Instance(ReducedNetwork(g, rho), tuple(Job(k, v, a, b) for k, (v, a, b) in enumerate(jobs)))
    elif fmt == "raw":
        nodes = _int(_get(doc, "nodes", "$"), "$.nodes")
        depot = _int(_get(doc, "depot", "$"), "$.depot")
        arcs = []
        for k, item in enumerate(_list(_get(doc, "arcs", "$"), "$.arcs")):
            where = f"$.arcs[{k}]"
            arcs.append(tuple(_int(_get(item, key, where), f"{where}.{key}") for key in ("from", "to", "w")))
        jobs = _parse_jobs(doc)
        try:
            raw = RawNetwork(nodes, depot, tuple(arcs))
        except InstanceError as exc:
            raise ValidationError([str(exc)]) from None
        instance = from_raw(raw, jobs)
    else:
        raise ParseError(f"unknown format {fmt!r}", "$.format")

    violations = validate(instance)
    if violations:
        raise ValidationError(violations)
    return instance
