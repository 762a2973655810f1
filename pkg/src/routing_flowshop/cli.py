"""Command-line front end: ``python -m routing_flowshop <command> ...``.

Exit codes: 0 success, 1 bad input, 2 internal invariant breach, 3 oracle size
limit exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import dp, oracle
from .instance import InstanceError, generate, parse, serialize
from .schedule import check_feasible, schedule_from_json, schedule_to_json

log = logging.getLogger("routing_flowshop")

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_LIMIT, EXIT_VERIFY = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: str
    digest: str | None = None
    result: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    list_stats: dict[str, int] | None = None

    def emit(self, as_json: bool) -> None:
        if as_json:
            print(json.dumps(asdict(self)))
            return
        for key, value in self.result.items():
            print(f"{key}: {value}")
        if self.list_stats:
            print("pareto: " + " ".join(f"{k}={v}" for k, v in self.list_stats.items()))


def digest(instance) -> str:
    return hashlib.sha256(serialize(instance).encode()).hexdigest()[:16]


def _load(path: str):
    return parse(Path(path).read_text(encoding="utf-8"))


def cmd_solve(args) -> int:
    instance = _load(args.file)
    start = time.perf_counter()
    solution = dp.solve(instance, check=True)
    report = RunReport("solve", digest(instance), {"makespan": solution.makespan, "route": list(solution.route)},
                       time.perf_counter() - start, asdict(solution.stats))
    if args.out:
        Path(args.out).write_text(schedule_to_json(solution.schedule) + "\n", encoding="utf-8")
    report.emit(args.json)
    return EXIT_OK


def cmd_check(args) -> int:
    instance = _load(args.file)
    schedule = schedule_from_json(Path(args.schedule).read_text(encoding="utf-8"))
    violations = check_feasible(instance, schedule)
    for v in violations:
        print(v, file=sys.stderr)
    RunReport("check", digest(instance), {"feasible": not violations, "makespan": schedule.makespan}).emit(args.json)
    return EXIT_OK if not violations else EXIT_INPUT


def cmd_oracle(args) -> int:
    instance = _load(args.file)
    start = time.perf_counter()
    if args.mode == "perm":
        value, route = oracle.brute_force_permutation(instance)
        result = {"makespan": value, "route": list(route)}
    else:
        value, route_a, route_b = oracle.brute_force_pairs(instance)
        result = {"makespan": value, "routeA": list(route_a), "routeB": list(route_b)}
    RunReport("oracle", digest(instance), result, time.perf_counter() - start).emit(args.json)
    return EXIT_OK


def _verify_one(index: int, g: int, n: int, seed: int) -> dict[str, Any]:
    instance = generate(seed, g, n, 10, 10)
    row: dict[str, Any] = {"index": index, "g": g, "n": n, "seed": seed}
    row["theorem1"] = oracle.verify_theorem1(instance) if n <= oracle.PAIRS_LIMIT else None
    row["theorem2"] = oracle.verify_theorem2(instance)
    row["dp"] = oracle.verify_dp(instance)
    row["ok"] = all(v is not False for v in (row["theorem1"], row["theorem2"], row["dp"]))
    row["instance"] = serialize(instance)
    return row


def verify_plan(seed: int, count: int, g_range: tuple[int, int], n_range: tuple[int, int]) -> list[tuple[int, int, int, int]]:
    """Deterministic ``(index, g, n, instance_seed)`` tuples for a verification batch."""
    rng = np.random.default_rng(seed)
    plan = []
    for index in range(count):
        g = int(rng.integers(g_range[0], g_range[1], endpoint=True))
        n = int(rng.integers(max(n_range[0], g), max(n_range[1], g), endpoint=True))
        plan.append((index, g, n, int(rng.integers(2**31))))
    return plan


def cmd_verify(args) -> int:
    if args.g_min < 1 or args.g_min > args.g_max or args.n_min > args.n_max or args.count < 0:
        print("invalid verify ranges", file=sys.stderr)
        return EXIT_INPUT
    if max(args.n_max, args.g_max) > oracle.PERMUTATION_LIMIT:
        print(f"n up to {max(args.n_max, args.g_max)} exceeds oracle limit {oracle.PERMUTATION_LIMIT}", file=sys.stderr)
        return EXIT_LIMIT
    plan = verify_plan(args.seed, args.count, (args.g_min, args.g_max), (args.n_min, args.n_max))
    start = time.perf_counter()
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            rows = list(pool.map(_verify_one, *zip(*plan))) if plan else []
    else:
        rows = [_verify_one(*p) for p in plan]
    rows.sort(key=lambda r: r["index"])

    failures = [r for r in rows if not r["ok"]]
    dump_dir = Path(args.dump_dir)
    for row in failures:
        dump_dir.mkdir(parents=True, exist_ok=True)
        path = dump_dir / f"verify-failure-{args.seed}-{row['index']}.json"
        path.write_text(row["instance"] + "\n", encoding="utf-8")
        print(f"instance {row['index']} failed verification; reproducer written to {path}", file=sys.stderr)

    if args.json:
        summary = [{k: v for k, v in r.items() if k != "instance"} for r in rows]
        RunReport("verify", None, {"rows": summary, "failures": len(failures)}, time.perf_counter() - start).emit(True)
    else:
        fmt = "{:>5} {:>2} {:>2} {:>8} {:>8} {:>5}"
        print(fmt.format("index", "g", "n", "theorem1", "theorem2", "dp"))
        mark = {True: "pass", False: "FAIL", None: "-"}
        for r in rows:
            print(fmt.format(r["index"], r["g"], r["n"], mark[r["theorem1"]], mark[r["theorem2"]], mark[r["dp"]]))
        print(f"{len(rows) - len(failures)}/{len(rows)} instances passed")
    return EXIT_OK if not failures else EXIT_VERIFY


def cmd_gen(args) -> int:
    instance = generate(args.seed, args.g, args.n, args.max_time, args.max_dist)
    text = serialize(instance) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def run_bench(g: int, ns: Sequence[int], seed: int, max_time: int = 20, max_dist: int = 20,
              repeats: int = 1) -> list[dict[str, Any]]:
    """Solve one generated instance per ``n`` and record the best-of-``repeats`` wall time."""
    rows = []
    for n in ns:
        instance = generate(seed, g, n, max_time, max_dist)
        times = []
        for _ in range(repeats):
            start = time.perf_counter()
            solution = dp.solve(instance)
            times.append(time.perf_counter() - start)
        rows.append({"n": n, "seconds": min(times), "makespan": solution.makespan, **asdict(solution.stats)})
    return rows


def loglog_slopes(rows: Sequence[dict[str, Any]]) -> list[float]:
    return [math.log(b["seconds"] / a["seconds"]) / math.log(b["n"] / a["n"]) for a, b in zip(rows, rows[1:])]


def cmd_bench(args) -> int:
    ns = [int(x) for x in args.n.split(",") if x.strip()]
    rows = run_bench(args.g, ns, args.seed, args.max_time, args.max_dist, args.repeats)
    if args.json:
        print(json.dumps({"g": args.g, "rows": rows}))
        return EXIT_OK
    print(f"{'n':>5} {'seconds':>10} {'max_list':>8} {'candidates':>10}")
    for r in rows:
        print(f"{r['n']:>5} {r['seconds']:>10.4f} {r['max_list_size']:>8} {r['candidates']:>10}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="routing-flowshop", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance exactly")
    p.add_argument("file")
    p.add_argument("--out", help="write the schedule document here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="validate a schedule document against an instance")
    p.add_argument("file")
    p.add_argument("schedule")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exhaustive search (small instances only)")
    p.add_argument("file")
    p.add_argument("--mode", choices=("perm", "pairs"), default="perm")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="batch-check the solver against the oracles")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--g-min", type=int, default=1)
    p.add_argument("--g-max", type=int, default=3)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--dump-dir", default=".", help="directory for failing-instance reproducers")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-time", type=int, default=10)
    p.add_argument("--max-dist", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the solver on growing instances")
    p.add_argument("--g", type=int, default=2)
    p.add_argument("--n", default="10,20,40", help="comma-separated job counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-time", type=int, default=20)
    p.add_argument("--max-dist", type=int, default=20)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except oracle.OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except dp.DPInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InstanceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
