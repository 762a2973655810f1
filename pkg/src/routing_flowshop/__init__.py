"""Exact solver for the two-machine routing flow shop on asymmetric networks."""

from .dp import Solution, solve
from .instance import Instance, Job, RawNetwork, ReducedNetwork, from_raw, generate, parse, serialize, validate
from .johnson import f2_stats, johnson_optimal, priority_vector, proper_order
from .schedule import Schedule, check_feasible, evaluate_pair, evaluate_permutation, r_hat

__version__ = "0.1.0"

__all__ = [
    "Instance",
    "Job",
    "RawNetwork",
    "ReducedNetwork",
    "Schedule",
    "Solution",
    "check_feasible",
    "evaluate_pair",
    "evaluate_permutation",
    "f2_stats",
    "from_raw",
    "generate",
    "johnson_optimal",
    "parse",
    "priority_vector",
    "proper_order",
    "r_hat",
    "serialize",
    "solve",
    "validate",
]
