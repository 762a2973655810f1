# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Johnson ordering inside a node
#
# Jobs at one node are always processed in proper order: jobs with `a <= b`
# first by increasing `a`, then jobs with `a > b` by decreasing `b`.  Job id
# breaks ties.  For a single node without travel this is Johnson's rule.

# %%
import itertools

from routing_flowshop.instance import Job
from routing_flowshop.johnson import f2_stats, johnson_optimal, priority_vector, proper_order, suffix_block_stats

jobs = [Job(0, 1, 4, 1), Job(1, 1, 1, 3), Job(2, 1, 3, 3), Job(3, 1, 2, 5), Job(4, 1, 6, 2)]
for job in jobs:
    print(job, priority_vector(job))

# %%
ordered = proper_order(jobs)
print([j.id for j in ordered])
print(johnson_optimal(jobs))

# %% [markdown]
# Exhaustive check: no order beats the proper one.

# %%
best = min(f2_stats(p).cmax for p in itertools.permutations(jobs))
print("exhaustive optimum:", best)
assert best == johnson_optimal(jobs).cmax

# %% [markdown]
# ## Block statistics
#
# The solver needs the workloads `L1`, `L2`, the makespan and
# `delta = cmax - L2` of every contiguous block of a node's ordered jobs.
# `suffix_block_stats` builds them all by prepending one job at a time.

# %%
table = suffix_block_stats(ordered)
for d in range(1, 4):
    print(f"last {d} jobs:", table[len(ordered)][d])
