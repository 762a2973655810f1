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
# # Solving an instance exactly
#
# `solve` runs the dynamic program over configurations `(K, i)`.  For each
# one it keeps the non-dominated pairs of machine completion times.  It
# returns the optimal makespan and a permutation schedule that attains it.

# %%
from routing_flowshop import dp
from routing_flowshop.instance import generate
from routing_flowshop.oracle import brute_force_permutation
from routing_flowshop.schedule import check_feasible, schedule_to_json

instance = generate(seed=12, g=3, n=7, max_time=10, max_dist=10)
solution = dp.solve(instance)
print("makespan:", solution.makespan)
print("route:", solution.route)
print(solution.stats)

# %% [markdown]
# ## Timetable
#
# Machine A leaves the depot at 0.  Machine B leaves at `r`, the smallest
# delay that keeps it from reaching a job before A has finished it.

# %%
s = solution.schedule
print(f"B departs at r = {s.r}")
for j in s.route_a:
    job = instance.job(j)
    print(f"job {j} @ node {job.node}: A [{s.start_a[j]}, {s.start_a[j] + job.a}]  "
          f"B [{s.start_b[j]}, {s.start_b[j] + job.b}]")
assert check_feasible(instance, s) == []

# %% [markdown]
# Cross-check with exhaustive search over all job orders.

# %%
value, route = brute_force_permutation(instance)
print("oracle:", value, route)
assert value == solution.makespan

# %%
print(schedule_to_json(s))

# %% [markdown]
# ## Pareto frontiers
#
# A peek at the frontier of one configuration. `ParetoList.merge` keeps
# F1 strictly increasing and F2 strictly decreasing.

# %%
frontier = dp.ParetoList()
for f1, f2 in [(3, 20), (5, 18), (5, 16), (8, 17), (9, 12)]:
    frontier.begin_scan()
    frontier.merge(dp.ParetoPoint(f1, f2))
print(frontier.pairs())
