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
# # Checking the structural claims by exhaustive search
#
# The solver only looks at permutation schedules (both machines use the same
# job order) in which each node's jobs follow the proper order.  On small
# instances we can check both restrictions by brute force:
#
# * over all `(n!)**2` pairs of machine routes, the best makespan equals the
#   best permutation makespan;
# * among the optimal permutations, at least one keeps every node's jobs in
#   proper order.

# %%
import random

from routing_flowshop import oracle
from routing_flowshop.instance import generate

rng = random.Random(0)
rows = []
for k in range(12):
    g = rng.randint(1, 3)
    inst = generate(k, g, rng.randint(max(g, 2), 5), 10, 10)
    pairs, _, _ = oracle.brute_force_pairs(inst)
    perm, _ = oracle.brute_force_permutation(inst)
    _, winners = oracle.optimal_permutations(inst)
    proper = sum(oracle.has_johnson_local_property(inst, w) for w in winners)
    rows.append((k, g, inst.n, pairs, perm, len(winners), proper))

print(f"{'k':>2} {'g':>2} {'n':>2} {'pairs':>6} {'perm':>6} {'optima':>7} {'proper':>7}")
for row in rows:
    print("{:>2} {:>2} {:>2} {:>6} {:>6} {:>7} {:>7}".format(*row))
assert all(r[3] == r[4] and r[6] >= 1 for r in rows)

# %% [markdown]
# `verify_dp` compares the solver against the permutation oracle and checks
# the reconstructed schedule.

# %%
print(all(oracle.verify_dp(generate(s, 3, 7, 10, 10)) for s in range(10)))
