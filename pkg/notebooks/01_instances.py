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
# # Instances and the reduced network
#
# A raw instance is a directed network with a depot.  Jobs sit at nodes.
# The solver works on a reduced complete digraph: the start-depot (index 0),
# the job nodes `1..g`, and the finish-depot (`g + 1`).  Arc weights are
# shortest-path distances, so they satisfy the triangle inequality.
# They may still be asymmetric.

# %%
from routing_flowshop.instance import RawNetwork, from_raw, generate, parse, serialize, validate

# %%
raw = RawNetwork(
    node_count=4,
    depot=0,
    arcs=((0, 1, 1), (1, 2, 1), (0, 2, 10), (2, 0, 1), (2, 1, 9), (2, 3, 4), (3, 0, 2)),
)
instance = from_raw(raw, [(1, 3, 5), (2, 4, 1), (2, 2, 2), (3, 1, 6)])
print(instance.network.as_array())

# %% [markdown]
# The direct arc 0 -> 2 of weight 10 was replaced by the path through node 1.

# %%
print("violations:", validate(instance))
print("jobs per node:", instance.n_per_node)

# %% [markdown]
# ## Round trip through the JSON document

# %%
text = serialize(instance)
print(text)
assert parse(text) == instance

# %% [markdown]
# ## Seeded random instances

# %%
rand = generate(seed=1, g=3, n=8, max_time=10, max_dist=10)
rho = rand.network.as_array()
print(rho)
print("asymmetric pairs:", int((rho != rho.T).sum() // 2))
assert not validate(rand)
