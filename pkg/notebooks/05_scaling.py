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
# # Runtime growth for a fixed number of nodes
#
# With `g` fixed the solver is polynomial in `n` with exponent at most
# `g**2 + 1`.  Wall times and frontier sizes for `g = 2`:

# %%
from routing_flowshop.cli import loglog_slopes, run_bench

rows = run_bench(g=2, ns=[10, 20, 40, 80], seed=0, repeats=3)
print(f"{'n':>4} {'seconds':>9} {'max list':>9} {'candidates':>11}")
for r in rows:
    print(f"{r['n']:>4} {r['seconds']:>9.4f} {r['max_list_size']:>9} {r['candidates']:>11}")

# %%
print("log-log slopes:", [round(s, 2) for s in loglog_slopes(rows)])

# %% [markdown]
# Three nodes, smaller `n`:

# %%
for r in run_bench(g=3, ns=[6, 12, 24], seed=0):
    print(r["n"], round(r["seconds"], 4), r["max_list_size"])
