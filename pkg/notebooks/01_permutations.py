# %% [markdown]
# # Permutations and groups
#
# Permutations compose left to right: `a * b` applies `a` first.
# Cycle notation is 1-based on the outside and canonical on the way back out.

# %%
from dgroups import generate, parse_cycles
from dgroups.group import centralizer, conjugacy_classes, normal_subgroups, sylow_subgroup

a = parse_cycles("(1 2 3)", 4)
b = parse_cycles("(3 4)", 4)
print("a*b =", (a * b).to_cycles())
print("b*a =", (b * a).to_cycles())
print("order of a*b:", (a * b).order())

# %% [markdown]
# ## Generating S_4 and reading off its classes

# %%
S4 = generate([parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)])
print("|S4| =", S4.order)
for c in conjugacy_classes(S4):
    print(f"{c.representative.to_cycles():<12} size {c.size:>2}  |C| {c.centralizer_order:>2}")

# %%
x = parse_cycles("(1 2)(3 4)", 4)
print("|C_S4((1 2)(3 4))| =", centralizer(S4, x).order)
print("Sylow orders:", {p: sylow_subgroup(S4, p).order for p in (2, 3)})
print("normal subgroup orders:", [N.order for N in normal_subgroups(S4)])
