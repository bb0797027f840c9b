# %% [markdown]
# # Deficient classes and the defect
#
# A non-trivial element x is deficient when its centralizer is strictly
# larger than the cyclic group it generates. The defect counts deficient
# conjugacy classes.

# %%
from dgroups import defect
from dgroups.families import alternating, cyclic, generalized_quaternion, psl2, symmetric

for name, G in [("C6", cyclic(6)), ("C9", cyclic(9)), ("S4", symmetric(4)),
                ("Q8", generalized_quaternion(8)), ("A5", alternating(5)), ("PSL(2,9)", psl2(9))]:
    rep = defect(G)
    orders = sorted(rep.deficient_orders)
    print(f"{name:<9} defect {rep.defect}  deficient element orders {orders}")

# %% [markdown]
# ## Which class is deficient in A_5
#
# Only the involutions: their centralizer is a Klein four-group.

# %%
rep = defect(alternating(5))
for c in rep.deficient_classes:
    print(c.representative.to_cycles(), "order", c.rep_order, "centralizer", c.centralizer_order)
