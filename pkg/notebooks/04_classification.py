# %% [markdown]
# # Classification and property checks
#
# `classify` computes the defect and then names the structural form.
# `recognize_only` tests a claimed form without looking at the defect.

# %%
from dgroups.classify import classify, recognize_only
from dgroups.deficiency import check_prop_A1, check_prop_A2, check_theorem_GH, theorem_N_branch
from dgroups.families import alternating, c4_frobenius, frobenius_pq, mersenne_frobenius, psl2, symmetric

for G in (frobenius_pq(11, 5), mersenne_frobenius(3), c4_frobenius(5), psl2(7), symmetric(4)):
    v = classify(G)
    print(f"order {G.order:>4}: defect {v.defect}, form {v.label}")

print(recognize_only(alternating(4), "MersenneFrobenius(2,3)"))

# %% [markdown]
# ## Structural checks on a defect-1 group

# %%
A4 = alternating(4)
print("A1 biconditional:", check_prop_A1(A4))
res = check_prop_A2(A4)
print("A2 statements:", res.statements, "prime", res.p)
print("GH shapes:", check_theorem_GH(A4))
print("N branch for F21:", theorem_N_branch(frobenius_pq(7, 3)))
