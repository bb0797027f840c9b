# %% [markdown]
# # Finite fields and group families
#
# GF(2^s) elements are bit vectors in a polynomial basis. Multiplication by
# the generator x is a Singer cycle: one orbit through every non-zero vector.

# %%
from dgroups.fields import GF
from dgroups.families import (
    c4_frobenius,
    dihedral,
    frobenius_pq,
    generalized_quaternion,
    mersenne_frobenius,
    parse_spec,
    psl2,
    singer_cycle,
)

F = GF(8)
x = F.gen
print("x^3 =", x**3, "  x^7 =", x**7)
print("Singer cycle on GF(8):", singer_cycle(F).to_cycles())

# %% [markdown]
# ## Constructions and their orders

# %%
for name, G in [
    ("frobenius_pq(7,3)", frobenius_pq(7, 3)),
    ("c4_frobenius(13)", c4_frobenius(13)),
    ("mersenne_frobenius(3)", mersenne_frobenius(3)),
    ("dihedral(9)", dihedral(9)),
    ("Q16", generalized_quaternion(16)),
    ("PSL(2,8)", psl2(8)),
]:
    print(f"{name:<22} order {G.order:>4} on {G.degree} points")

# %% [markdown]
# ## Text specs
#
# The same families are reachable from a compact string, which the CLI uses.

# %%
spec = parse_spec("gens:(1 2 3 4 5),(1 2)@5")
print(spec, "->", spec.build().order)
print(parse_spec("psl2:7").build().order)
