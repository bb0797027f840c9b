"""Brute-force reference computations on raw 0-based image tuples.

Nothing here imports the package: these are the independent side of every
dual-route check in the suite.
"""
from itertools import product


def mul(a, b):
    return tuple(b[i] for i in a)


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def ident(n):
    return tuple(range(n))


def naive_closure(gens, n):
    """Multiply everything by everything until nothing new appears."""
    S = {ident(n), *gens}
    while True:
        new = {mul(a, b) for a in S for b in S} - S
        if not new:
            return S
        S |= new


def order_by_powers(a):
    e = ident(len(a))
    x, k = a, 1
    while x != e:
        x = mul(x, a)
        k += 1
    return k


def naive_classes(G):
    """Partition by all-pairs conjugation."""
    G = list(G)
    left = set(G)
    out = []
    for x in sorted(G):
        if x not in left:
            continue
        cls = {mul(mul(inv(g), x), g) for g in G}
        left -= cls
        out.append(cls)
    return out


def naive_centralizer(G, x):
    return {g for g in G if mul(g, x) == mul(x, g)}


def naive_defect(G):
    """Count classes whose centralizer is larger than the cyclic subgroup of the representative."""
    e = ident(len(next(iter(G))))
    return sum(
        1 for c in naive_classes(G)
        if e not in c and len(naive_centralizer(G, next(iter(c)))) > order_by_powers(next(iter(c)))
    )


def two_generated_subgroups(G):
    """All <a, b>; equals the full subgroup lattice when every subgroup is 2-generated."""
    G = sorted(G)
    n = len(G[0])
    seen = set()
    for a, b in product(G, G):
        if a > b:
            continue
        seen.add(frozenset(naive_closure([a, b], n)))
    return seen


def class_union_normal_subgroups(G):
    """Every union of classes (with the identity class) that is closed under products."""
    classes = naive_classes(G)
    e = ident(len(next(iter(G))))
    idc = next(c for c in classes if e in c)
    rest = [c for c in classes if c is not idc]
    out = set()
    for mask in range(1 << len(rest)):
        S = set(idc)
        for i, c in enumerate(rest):
            if mask >> i & 1:
                S |= c
        if len(G) % len(S):
            continue
        if all(mul(a, b) in S for a in S for b in S):
            out.add(frozenset(S))
    return out
