"""Finite permutation groups held as fully enumerated element lists.

Everything here works by brute force over the element list; that is the
design point for groups of order up to a few thousand. There is no
stabilizer-chain machinery.
"""
from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .perm import Permutation, PermutationError, element_order, identity

__all__ = [
    "Limits",
    "LIMITS",
    "GroupError",
    "CapExceeded",
    "Group",
    "ConjugacyClass",
    "FrobeniusStructure",
    "generate",
    "subgroup",
    "centralizer",
    "normalizer",
    "cyclic_subgroup",
    "conjugacy_classes",
    "center",
    "element_order_profile",
    "sylow_subgroup",
    "derived_subgroup",
    "derived_series",
    "normal_closure",
    "is_normal",
    "is_abelian",
    "is_cyclic",
    "exponent",
    "is_solvable",
    "is_nilpotent",
    "normal_subgroups",
    "is_simple",
    "frobenius_structure",
    "quotient",
    "all_subgroups",
    "is_isomorphic",
    "prime_factors",
    "p_part",
]


@dataclass
class Limits:
    """Engine caps. Mutate ``LIMITS`` (or pass ``cap=``) to override."""

    max_order: int = 250_000
    normal_subgroups: int = 5_000
    all_subgroups: int = 720
    isomorphism: int = 1_000
    quotient: int = 2_000


LIMITS = Limits()


class GroupError(ValueError):
    """Invalid group input: degree mismatch, element not in group, bad prime."""


class CapExceeded(RuntimeError):
    """An operation was asked to work on a group larger than its cap."""


Images = tuple[int, ...]


def _mul(a: Images, b: Images) -> Images:
    return tuple([b[i] for i in a])


def _inv(a: Images) -> Images:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _conj(x: Images, g: Images, ginv: Images) -> Images:
    """g^-1 x g under left-to-right composition."""
    return tuple([g[x[ginv[i]]] for i in range(len(x))])


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


class Group:
    """A permutation group with every element listed.

    ``elements[0]`` is always the identity. Element order is whatever the
    constructor produced; ``generate`` uses breadth-first closure so that
    identical generator lists give identical orderings.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], tuples: Sequence[Images]):
        self.degree = degree
        self.generators = list(generators)
        self._tuples: list[Images] = list(tuples)
        self._index: dict[Images, int] = {t: i for i, t in enumerate(self._tuples)}
        if len(self._index) != len(self._tuples):
            raise GroupError("duplicate elements")
        if self._tuples[0] != tuple(range(degree)):
            raise GroupError("elements[0] must be the identity")

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Images | Permutation],
                      generators: Sequence[Permutation] | None = None) -> Group:
        """Wrap an element set that is already known to be closed."""
        tuples = [e.images if isinstance(e, Permutation) else tuple(e) for e in elements]
        ident = tuple(range(degree))
        tuples.sort(key=lambda t: t != ident)
        if generators is None:
            generators = _small_generating_set(tuples)
        return cls(degree, generators, tuples)

    def __len__(self) -> int:
        return len(self._tuples)

    @property
    def order(self) -> int:
        return len(self._tuples)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        if isinstance(x, Permutation):
            return x.images in self._index
        return tuple(x) in self._index  # type: ignore[arg-type]

    def __repr__(self) -> str:
        gens = ", ".join(g.to_cycles() for g in self.generators)
        return f"<Group order={self.order} degree={self.degree} gens=[{gens}]>"

    @cached_property
    def elements(self) -> list[Permutation]:
        return [Permutation(t, check=False) for t in self._tuples]

    @property
    def element_index(self) -> dict[Images, int]:
        """Map from 0-based image tuple to position in ``elements``."""
        return self._index

    def index(self, x: Permutation | Images) -> int:
        key = x.images if isinstance(x, Permutation) else tuple(x)
        try:
            return self._index[key]
        except KeyError:
            raise GroupError(f"{Permutation(key, check=False).to_cycles()} is not in the group") from None

    def fingerprint(self) -> tuple[Images, ...]:
        return tuple(sorted(self._tuples))

    def same_elements(self, other: Group) -> bool:
        return self.order == other.order and all(t in self._index for t in other._tuples)

    def is_subgroup_of(self, other: Group) -> bool:
        return all(t in other._index for t in self._tuples)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @cached_property
    def _orders(self) -> list[int]:
        return [element_order(Permutation(t, check=False)) for t in self._tuples]

    def element_order_of(self, x: Permutation | Images) -> int:
        return self._orders[self.index(x)]

    @cached_property
    def _gen_tuples(self) -> list[tuple[Images, Images]]:
        return [(g.images, _inv(g.images)) for g in self.generators]

    @cached_property
    def _classes(self) -> list[ConjugacyClass]:
        return _compute_classes(self)

    @cached_property
    def _normal_subgroups(self) -> list[Group]:
        return _compute_normal_subgroups(self)


@dataclass
class ConjugacyClass:
    representative: Permutation
    members: list[int]
    centralizer_order: int
    rep_order: int

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def deficient(self) -> bool:
        """True when the cyclic subgroup of a member is strictly smaller than its centralizer."""
        return self.rep_order > 1 and self.centralizer_order > self.rep_order


@dataclass
class FrobeniusStructure:
    kernel: Group
    complement: Group
    congruence: bool = field(default=False)


# -- construction ------------------------------------------------------------

def _closure(degree: int, gens: Sequence[Images], cap: int, start: Sequence[Images] = ()) -> list[Images]:
    ident = tuple(range(degree))
    elems = [ident]
    seen = {ident}
    for s in start:
        if s not in seen:
            seen.add(s)
            elems.append(s)
    queue = deque(elems)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple([g[i] for i in x])
            if y not in seen:
                seen.add(y)
                elems.append(y)
                if len(elems) > cap:
                    raise CapExceeded(f"group order exceeds cap {cap}")
                queue.append(y)
    return elems


def generate(gens: Sequence[Permutation], degree: int | None = None, cap: int | None = None) -> Group:
    """Enumerate the group generated by ``gens`` by breadth-first closure."""
    if degree is None:
        if not gens:
            degree = 1
        else:
            degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise GroupError(f"generator {g.to_cycles()} has degree {g.degree}, expected {degree}")
    cap = LIMITS.max_order if cap is None else cap
    tuples = _closure(degree, [g.images for g in gens], cap)
    return Group(degree, gens, tuples)


def subgroup(G: Group, gens: Iterable[Permutation | Images]) -> Group:
    """The subgroup of ``G`` generated by ``gens``."""
    perms = []
    for g in gens:
        p = g if isinstance(g, Permutation) else Permutation(g, check=False)
        if p.images not in G._index:
            raise GroupError(f"{p.to_cycles()} is not in the group")
        perms.append(p)
    return generate(perms, degree=G.degree, cap=G.order)


def _subgroup_from_tuples(G: Group, tuples: Iterable[Images]) -> Group:
    return Group.from_elements(G.degree, tuples)


def _small_generating_set(tuples: Sequence[Images]) -> list[Permutation]:
    """Greedy generating set: take elements by decreasing order until they generate."""
    n = len(tuples)
    if n == 1:
        return []
    degree = len(tuples[0])
    ranked = sorted(tuples, key=lambda t: (-element_order(Permutation(t, check=False)), t))
    gens: list[Images] = []
    current = {tuple(range(degree))}
    for t in ranked:
        if t in current:
            continue
        gens.append(t)
        current = set(_closure(degree, gens, n))
        if len(current) == n:
            break
    return [Permutation(g, check=False) for g in gens]


# -- centralizers, classes ---------------------------------------------------

def _require(G: Group, x: Permutation) -> Images:
    if x.degree != G.degree or x.images not in G._index:
        raise GroupError(f"{x.to_cycles()} is not in the group")
    return x.images


def _centralizer_tuples(G: Group, x: Images) -> list[Images]:
    return [g for g in G._tuples if _mul(g, x) == _mul(x, g)]


def centralizer(G: Group, x: Permutation) -> Group:
    """C_G(x), by scanning every element."""
    xi = _require(G, x)
    return _subgroup_from_tuples(G, _centralizer_tuples(G, xi))


def normalizer(G: Group, H: Group) -> Group:
    gens = [g.images for g in H.generators]
    keep = []
    for g in G._tuples:
        gi = _inv(g)
        if all(_conj(h, g, gi) in H._index for h in gens):
            keep.append(g)
    return _subgroup_from_tuples(G, keep)


def cyclic_subgroup(G: Group, x: Permutation) -> Group:
    xi = _require(G, x)
    powers = [tuple(range(G.degree))]
    y = xi
    while y != powers[0]:
        powers.append(y)
        y = _mul(y, xi)
    return Group(G.degree, [x] if len(powers) > 1 else [], powers)


def _compute_classes(G: Group) -> list[ConjugacyClass]:
    gens = G._gen_tuples
    assigned = [False] * G.order
    order_by_key = sorted(range(G.order), key=lambda i: G._tuples[i])
    classes = []
    n = G.order
    for start in order_by_key:
        if assigned[start]:
            continue
        members = [start]
        assigned[start] = True
        queue = deque([G._tuples[start]])
        while queue:
            x = queue.popleft()
            for g, gi in gens:
                y = _conj(x, g, gi)
                j = G._index[y]
                if not assigned[j]:
                    assigned[j] = True
                    members.append(j)
                    queue.append(y)
        members.sort()
        # start is the canonical minimum because we scan in canonical order
        rep = G._tuples[start]
        if n // len(members) * len(members) != n:
            raise AssertionError("class size does not divide the group order")
        classes.append(ConjugacyClass(
            representative=Permutation(rep, check=False),
            members=members,
            centralizer_order=n // len(members),
            rep_order=G._orders[start],
        ))
    return classes


def conjugacy_classes(G: Group, verify: bool = False) -> list[ConjugacyClass]:
    """Classes by orbit expansion under conjugation by the generators.

    Classes come sorted by canonical representative, identity first. With
    ``verify`` each centralizer order is recomputed by a direct scan.
    """
    classes = G._classes
    if verify:
        for c in classes:
            direct = len(_centralizer_tuples(G, c.representative.images))
            if direct != c.centralizer_order:
                raise AssertionError(
                    f"centralizer of {c.representative} has order {direct}, "
                    f"orbit-stabilizer gives {c.centralizer_order}")
    return classes


def center(G: Group) -> Group:
    return _subgroup_from_tuples(G, [G._tuples[c.members[0]] for c in G._classes if c.size == 1])


def element_order_profile(G: Group) -> dict[int, int]:
    return dict(sorted(Counter(G._orders).items()))


def is_abelian(G: Group) -> bool:
    gens = [g.images for g in G.generators]
    return all(_mul(a, b) == _mul(b, a) for a in gens for b in gens)


def exponent(G: Group) -> int:
    return math.lcm(*G._orders) if G._orders else 1


def is_cyclic(G: Group) -> bool:
    return G.order in G._orders


# -- Sylow, derived series, normal subgroups --------------------------------

def _power(x: Images, k: int) -> Images:
    result = tuple(range(len(x)))
    base = x
    while k:
        if k & 1:
            result = _mul(result, base)
        base = _mul(base, base)
        k >>= 1
    return result


def sylow_subgroup(G: Group, p: int) -> Group:
    """A Sylow p-subgroup, grown inside successive normalizers from a cyclic p-subgroup."""
    if p < 2 or prime_factors(p) != [p]:
        raise GroupError(f"{p} is not prime")
    if G.order % p:
        raise GroupError(f"{p} does not divide |G| = {G.order}")
    target = p_part(G.order, p)
    # start from a p-element of largest order
    best = max(
        (i for i, o in enumerate(G._orders) if o > 1 and p_part(o, p) == o),
        key=lambda i: (G._orders[i], [-v for v in G._tuples[i]]),
    )
    H = cyclic_subgroup(G, G.elements[best])
    while H.order < target:
        N = normalizer(G, H)
        step = None
        for y in N._tuples:
            if y not in H._index and _power(y, p) in H._index:
                step = y
                break
        if step is None:
            raise AssertionError("no p-element in N(H)/H; Sylow growth failed")
        H = generate(list(H.generators) + [Permutation(step, check=False)], degree=G.degree, cap=target)
    return H


def normal_closure(G: Group, gens: Iterable[Images | Permutation]) -> Group:
    """Smallest normal subgroup of G containing ``gens``."""
    current = [g.images if isinstance(g, Permutation) else tuple(g) for g in gens]
    elems = set(_closure(G.degree, current, G.order))
    changed = True
    while changed:
        changed = False
        for h in list(current):
            for g, gi in G._gen_tuples:
                c = _conj(h, g, gi)
                if c not in elems:
                    current.append(c)
                    elems = set(_closure(G.degree, current, G.order))
                    changed = True
    return Group.from_elements(G.degree, elems, [Permutation(c, check=False) for c in current])


def derived_subgroup(G: Group) -> Group:
    gens = [(g.images, _inv(g.images)) for g in G.generators]
    comms = []
    for (a, ai), (b, bi) in product(gens, gens):
        c = _mul(_mul(ai, bi), _mul(a, b))
        if c != tuple(range(G.degree)):
            comms.append(c)
    return normal_closure(G, comms)


def derived_series(G: Group) -> list[Group]:
    series = [G]
    while True:
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            return series
        series.append(D)


def is_solvable(G: Group) -> bool:
    return derived_series(G)[-1].order == 1


def is_normal(G: Group, H: Group) -> bool:
    gens = [h.images for h in H.generators]
    return all(_conj(h, g, gi) in H._index for h in gens for g, gi in G._gen_tuples)


def is_nilpotent(G: Group) -> bool:
    """Finite groups: nilpotent iff every Sylow subgroup is normal."""
    for p in prime_factors(G.order):
        if not is_normal(G, sylow_subgroup(G, p)):
            return False
    return True


def _product_set(G: Group, A: Group, B: Group) -> list[Images]:
    out = set()
    for a in A._tuples:
        for b in B._tuples:
            out.add(_mul(a, b))
    return list(out)


def _compute_normal_subgroups(G: Group) -> list[Group]:
    # Every normal subgroup is a product of normal closures of classes, so close
    # the set of class closures under products.
    found: dict[tuple, Group] = {}
    trivial = Group(G.degree, [], [tuple(range(G.degree))])
    found[trivial.fingerprint()] = trivial
    atoms = []
    for c in G._classes[1:]:
        N = normal_closure(G, [c.representative.images])
        key = N.fingerprint()
        if key not in found:
            found[key] = N
            atoms.append(N)
    frontier = list(atoms)
    while frontier:
        new = []
        for A in frontier:
            for B in atoms:
                if B.is_subgroup_of(A) or A.is_subgroup_of(B):
                    continue
                prod = Group.from_elements(G.degree, _product_set(G, A, B), A.generators + B.generators)
                key = prod.fingerprint()
                if key not in found:
                    found[key] = prod
                    new.append(prod)
        frontier = new
    return sorted(found.values(), key=lambda H: (H.order, H.fingerprint()))


def normal_subgroups(G: Group, cap: int | None = None) -> list[Group]:
    """All normal subgroups, smallest first (trivial first, G last)."""
    cap = LIMITS.normal_subgroups if cap is None else cap
    if G.order > cap:
        raise CapExceeded(f"normal_subgroups: |G| = {G.order} exceeds cap {cap}")
    return G._normal_subgroups


def is_simple(G: Group, cap: int | None = None) -> bool:
    """Non-abelian simple (abelian groups of prime order do not count)."""
    if G.order == 1 or is_abelian(G):
        return False
    return len(normal_subgroups(G, cap)) == 2


def _find_complement(G: Group, K: Group) -> Group | None:
    m = G.order // K.order
    ident = tuple(range(G.degree))
    B = [ident]
    Bset = {ident}
    gens: list[Images] = []
    candidates = sorted((t for t in G._tuples if t not in K._index),
                        key=lambda t: (-G._orders[G._index[t]], t))
    for y in candidates:
        if len(B) == m:
            break
        if y in Bset:
            continue
        try:
            C = _closure(G.degree, gens + [y], m)
        except CapExceeded:
            continue
        if any(c in K._index for c in C[1:]):
            continue
        gens.append(y)
        B = C
        Bset = set(C)
    if len(B) != m:
        return None
    return Group(G.degree, [Permutation(g, check=False) for g in gens], B)


def frobenius_structure(G: Group, cap: int | None = None) -> FrobeniusStructure | None:
    """Kernel and complement if G is a Frobenius group, else None.

    The kernel is a proper non-trivial normal subgroup K with C_G(k) inside K
    for every k != 1 in K; a complement is found greedily among subgroups
    meeting K trivially.
    """
    if G.order < 6:
        return None
    normals = normal_subgroups(G, cap)
    for K in normals[1:-1]:
        ok = True
        for c in G._classes[1:]:
            rep = c.representative.images
            if rep not in K._index:
                continue
            if any(z not in K._index for z in _centralizer_tuples(G, rep)):
                ok = False
                break
        if not ok:
            continue
        B = _find_complement(G, K)
        if B is None:
            continue
        return FrobeniusStructure(K, B, congruence=(K.order % B.order == 1))
    return None


def quotient(G: Group, N: Group, cap: int | None = None) -> Group:
    """G/N as the regular permutation action of G on right cosets of N."""
    cap = LIMITS.quotient if cap is None else cap
    if G.order > cap:
        raise CapExceeded(f"quotient: |G| = {G.order} exceeds cap {cap}")
    if G.order % N.order or not is_normal(G, N):
        raise GroupError("quotient needs a normal subgroup")
    coset_of = [-1] * G.order
    reps = []
    for i, x in enumerate(G._tuples):
        if coset_of[i] >= 0:
            continue
        cid = len(reps)
        reps.append(x)
        for n in N._tuples:
            coset_of[G._index[_mul(n, x)]] = cid
    k = len(reps)
    gens = []
    for g, _ in G._gen_tuples:
        img = [coset_of[G._index[_mul(r, g)]] for r in reps]
        gens.append(Permutation(img, check=False))
    return generate(gens, degree=k, cap=k)


# -- subgroup enumeration ----------------------------------------------------

class _Table:
    """Cayley table of G over element indices, for vectorised closures."""

    def __init__(self, G: Group):
        n = G.order
        index = G._index
        tuples = G._tuples
        table = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(tuples):
            table[i] = [index[tuple([b[k] for k in a])] for b in tuples]
        self.table = table
        self.inv = np.argmax(table == 0, axis=1).astype(np.int32)

    def closure(self, gens: Sequence[int], limit: int) -> np.ndarray | None:
        n = self.table.shape[0]
        mask = np.zeros(n, dtype=bool)
        mask[0] = True
        g = np.asarray(gens, dtype=np.int64)
        frontier = np.array([0])
        count = 1
        while frontier.size:
            cand = self.table[np.ix_(frontier, g)].ravel()
            cand = np.unique(cand[~mask[cand]])
            if cand.size == 0:
                break
            mask[cand] = True
            count += cand.size
            if count > limit:
                return None
            frontier = cand
        return np.nonzero(mask)[0]

    def conjugator(self, g: int) -> np.ndarray:
        """Index map x -> g^-1 x g."""
        return self.table[self.table[self.inv[g], :], g]


def all_subgroups(G: Group, cap: int | None = None) -> list[Group]:
    """Every subgroup of G exactly once, ordered by (order, fingerprint).

    Seeds with all cyclic subgroups, then closes H with one more element g
    for each stored class representative H. Each new subgroup is added
    together with its whole conjugacy orbit, and g runs over right coset
    representatives of H only, since <H, hg> = <H, g>.
    """
    cap = LIMITS.all_subgroups if cap is None else cap
    if G.order > cap:
        raise CapExceeded(f"all_subgroups: |G| = {G.order} exceeds cap {cap}")
    T = _Table(G)
    n = G.order
    gen_idx = [G._index[g.images] for g in G.generators]
    conj_maps = [T.conjugator(g) for g in gen_idx]

    found: dict[bytes, tuple[np.ndarray, list[int]]] = {}
    queue: deque[tuple[np.ndarray, list[int]]] = deque()

    def add(members: np.ndarray, gens: list[int]) -> None:
        key = members.astype(np.int32).tobytes()
        if key in found:
            return
        found[key] = (members, gens)
        queue.append((members, gens))
        orbit = deque([(members, gens)])
        while orbit:
            m, gs = orbit.popleft()
            for cm in conj_maps:
                m2 = np.sort(cm[m])
                k2 = m2.astype(np.int32).tobytes()
                if k2 not in found:
                    item = (m2, [int(cm[x]) for x in gs])
                    found[k2] = item
                    orbit.append(item)

    add(np.array([0]), [])
    for x in range(1, n):
        members = T.closure([x], n)
        add(members, [x])
    while queue:
        members, gens = queue.popleft()
        inH = np.zeros(n, dtype=bool)
        inH[members] = True
        covered = inH.copy()
        for g in range(n):
            if covered[g]:
                continue
            # mark the right coset Hg as covered
            covered[T.table[members, g]] = True
            K = T.closure(gens + [g], n)
            add(K, gens + [g])

    groups = []
    for key in sorted(found, key=lambda k: (len(found[k][0]), found[k][0].tolist())):
        members, gens = found[key]
        tuples = [G._tuples[i] for i in members]
        groups.append(Group(G.degree, [Permutation(G._tuples[i], check=False) for i in gens], tuples))
    return groups


# -- isomorphism -------------------------------------------------------------

def _class_signature(G: Group) -> list[tuple[int, int]]:
    return sorted((c.rep_order, c.size) for c in G._classes)


def _element_keys(G: Group) -> list[tuple[int, int]]:
    """(element order, class size) for every element index."""
    keys = [(0, 0)] * G.order
    for c in G._classes:
        for m in c.members:
            keys[m] = (c.rep_order, c.size)
    return keys


def _extends_to_isomorphism(G: Group, H: Group, gens: list[Images], images: list[Images]) -> bool:
    ident_g = tuple(range(G.degree))
    ident_h = tuple(range(H.degree))
    phi = {ident_g: ident_h}
    used = {ident_h}
    queue = deque([ident_g])
    while queue:
        x = queue.popleft()
        fx = phi[x]
        for g, h in zip(gens, images):
            y = _mul(x, g)
            fy = _mul(fx, h)
            got = phi.get(y)
            if got is None:
                if fy in used:
                    return False
                phi[y] = fy
                used.add(fy)
                queue.append(y)
            elif got != fy:
                return False
    return len(phi) == G.order


def is_isomorphic(G: Group, H: Group, cap: int | None = None) -> bool:
    """Backtracking over images of a small generating set of G.

    Candidates for each generator image are the elements of H with the same
    element order and the same conjugacy class size.
    """
    cap = LIMITS.isomorphism if cap is None else cap
    if G.order != H.order:
        return False
    if G.order > cap:
        raise CapExceeded(f"is_isomorphic: order {G.order} exceeds cap {cap}")
    if element_order_profile(G) != element_order_profile(H):
        return False
    if _class_signature(G) != _class_signature(H):
        return False
    if G.order == 1:
        return True
    gens = [g.images for g in _small_generating_set(G._tuples)]
    gkeys = _element_keys(G)
    hkeys = _element_keys(H)
    by_key: dict[tuple[int, int], list[Images]] = {}
    for i, t in enumerate(H._tuples):
        by_key.setdefault(hkeys[i], []).append(t)
    pools = [by_key.get(gkeys[G._index[g]], []) for g in gens]
    for images in product(*pools):
        if _extends_to_isomorphism(G, H, gens, list(images)):
            return True
    return False
