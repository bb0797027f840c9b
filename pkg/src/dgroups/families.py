"""Explicit permutation realisations of the group families used by the classifier.

Frobenius groups act on their kernels, PSL(2, q) on the projective line and
the generalized quaternion groups on 2^t points, so degrees stay small.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .fields import GF, FiniteField
from .group import Group, GroupError, generate, is_normal, prime_factors
from .perm import Permutation, PermutationError, identity, parse_cycles

__all__ = [
    "FamilyError",
    "cyclic",
    "dihedral",
    "elementary_abelian",
    "generalized_quaternion",
    "frobenius_pq",
    "mersenne_frobenius",
    "c4_frobenius",
    "alternating",
    "symmetric",
    "psl2",
    "semidirect",
    "direct_product",
    "affine_map",
    "multiplicative_order_element",
    "singer_cycle",
    "GroupSpec",
    "parse_spec",
    "FAMILIES",
]


class FamilyError(ValueError):
    """Family parameters violate the family's preconditions."""


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def _perm(f: Callable[[int], int], n: int) -> Permutation:
    return Permutation([f(i) for i in range(n)])


def _check_order(G: Group, expected: int, name: str) -> Group:
    if G.order != expected:
        raise AssertionError(f"{name}: built order {G.order}, expected {expected}")
    return G


def cyclic(n: int) -> Group:
    if n < 1:
        raise FamilyError("cyclic(n) needs n >= 1")
    if n == 1:
        return generate([], degree=1)
    return _check_order(generate([_perm(lambda i: (i + 1) % n, n)]), n, f"cyclic({n})")


def dihedral(m: int) -> Group:
    """Dihedral group of order 2m acting on the m vertices of a polygon."""
    if m < 3:
        raise FamilyError("dihedral(m) needs m >= 3")
    rot = _perm(lambda i: (i + 1) % m, m)
    ref = _perm(lambda i: (-i) % m, m)
    return _check_order(generate([rot, ref]), 2 * m, f"dihedral({m})")


def elementary_abelian(p: int, s: int) -> Group:
    """E_{p^s} as s disjoint p-cycles on p*s points."""
    if not _is_prime(p):
        raise FamilyError(f"{p} is not prime")
    if s < 1:
        raise FamilyError("elementary_abelian needs s >= 1")
    n = p * s
    gens = []
    for b in range(s):
        lo = b * p
        gens.append(_perm(lambda i, lo=lo: lo + (i - lo + 1) % p if lo <= i < lo + p else i, n))
    return _check_order(generate(gens), p**s, f"elementary_abelian({p},{s})")


def generalized_quaternion(order: int) -> Group:
    """Q_{2^t} acting on itself by right multiplication.

    Points (i, e) stand for a^i b^e, numbered i + e*N with N = 2^(t-1).
    Right multiplication by a is a on the first block and a^-1 on the second;
    right multiplication by b swaps the blocks, adding N/2 on the way back.
    """
    t = order.bit_length() - 1
    if order < 8 or 1 << t != order:
        raise FamilyError("generalized_quaternion needs order 2^t with t >= 3")
    N = order // 2
    a = _perm(lambda x: (x + 1) % N if x < N else N + (x - N - 1) % N, order)
    b = _perm(lambda x: x + N if x < N else (x - N + N // 2) % N, order)
    return _check_order(generate([a, b]), order, f"generalized_quaternion({order})")


def multiplicative_order_element(p: int, q: int) -> int:
    """Smallest g in 2..p-1 with multiplicative order exactly q modulo p."""
    for g in range(2, p):
        k, x = 1, g
        while x != 1:
            x = x * g % p
            k += 1
        if k == q:
            return g
    raise FamilyError(f"no element of order {q} modulo {p}")


def affine_map(a: int, b: int, p: int) -> Permutation:
    """x -> a*x + b on Z/p."""
    return _perm(lambda x: (a * x + b) % p, p)


def semidirect(kernel_gens: Sequence[Permutation], automorphism: Permutation,
               complement_order: int, kernel_order: int | None = None) -> Group:
    """<A, t> for a kernel A given by point permutations and a normalizing t.

    Raises FamilyError unless the closure has order |A| * complement_order.
    """
    A = generate(list(kernel_gens), degree=automorphism.degree)
    if kernel_order is not None and A.order != kernel_order:
        raise FamilyError(f"kernel has order {A.order}, expected {kernel_order}")
    tinv = ~automorphism
    for k in kernel_gens:
        if (tinv * k * automorphism) not in A:
            raise FamilyError("automorphism does not normalize the kernel")
    G = generate(list(kernel_gens) + [automorphism])
    if G.order != A.order * complement_order:
        raise FamilyError(
            f"closure has order {G.order}, expected {A.order} * {complement_order}")
    return G


def frobenius_pq(p: int, q: int) -> Group:
    """C_p x| C_q on Z/p: translation and multiplication by an element of order q."""
    if not (_is_prime(p) and _is_prime(q)) or p == q:
        raise FamilyError("frobenius_pq needs distinct primes p, q")
    if (p - 1) % q:
        raise FamilyError(f"{q} does not divide {p} - 1")
    g = multiplicative_order_element(p, q)
    return semidirect([affine_map(1, 1, p)], affine_map(g, 0, p), q, kernel_order=p)


def c4_frobenius(q: int) -> Group:
    """C_q x| C_4 on Z/q for a prime q = 1 mod 4."""
    if not _is_prime(q) or q % 4 != 1:
        raise FamilyError(f"c4_frobenius needs a prime q = 1 mod 4, got {q}")
    g = multiplicative_order_element(q, 4)
    return semidirect([affine_map(1, 1, q)], affine_map(g, 0, q), 4, kernel_order=q)


def singer_cycle(F: FiniteField) -> Permutation:
    """Multiplication by x on GF(2^s) = GF(2)^s, points numbered by coefficient bits.

    This is the companion matrix of the field modulus acting on coordinates.
    """
    n = F.q
    x = F.gen
    return Permutation([int(F.element(v) * x) for v in range(n)])


def mersenne_frobenius(s: int) -> Group:
    """E_{2^s} x| C_{2^s - 1} acting on GF(2)^s; needs 2^s - 1 prime."""
    if s < 2 or not _is_prime(2**s - 1):
        raise FamilyError(f"mersenne_frobenius({s}): 2^{s} - 1 is not prime")
    F = GF(2**s)
    n, q = F.q, F.q - 1
    translations = [_perm(lambda v, w=1 << i: v ^ w, n) for i in range(s)]
    c = singer_cycle(F)
    # regular on the non-zero vectors: one orbit of length q, no fixed points but 0
    orbit = [1]
    while True:
        nxt = c.images[orbit[-1]]
        if nxt == 1:
            break
        orbit.append(nxt)
    if sorted(orbit) != list(range(1, n)) or c.images[0] != 0:
        raise AssertionError("Singer cycle is not regular on non-zero vectors")
    return semidirect(translations, c, q, kernel_order=n)


def alternating(n: int) -> Group:
    if not 1 <= n <= 10:
        raise FamilyError("alternating(n) needs 1 <= n <= 10")
    if n < 3:
        return generate([], degree=n)
    three = parse_cycles("(1 2 3)", n)
    if n == 3:
        return generate([three])
    if n % 2:
        long = Permutation([(i + 1) % n for i in range(n)])
    else:
        long = Permutation([0] + [1 + i % (n - 1) for i in range(1, n)])
    return _check_order(generate([three, long]), math.factorial(n) // 2, f"alternating({n})")


def symmetric(n: int) -> Group:
    if not 1 <= n <= 10:
        raise FamilyError("symmetric(n) needs 1 <= n <= 10")
    if n == 1:
        return generate([], degree=1)
    gens = [Permutation([(i + 1) % n for i in range(n)])]
    if n > 2:
        gens.append(parse_cycles("(1 2)", n))
    return _check_order(generate(gens), math.factorial(n), f"symmetric({n})")


PSL2_SUPPORTED = (5, 7, 8, 9, 17)


def _mobius(F: FiniteField, a, b, c, d) -> Permutation:
    """z -> (a z + b) / (c z + d) on GF(q) plus infinity (point q)."""
    q = F.q
    inf = q
    images = []
    for n in range(q + 1):
        if n == inf:
            images.append(inf if c.is_zero() else int(a / c))
            continue
        z = F.element(n)
        num = a * z + b
        den = c * z + d
        images.append(inf if den.is_zero() else int(num / den))
    return Permutation(images)


def psl2(q: int) -> Group:
    """PSL(2, q) on the q + 1 points of the projective line."""
    if q not in PSL2_SUPPORTED:
        raise FamilyError(f"psl2 supports q in {PSL2_SUPPORTED}, got {q}")
    F = GF(q)
    one, zero = F.one, F.zero
    a = F.primitive_element
    scale = a * a if q % 2 else a
    gens = [
        _mobius(F, one, one, zero, one),
        _mobius(F, scale, zero, zero, one),
        _mobius(F, zero, -one, one, zero),
    ]
    d = math.gcd(2, q - 1)
    return _check_order(generate(gens), q * (q * q - 1) // d, f"psl2({q})")


def direct_product(G: Group, H: Group) -> Group:
    """G x H on disjoint point sets."""
    n, m = G.degree, H.degree
    gens = [Permutation(list(g.images) + [n + i for i in range(m)]) for g in G.generators]
    gens += [Permutation(list(range(n)) + [n + i for i in h.images]) for h in H.generators]
    return _check_order(generate(gens, degree=n + m), G.order * H.order, "direct_product")


# -- textual group descriptions ----------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: tuple[int, ...] = ()
    generators: str | None = None
    degree: int | None = None

    def __str__(self) -> str:
        if self.family == "raw_generators":
            return f"gens:{self.generators}@{self.degree}"
        tag = next(k for k, v in FAMILIES.items() if v[0] == self.family)
        return f"{tag}:" + ",".join(map(str, self.params))

    def build(self) -> Group:
        if self.family == "raw_generators":
            assert self.generators is not None and self.degree is not None
            gens = [parse_cycles(t, self.degree) for t in _split_generators(self.generators)]
            return generate(gens, degree=self.degree)
        _, builder, _ = FAMILIES[_TAG_OF[self.family]]
        return builder(*self.params)


FAMILIES: dict[str, tuple[str, Callable[..., Group], int]] = {
    "cyclic": ("cyclic", cyclic, 1),
    "dihedral": ("dihedral", dihedral, 1),
    "genq": ("generalized_quaternion", generalized_quaternion, 1),
    "elab": ("elementary_abelian", elementary_abelian, 2),
    "frobenius": ("frobenius_pq", frobenius_pq, 2),
    "mersenne": ("mersenne_frobenius", mersenne_frobenius, 1),
    "c4frob": ("c4_frobenius", c4_frobenius, 1),
    "alt": ("alternating", alternating, 1),
    "sym": ("symmetric", symmetric, 1),
    "psl2": ("psl2", psl2, 1),
}
_TAG_OF = {v[0]: k for k, v in FAMILIES.items()}


class SpecError(ValueError):
    """Unparseable group description; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _split_generators(text: str) -> list[str]:
    # commas between ")" and "(" separate generators; commas inside cycles are points
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]


def parse_spec(text: str) -> GroupSpec:
    """Parse e.g. ``"psl2:7"`` or ``"gens:(1 2 3)(4 5),(1 2)@5"``."""
    tag, sep, rest = text.partition(":")
    tag = tag.strip()
    if not sep:
        raise SpecError("expected '<family>:<parameters>'", len(text))
    start = len(text) - len(rest)
    if tag == "gens":
        body, at, deg = rest.rpartition("@")
        if not at:
            raise SpecError("generator list needs '@<degree>'", len(text))
        if not deg.strip().isdigit() or int(deg) < 1:
            raise SpecError(f"bad degree {deg.strip()!r}", start + len(body) + 1)
        degree = int(deg)
        for piece in _split_generators(body):
            try:
                parse_cycles(piece, degree)
            except PermutationError as exc:
                raise SpecError(str(exc), start + body.find(piece)) from None
        return GroupSpec("raw_generators", (), body.strip(), degree)
    if tag not in FAMILIES:
        raise SpecError(f"unknown family {tag!r}; known: gens, " + ", ".join(FAMILIES), 0)
    family, builder, arity = FAMILIES[tag]
    params = []
    pos = start
    for piece in rest.split(","):
        stripped = piece.strip()
        if not re.fullmatch(r"\d+", stripped):
            raise SpecError(f"expected a non-negative integer, got {stripped!r}", pos)
        params.append(int(stripped))
        pos += len(piece) + 1
    if len(params) != arity:
        raise SpecError(f"{tag} takes {arity} parameter(s), got {len(params)}", start)
    spec = GroupSpec(family, tuple(params))
    _validate(spec, start)
    return spec


def _validate(spec: GroupSpec, pos: int) -> None:
    p = spec.params
    ok = True
    if spec.family == "cyclic":
        ok = p[0] >= 1
    elif spec.family == "dihedral":
        ok = p[0] >= 3
    elif spec.family == "generalized_quaternion":
        ok = p[0] >= 8 and p[0] & (p[0] - 1) == 0
    elif spec.family == "elementary_abelian":
        ok = _is_prime(p[0]) and p[1] >= 1
    elif spec.family == "frobenius_pq":
        ok = _is_prime(p[0]) and _is_prime(p[1]) and p[0] != p[1] and (p[0] - 1) % p[1] == 0
    elif spec.family == "mersenne_frobenius":
        ok = p[0] >= 2 and _is_prime(2 ** p[0] - 1)
    elif spec.family == "c4_frobenius":
        ok = _is_prime(p[0]) and p[0] % 4 == 1
    elif spec.family in ("alternating", "symmetric"):
        ok = 1 <= p[0] <= 10
    elif spec.family == "psl2":
        ok = p[0] in PSL2_SUPPORTED
    if not ok:
        raise SpecError(f"parameters {p} violate the preconditions of {spec.family}", pos)
