"""Deficient elements, the defect of a group, and the structural property suites.

An element x != 1 is deficient when <x> is strictly smaller than C_G(x).
The defect of G is the number of deficient non-trivial conjugacy classes.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .group import (
    CapExceeded,
    ConjugacyClass,
    Group,
    GroupError,
    LIMITS,
    _centralizer_tuples,
    center,
    conjugacy_classes,
    derived_series,
    element_order_profile,
    exponent,
    frobenius_structure,
    is_abelian,
    is_cyclic,
    is_nilpotent,
    is_normal,
    is_simple,
    is_solvable,
    normal_subgroups,
    p_part,
    prime_factors,
    quotient,
    sylow_subgroup,
)
from .perm import Permutation

__all__ = [
    "PreconditionError",
    "DeficiencyReport",
    "A2Result",
    "is_deficient",
    "defect",
    "is_cp_group",
    "check_prop_A1",
    "check_prop_A2",
    "check_theorem_N",
    "theorem_N_branch",
    "check_theorem_GH",
    "theorem_GH_cases",
    "greatest_normal_p_subgroup",
]


class PreconditionError(ValueError):
    """A property check was asked about a group outside its hypothesis."""


@dataclass
class DeficiencyReport:
    group_order: int
    defect: int
    deficient_classes: list[ConjugacyClass]
    nondeficient_classes: list[ConjugacyClass]
    is_CP: bool
    order_profile: dict[int, int]

    @property
    def deficient_orders(self) -> set[int]:
        return {c.rep_order for c in self.deficient_classes}


def is_deficient(G: Group, x: Permutation) -> bool:
    """|C_G(x)| > |x|, computed by a direct centralizer scan."""
    i = G.index(x)
    if i == 0:
        raise GroupError("deficiency is defined for non-identity elements only")
    return len(_centralizer_tuples(G, x.images)) > G._orders[i]


def _is_prime_power(n: int) -> bool:
    return len(prime_factors(n)) == 1


def is_cp_group(G: Group) -> bool:
    return all(_is_prime_power(o) for o in G._orders[1:])


def defect(G: Group) -> DeficiencyReport:
    classes = conjugacy_classes(G)[1:]
    bad = [c for c in classes if c.deficient]
    good = [c for c in classes if not c.deficient]
    return DeficiencyReport(
        group_order=G.order,
        defect=len(bad),
        deficient_classes=bad,
        nondeficient_classes=good,
        is_CP=is_cp_group(G),
        order_profile=element_order_profile(G),
    )


def _all_prime_order(G: Group) -> bool:
    return all(prime_factors(o) == [o] for o in G._orders[1:])


def check_prop_A1(G: Group) -> bool:
    """Defect 0 iff (all non-trivial elements have prime order and all Sylows have prime order).

    Both sides are computed independently; False means the engine disagrees
    with the biconditional.
    """
    lhs = defect(G).defect == 0
    sylow_orders = [sylow_subgroup(G, p).order for p in prime_factors(G.order)]
    rhs = _all_prime_order(G) and all(prime_factors(n) == [n] for n in sylow_orders)
    return lhs == rhs


@dataclass
class A2Result:
    p: int | None
    sylow_order: int | None
    statements: dict[int, bool | None] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Every applicable statement holds (None marks a vacuous one)."""
        return all(v is not False for v in self.statements.values())


def _is_elementary_abelian(H: Group, p: int) -> bool:
    return is_abelian(H) and all(o in (1, p) for o in H._orders)


def check_prop_A2(G: Group) -> A2Result:
    """Evaluate the eight structural statements every defect-1 group satisfies."""
    rep = defect(G)
    if rep.defect != 1:
        raise PreconditionError(f"check_prop_A2 needs defect 1, got {rep.defect}")
    st: dict[int, bool | None] = {}

    def prime_or_square(o: int) -> bool:
        ps = prime_factors(o)
        return len(ps) == 1 and o in (ps[0], ps[0] ** 2)

    st[1] = all(prime_or_square(o) for o in G._orders[1:])

    primes = prime_factors(G.order)
    big = [p for p in primes if p_part(G.order, p) >= p * p]
    sylows = {p: sylow_subgroup(G, p) for p in primes}
    result = A2Result(p=None, sylow_order=None, statements=st)
    if len(big) != 1:
        # no tie-break exists: report rather than choose
        result.notes.append(f"primes with |Sylow| >= p^2: {big}")
        for k in range(2, 9):
            st[k] = False
        return result
    p = big[0]
    P = sylows[p]
    result.p, result.sylow_order = p, P.order
    expP = exponent(P)
    st[2] = all(sylows[q].order == q for q in primes if q != p) and expP in (p, p * p)

    order_p = {i for i, o in enumerate(G._orders) if o == p}
    st[3] = any(order_p <= set(c.members) for c in conjugacy_classes(G))

    ZP = center(P)
    if expP == p * p:
        st[4] = (P.order == p * p and is_cyclic(P)) or (ZP.order == p and P.order >= p**3)
    else:
        st[4] = None
    if P.order >= p**3:
        st[5] = (expP == p or (expP == p * p and ZP.order == p)) and _is_elementary_abelian(ZP, p)
    else:
        st[5] = None
    st[6] = is_solvable(G) if p > 2 else None
    st[7] = center(G).order == 1 if G.order > P.order else None

    proper_normal = [(r, S) for r, S in sylows.items() if 1 < S.order < G.order and is_normal(G, S)]
    if proper_normal:
        fs = frobenius_structure(G)
        st[8] = fs is not None and all(fs.kernel.same_elements(S) for _, S in proper_normal)
        if fs is not None:
            result.notes.append(f"Frobenius kernel order {fs.kernel.order}, complement order {fs.complement.order}")
    else:
        st[8] = None
    return result


def theorem_N_branch(G: Group) -> tuple[str, bool]:
    """Which branch of the prime-order-elements trichotomy applies, and whether it holds."""
    if not _all_prime_order(G):
        raise PreconditionError("needs every non-trivial element of prime order")
    if G.order == 1:
        return "trivial", True
    primes = prime_factors(G.order)
    if is_nilpotent(G):
        return "nilpotent", len(primes) == 1 and exponent(G) == primes[0]
    if is_solvable(G):
        fs = frobenius_structure(G)
        if fs is None:
            return "solvable", False
        kp = prime_factors(fs.kernel.order)
        ok = (
            len(kp) == 1
            and exponent(fs.kernel) == kp[0]
            and prime_factors(fs.complement.order) == [fs.complement.order]
            and fs.complement.order != kp[0]
        )
        return "solvable", ok
    return "non-solvable", G.order == 60 and is_simple(G)


def check_theorem_N(G: Group) -> bool:
    return theorem_N_branch(G)[1]


def greatest_normal_p_subgroup(G: Group, r: int) -> Group:
    """O_r(G): the largest normal r-subgroup (products of normal r-subgroups stay normal r-subgroups)."""
    best = None
    for N in normal_subgroups(G):
        if N.order == p_part(N.order, r) and (best is None or N.order > best.order):
            best = N
    assert best is not None
    return best


def _is_generalized_quaternion(Q: Group) -> bool:
    n = Q.order
    return n >= 8 and n & (n - 1) == 0 and Q._orders.count(2) == 1 and not is_cyclic(Q)


def _gh_case(G: Group, r: int) -> int | None:
    R = greatest_normal_p_subgroup(G, r)
    Q = quotient(G, R)
    n = Q.order
    qp = prime_factors(n)
    if is_cyclic(Q) and (n == 1 or (len(qp) == 1 and qp[0] != r)):
        return 1
    if r % 2 and _is_generalized_quaternion(Q):
        return 2
    others = [t for t in qp if t != r]
    if len(others) <= 1:
        ra = p_part(n, r)
        t_ok = not others or others[0] % ra == 1
        if t_ok and all(is_cyclic(sylow_subgroup(Q, s)) for s in qp):
            return 3
    return None


def theorem_GH_cases(G: Group, cap: int | None = None) -> dict[int, int | None]:
    """For each prime r with a non-trivial normal r-subgroup, the matching case 1/2/3 (None if none)."""
    cap = LIMITS.quotient if cap is None else cap
    if not is_cp_group(G) or not is_solvable(G):
        raise PreconditionError("needs a solvable group with all elements of prime-power order")
    if G.order >= cap:
        raise CapExceeded(f"theorem GH check not evaluated at order {G.order} (cap {cap})")
    cases = {}
    for r in prime_factors(G.order):
        if greatest_normal_p_subgroup(G, r).order > 1:
            cases[r] = _gh_case(G, r)
    if not cases:
        raise PreconditionError("no non-trivial normal r-subgroup")
    return cases


def check_theorem_GH(G: Group, cap: int | None = None) -> bool:
    """Every admissible r lands in one of the three quotient shapes, |G| has at most
    two prime divisors, and each G/R is metabelian."""
    cases = theorem_GH_cases(G, cap)
    if any(c is None for c in cases.values()):
        return False
    if len(prime_factors(G.order)) > 2:
        return False
    for r in cases:
        series = derived_series(quotient(G, greatest_normal_p_subgroup(G, r)))
        if len(series) > 3 or series[-1].order != 1:
            return False
    return True
