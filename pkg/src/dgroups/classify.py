"""Place a finite group in the defect-0 / defect-1 taxonomy.

Recognition is purely structural: order factorisation, Sylow shapes,
Frobenius kernels and simplicity. Simple groups of order 60 and 168 are
accepted as A_5 and PSL(2,7); both orders carry exactly one simple group
(a classical fact, cross-checked by isomorphism tests).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

from .deficiency import defect
from .group import (
    Group,
    exponent,
    frobenius_structure,
    is_abelian,
    is_cyclic,
    is_normal,
    is_simple,
    p_part,
    prime_factors,
    sylow_subgroup,
)

__all__ = [
    "ClassificationInconsistency",
    "ClassificationVerdict",
    "classify",
    "recognize",
    "recognize_only",
    "D0_FORMS",
    "D1_FORMS",
]

D0_FORMS = ("Trivial", "Cp", "FrobeniusPQ")
D1_FORMS = ("C4", "Q8", "MersenneFrobenius", "CqC4", "D18", "A5", "PSL27")


class ClassificationInconsistency(RuntimeError):
    """Defect 0 or 1 but no listed form matches: the engine or the theorem is wrong."""


@dataclass
class ClassificationVerdict:
    defect: int
    form: str
    params: tuple[int, ...] = ()
    evidence: list[tuple[str, object]] = field(default_factory=list)

    @property
    def label(self) -> str:
        if not self.params:
            return self.form
        return f"{self.form}(" + ",".join(map(str, self.params)) + ")"

    def __str__(self) -> str:
        return self.label


Evidence = list[tuple[str, object]]


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def _frob(G: Group, ev: Evidence):
    fs = frobenius_structure(G)
    if fs is not None:
        ev.append(("frobenius_kernel_order", fs.kernel.order))
        ev.append(("frobenius_complement_order", fs.complement.order))
    return fs


def _trivial(G: Group, ev: Evidence):
    return () if G.order == 1 else None


def _cp(G: Group, ev: Evidence):
    if _is_prime(G.order) and is_cyclic(G):
        return (G.order,)
    return None


def _frobenius_pq(G: Group, ev: Evidence):
    ps = prime_factors(G.order)
    if len(ps) != 2 or ps[0] * ps[1] != G.order or is_abelian(G):
        return None
    fs = _frob(G, ev)
    if fs is None or not _is_prime(fs.kernel.order):
        return None
    return (fs.kernel.order, fs.complement.order)


def _c4(G: Group, ev: Evidence):
    return () if G.order == 4 and is_cyclic(G) else None


def _q8(G: Group, ev: Evidence):
    if G.order == 8 and G._orders.count(2) == 1 and exponent(G) == 4 and not is_abelian(G):
        ev.append(("involutions", 1))
        return ()
    return None


def _mersenne(G: Group, ev: Evidence):
    n = G.order
    two = p_part(n, 2)
    s = two.bit_length() - 1
    q = n // two
    if s < 2 or q != two - 1 or not _is_prime(q):
        return None
    P = sylow_subgroup(G, 2)
    if not (is_normal(G, P) and is_abelian(P) and exponent(P) == 2):
        return None
    ev.append(("sylow_2", f"elementary abelian of order {P.order}, normal"))
    fs = _frob(G, ev)
    if fs is None or not fs.kernel.same_elements(P):
        return None
    return (s, q)


def _cqc4(G: Group, ev: Evidence):
    q = G.order // 4
    if G.order % 4 or not _is_prime(q) or q % 4 != 1:
        return None
    P = sylow_subgroup(G, 2)
    if not (P.order == 4 and is_cyclic(P)):
        return None
    ev.append(("sylow_2", "cyclic of order 4"))
    fs = _frob(G, ev)
    if fs is None or fs.kernel.order != q:
        return None
    return (q,)


def _d18(G: Group, ev: Evidence):
    if G.order != 18:
        return None
    fs = _frob(G, ev)
    if fs is None or fs.kernel.order != 9 or not is_cyclic(fs.kernel):
        return None
    return ()


def _simple_of_order(n: int) -> Callable[[Group, Evidence], tuple | None]:
    def check(G: Group, ev: Evidence):
        if G.order == n and is_simple(G):
            ev.append(("simple", True))
            return ()
        return None
    return check


_RECOGNIZERS: dict[str, Callable[[Group, Evidence], tuple | None]] = {
    "Trivial": _trivial,
    "Cp": _cp,
    "FrobeniusPQ": _frobenius_pq,
    "C4": _c4,
    "Q8": _q8,
    "MersenneFrobenius": _mersenne,
    "CqC4": _cqc4,
    "D18": _d18,
    "A5": _simple_of_order(60),
    "PSL27": _simple_of_order(168),
}


def recognize(G: Group, form: str, evidence: Evidence | None = None) -> tuple[int, ...] | None:
    """Parameters of ``form`` if G has that structure, else None. Defect is not consulted."""
    if form not in _RECOGNIZERS:
        raise ValueError(f"unknown form {form!r}")
    return _RECOGNIZERS[form](G, evidence if evidence is not None else [])


_FORM_RE = re.compile(r"^\s*(\w+)\s*(?:\((\s*\d+(?:\s*,\s*\d+)*\s*)\))?\s*$")


def recognize_only(G: Group, claimed: str) -> bool:
    """Does G have the claimed structure? ``claimed`` is a tag, optionally with
    parameters, e.g. ``"Cp"`` or ``"MersenneFrobenius(2,3)"``."""
    m = _FORM_RE.match(claimed)
    if m is None:
        raise ValueError(f"cannot parse form {claimed!r}")
    form, args = m.group(1), m.group(2)
    params = recognize(G, form)
    if params is None:
        return False
    if args is None:
        return True
    return params == tuple(int(a) for a in args.split(","))


def classify(G: Group) -> ClassificationVerdict:
    rep = defect(G)
    j = rep.defect
    ev: Evidence = [("order", G.order), ("defect", j)]
    if j == 0:
        forms = D0_FORMS
    elif j == 1:
        forms = D1_FORMS
    else:
        return ClassificationVerdict(j, "OutsideD0D1", (j,), ev)
    for form in forms:
        trial: Evidence = []
        params = recognize(G, form, trial)
        if params is not None:
            return ClassificationVerdict(j, form, params, ev + trial)
    raise ClassificationInconsistency(
        f"group of order {G.order} has defect {j} but matches none of {forms}")
