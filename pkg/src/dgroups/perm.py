"""Permutations of {1..n} with left-to-right composition.

Points are 1-based in text (cycle notation) and 0-based in storage.
``a * b`` means "apply a, then b", so ``(a * b)(i) == b(a(i))``.
"""
from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "PermutationError",
    "parse_cycles",
    "compose",
    "inverse",
    "element_order",
    "identity",
]


class PermutationError(ValueError):
    """Malformed cycle text, invalid image array or degree mismatch."""


class Permutation:
    """A bijection of {1..degree}, stored as a tuple of 0-based images.

    Instances are immutable and hashable. Ordering is lexicographic on the
    image tuple, so the identity is the minimal element of any group.
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        imgs = tuple(images)
        if check:
            n = len(imgs)
            if n == 0:
                raise PermutationError("degree must be positive")
            if sorted(imgs) != list(range(n)):
                raise PermutationError(f"{imgs} is not a permutation of 0..{n - 1}")
        self._images = imgs
        self._hash = hash(imgs)

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> Permutation:
        return cls(i - 1 for i in images)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        """0-based image tuple."""
        return self._images

    def one_based(self) -> list[int]:
        return [i + 1 for i in self._images]

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self._images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: Permutation) -> bool:
        return self._images < other._images

    def __le__(self, other: Permutation) -> bool:
        return self._images <= other._images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycles()!r}, degree={self.degree})"

    def __str__(self) -> str:
        return self.to_cycles()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles as 1-based tuples, each starting at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self._images[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted lengths of all cycles, fixed points included."""
        seen = [False] * self.degree
        lengths = []
        for start in range(self.degree):
            if seen[start]:
                continue
            k = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self._images[i]
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths))

    def to_cycles(self) -> str:
        """Canonical disjoint cycle form; the identity prints as ``()``."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def order(self) -> int:
        return element_order(self)


def identity(degree: int) -> Permutation:
    return Permutation(range(degree))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4 5)"``.

    ``"()"``, ``"id"`` and the empty string give the identity. Commas may
    separate points inside a cycle. Points not mentioned are fixed.
    """
    if degree < 1:
        raise PermutationError("degree must be positive")
    stripped = text.strip()
    if stripped in ("", "id", "()"):
        return identity(degree)

    images = list(range(degree))
    used: set[int] = set()
    current: list[int] | None = None
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            # only trailing whitespace remains
            break
        where = m.start(m.lastindex) if m.lastindex else pos
        pos = m.end()
        lpar, rpar, num, junk = m.groups()
        if lpar:
            if current is not None:
                raise PermutationError(f"nested '(' at position {where}")
            current = []
        elif rpar:
            if current is None:
                raise PermutationError(f"unmatched ')' at position {where}")
            for a, b in zip(current, current[1:] + current[:1]):
                images[a] = b
            current = None
        elif num:
            if current is None:
                raise PermutationError(f"point outside parentheses at position {where}")
            p = int(num)
            if not 1 <= p <= degree:
                raise PermutationError(f"point {p} out of range 1..{degree} at position {where}")
            if p - 1 in used:
                raise PermutationError(f"point {p} repeated at position {where}")
            used.add(p - 1)
            current.append(p - 1)
        elif junk == ",":
            if current is None:
                raise PermutationError(f"stray ',' at position {where}")
        else:
            raise PermutationError(f"unexpected character {junk!r} at position {where}")
    if current is not None:
        raise PermutationError("unterminated cycle: missing ')'")
    return Permutation(images, check=False)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    if a.degree != b.degree:
        raise PermutationError(f"degree mismatch: {a.degree} vs {b.degree}")
    bi = b.images
    return Permutation([bi[i] for i in a.images], check=False)


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, x in enumerate(a.images):
        inv[x] = i
    return Permutation(inv, check=False)


def element_order(a: Permutation) -> int:
    """Least k >= 1 with a**k the identity (lcm of cycle lengths)."""
    return reduce(math.lcm, a.cycle_type(), 1)
