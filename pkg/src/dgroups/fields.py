"""Small finite fields GF(p^k) in a polynomial basis.

Elements are coefficient tuples, lowest degree first, reduced modulo a fixed
monic irreducible polynomial. Fixed moduli keep reports reproducible:

    GF(4)  x^2 + x + 1
    GF(8)  x^3 + x + 1
    GF(9)  x^2 + 1

Other extension fields use the irreducible polynomial with the smallest
base-p encoding of its lower coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .group import prime_factors

__all__ = ["FiniteField", "FieldElement", "GF", "FieldError", "is_irreducible"]


class FieldError(ValueError):
    pass


FIXED_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
}


def _polymod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = [x % p for x in a]
    k = len(m) - 1
    for d in range(len(a) - 1, k - 1, -1):
        c = a[d]
        if c:
            for i in range(k + 1):
                a[d - k + i] = (a[d - k + i] - c * m[i]) % p
    return (a + [0] * k)[:k]


def is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    k = len(m) - 1
    if k < 1 or m[-1] % p != 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = tuple(low) + (1,)
            if not any(_polymod(list(m), divisor, p)):
                return False
    return True


def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    if (p, k) in FIXED_MODULI:
        return FIXED_MODULI[(p, k)]
    if k == 1:
        return (0, 1)
    for n in range(p**k):
        low = [(n // p**i) % p for i in range(k)]
        m = tuple(low) + (1,)
        if is_irreducible(m, p):
            return m
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


class FiniteField:
    """GF(p^k). Elements are numbered 0..q-1 by their base-p coefficient digits."""

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        if p < 2 or prime_factors(p) != [p]:
            raise FieldError(f"characteristic {p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be positive")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus) if modulus is not None else _default_modulus(p, k)
        if len(self.modulus) != k + 1 or (k > 1 and not is_irreducible(self.modulus, p)):
            raise FieldError(f"modulus {self.modulus} is not irreducible of degree {k}")

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __call__(self, value: int | tuple[int, ...] | list[int]) -> FieldElement:
        if isinstance(value, int):
            if self.k == 1:
                return FieldElement(self, (value % self.p,))
            return self.element(value)
        coeffs = list(value)
        if len(coeffs) > self.k:
            coeffs = _polymod(coeffs, self.modulus, self.p)
        coeffs = [c % self.p for c in coeffs] + [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def element(self, n: int) -> FieldElement:
        """Element numbered n (coefficient i is the i-th base-p digit)."""
        if not 0 <= n < self.q:
            raise FieldError(f"{n} out of range for {self}")
        return FieldElement(self, tuple((n // self.p**i) % self.p for i in range(self.k)))

    def elements(self) -> list[FieldElement]:
        return [self.element(n) for n in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    @property
    def gen(self) -> FieldElement:
        """The class of x (or 1 in a prime field)."""
        if self.k == 1:
            return self.one
        return self((0, 1))

    @cached_property
    def primitive_element(self) -> FieldElement:
        """Smallest-numbered element of multiplicative order q - 1."""
        for n in range(1, self.q):
            a = self.element(n)
            if a.multiplicative_order() == self.q - 1:
                return a
        raise AssertionError("multiplicative group is not cyclic")

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(_polymod(prod, self.modulus, self.p))


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    coeffs: tuple[int, ...]

    @property
    def characteristic(self) -> int:
        return self.field.p

    @property
    def degree(self) -> int:
        return self.field.k

    def __int__(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        if self.field.k == 1:
            return f"{self.coeffs[0]}"
        terms = [f"{c}*x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"

    def _check(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise FieldError("elements of different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __pow__(self, n: int) -> FieldElement:
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.q - 2)

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise FieldError("zero has no multiplicative order")
        one = self.field.one
        x = self
        k = 1
        while x != one:
            x = x * self
            k += 1
        return k


def GF(q: int) -> FiniteField:
    """The field with q elements, q a prime power."""
    ps = prime_factors(q)
    if len(ps) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = ps[0]
    k = 0
    n = q
    while n > 1:
        n //= p
        k += 1
    return FiniteField(p, k)
