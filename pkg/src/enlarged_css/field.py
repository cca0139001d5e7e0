"""Arithmetic in GF(2^m) and minimal polynomials of roots of unity.

Polynomials over GF(2) are plain Python ints with bit ``i`` holding the
coefficient of ``x**i``. A field element is such a polynomial of degree
below ``m``, taken modulo the context's irreducible modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CoefficientNotBinary, ContextMismatch, EvenLength, UnsupportedDegree

MAX_DEGREE = 16


# -- polynomials over GF(2) ---------------------------------------------------


def poly_degree(p: int) -> int:
    """Degree of ``p``; the zero polynomial has degree -1."""
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = poly_degree(b)
    q = 0
    while a and poly_degree(a) >= db:
        shift = poly_degree(a) - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_str(p: int, var: str = "x") -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(poly_degree(p), -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return " + ".join(terms)


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree at most ``deg(p) / 2``."""
    d = poly_degree(p)
    if d < 1:
        return False
    for divisor in range(2, 1 << (d // 2 + 1)):
        if poly_mod(p, divisor) == 0:
            return False
    return True


def multiplicative_order_of_two(n: int) -> int:
    """Least ``m >= 1`` with ``2**m == 1 (mod n)``, by direct iteration."""
    if n % 2 == 0:
        raise EvenLength(f"2 has no multiplicative order modulo even n={n}")
    if n == 1:
        return 1
    m, r = 1, 2 % n
    while r != 1:
        r = (2 * r) % n
        m += 1
    return m


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


# -- the field ------------------------------------------------------------------


@dataclass(frozen=True)
class FieldContext:
    """GF(2^m) represented as GF(2)[x] / (modulus)."""

    m: int
    modulus: int
    generator: int

    @property
    def order(self) -> int:
        return 1 << self.m

    def element(self, value: int) -> FieldElement:
        if value < 0 or value >> self.m:
            raise ValueError(f"{value} is not a polynomial of degree < {self.m}")
        return FieldElement(self, value)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def primitive(self) -> FieldElement:
        return FieldElement(self, self.generator)

    # raw-int arithmetic, used by the hot loops below
    def mul(self, a: int, b: int) -> int:
        out = 0
        top = 1 << self.m
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.modulus
        return out

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            if a == 0:
                raise ZeroDivisionError("zero has no inverse")
            e %= self.order - 1
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        group = self.order - 1
        order = group
        for p in _prime_factors(group):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldContext
    value: int

    def _same(self, other: FieldElement) -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch("elements belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.ctx, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: FieldElement) -> FieldElement:
        return field_mul(self, other)

    def __pow__(self, e: int) -> FieldElement:
        return field_pow(self, e)

    def inverse(self) -> FieldElement:
        return field_pow(self, -1)

    def __bool__(self) -> bool:
        return self.value != 0

    @property
    def order(self) -> int:
        return self.ctx.element_order(self.value)

    def __repr__(self) -> str:
        return f"GF(2^{self.ctx.m})[{poly_str(self.value)}]"


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a._same(b)
    return FieldElement(a.ctx, a.ctx.mul(a.value, b.value))


def field_pow(a: FieldElement, e: int) -> FieldElement:
    return FieldElement(a.ctx, a.ctx.pow(a.value, e))


def least_irreducible(m: int) -> int:
    """The irreducible polynomial of degree ``m`` with the smallest integer encoding."""
    for p in range(1 << m, 1 << (m + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError(f"no irreducible polynomial of degree {m}")  # unreachable


@lru_cache(maxsize=None)
def make_field(m: int, modulus: int | None = None) -> FieldContext:
    """Build GF(2^m) with a verified irreducible modulus and primitive generator.

    By default the modulus is the lexicographically least irreducible polynomial
    and the generator is the least element of full multiplicative order, so
    every derived object (roots of unity, BCH generators) is deterministic.
    """
    if not 1 <= m <= MAX_DEGREE:
        raise UnsupportedDegree(f"degree m={m} outside 1..{MAX_DEGREE}")
    if modulus is None:
        modulus = least_irreducible(m)
    elif poly_degree(modulus) != m or not is_irreducible(modulus):
        raise ValueError(f"{poly_str(modulus)} is not an irreducible polynomial of degree {m}")
    probe = FieldContext(m, modulus, 1)
    group = (1 << m) - 1
    generator = next(g for g in range(1, 1 << m) if probe.element_order(g) == group)
    return FieldContext(m, modulus, generator)


def nth_root_of_unity(n: int, ctx: FieldContext | None = None) -> tuple[FieldContext, FieldElement]:
    """A primitive ``n``-th root of unity, ``gamma ** ((2^m - 1) / n)`` with ``m = ord_n(2)``."""
    if n % 2 == 0:
        raise EvenLength(f"no n-th roots of unity over GF(2) for even n={n}")
    m = multiplicative_order_of_two(n)
    if ctx is None:
        ctx = make_field(m)
    elif ctx.m != m:
        raise ContextMismatch(f"n={n} needs GF(2^{m}), got GF(2^{ctx.m})")
    alpha = field_pow(ctx.primitive, ((1 << m) - 1) // n)
    return ctx, alpha


def cyclotomic_orbit(n: int, s: int) -> list[int]:
    """Doubling orbit ``s, 2s, 4s, ...`` modulo ``n`` in generation order."""
    orbit, x = [], s % n
    while x not in orbit:
        orbit.append(x)
        x = (2 * x) % n
    return orbit


def minimal_polynomial(alpha: FieldElement, s: int, n: int) -> int:
    """``prod_{i in C_s} (x - alpha^i)`` as a GF(2) polynomial.

    ``alpha`` must have multiplicative order ``n``.
    """
    ctx = alpha.ctx
    # coefficients in GF(2^m), lowest degree first; start from the constant 1
    coeffs = [1]
    for i in cyclotomic_orbit(n, s):
        root = ctx.pow(alpha.value, i)
        shifted = [0] + coeffs
        for j, c in enumerate(coeffs):
            shifted[j] ^= ctx.mul(c, root)
        coeffs = shifted
    out = 0
    for j, c in enumerate(coeffs):
        if c not in (0, 1):
            raise CoefficientNotBinary(f"coefficient of x^{j} is {poly_str(c, 'a')}, not in GF(2)")
        out |= c << j
    return out


def poly_eval(p: int, point: FieldElement) -> FieldElement:
    """Evaluate a GF(2) polynomial at a field element (Horner)."""
    ctx = point.ctx
    acc = 0
    for j in range(poly_degree(p), -1, -1):
        acc = ctx.mul(acc, point.value) ^ (p >> j & 1)
    return FieldElement(ctx, acc)
