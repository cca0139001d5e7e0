"""Cyclotomic cosets and narrow-sense (or general) binary BCH codes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .codes import LinearCode
from .errors import EvenLength
from .field import (
    FieldContext,
    cyclotomic_orbit,
    minimal_polynomial,
    multiplicative_order_of_two,
    nth_root_of_unity,
    poly_degree,
    poly_mul,
)
from .gf2 import BitMatrix


def _require_odd(n: int) -> None:
    if n % 2 == 0 or n < 1:
        raise EvenLength(f"cyclic-code length must be odd and positive, got n={n}")


@dataclass(frozen=True)
class CyclotomicCoset:
    n: int
    representative: int
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, i: int) -> bool:
        return i % self.n in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


@lru_cache(maxsize=4096)
def coset(n: int, s: int) -> CyclotomicCoset:
    """The cyclotomic coset of ``s`` mod ``n``, represented by its smallest element."""
    _require_odd(n)
    elements = tuple(sorted(cyclotomic_orbit(n, s)))
    return CyclotomicCoset(n, elements[0], elements)


def cyclotomic_cosets(n: int) -> list[CyclotomicCoset]:
    """The partition of ``{0, ..., n-1}``, ordered by representative."""
    _require_odd(n)
    seen: set[int] = set()
    out = []
    for s in range(n):
        if s not in seen:
            c = coset(n, s)
            seen.update(c.elements)
            out.append(c)
    return out


@dataclass(frozen=True)
class BchSpec:
    """Parameters and defining set of a BCH code of length ``n``.

    ``defining_set`` is the union of the cosets of ``b, ..., b + delta - 2``.
    """

    n: int
    b: int
    delta: int
    defining_set: frozenset[int]
    cosets: tuple[CyclotomicCoset, ...]

    @property
    def k(self) -> int:
        return self.n - len(self.defining_set)

    @property
    def bose_distance(self) -> int:
        """One more than the longest run ``b, b+1, ...`` inside the defining set.

        This is the BCH bound actually guaranteed by the defining set, which
        can exceed the requested ``delta`` when cosets spill over.
        """
        run = 0
        while run < self.n and (self.b + run) % self.n in self.defining_set:
            run += 1
        return run + 1


def defining_set(n: int, b: int, delta: int) -> BchSpec:
    _require_odd(n)
    if delta < 2:
        raise ValueError(f"designed distance must be >= 2, got {delta}")
    cosets: dict[int, CyclotomicCoset] = {}
    for s in range(b, b + delta - 1):
        c = coset(n, s % n)
        cosets.setdefault(c.representative, c)
    union = frozenset(i for c in cosets.values() for i in c.elements)
    return BchSpec(n, b, delta, union, tuple(sorted(cosets.values(), key=lambda c: c.representative)))


def generator_polynomial(spec: BchSpec, ctx: FieldContext | None = None) -> int:
    """``g(x)``: the product of the distinct minimal polynomials of the defining set."""
    _, alpha = nth_root_of_unity(spec.n, ctx)
    g = 1
    for c in spec.cosets:
        g = poly_mul(g, minimal_polynomial(alpha, c.representative, spec.n))
    return g


def cyclic_generator_matrix(g: int, n: int) -> BitMatrix:
    """The ``n - deg(g)`` cyclic shifts ``x^i g(x)`` as rows."""
    deg = poly_degree(g)
    k = n - deg
    coeffs = np.array([(g >> j) & 1 for j in range(deg + 1)], dtype=np.uint8)
    bits = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        bits[i, i : i + deg + 1] = coeffs
    return BitMatrix.from_bits(bits, cols=n)


def bch_code(spec: BchSpec, ctx: FieldContext | None = None) -> LinearCode:
    g = generator_polynomial(spec, ctx)
    if spec.n - poly_degree(g) != spec.k:
        raise AssertionError(f"deg g = {poly_degree(g)} disagrees with |I_C| = {len(spec.defining_set)}")
    return LinearCode.from_generator(
        cyclic_generator_matrix(g, spec.n),
        designed_distance=spec.bose_distance,
        name=f"BCH(n={spec.n}, b={spec.b}, delta={spec.delta})",
    )


def bch_generator_matrix(spec: BchSpec, ctx: FieldContext | None = None) -> LinearCode:
    """Alias of :func:`bch_code`."""
    return bch_code(spec, ctx)


def is_dual_containing(spec: BchSpec) -> bool:
    """No ``i`` in the defining set has ``-i mod n`` in it as well."""
    return all((spec.n - i) % spec.n not in spec.defining_set for i in spec.defining_set)


def max_dual_containing_delta(n: int) -> int:
    """Largest narrow-sense designed distance whose BCH code contains its dual.

    Exhaustive: the defining sets grow with ``delta``, so the first failure
    ends the search. Returns 1 if even ``delta = 2`` fails.
    """
    _require_odd(n)
    best = 1
    for delta in range(2, n + 1):
        if not is_dual_containing(defining_set(n, 1, delta)):
            break
        best = delta
    return best


def c1_lacks_minus_one(n: int) -> bool:
    """``n - 1`` is not in the coset of 1 mod ``n``."""
    _require_odd(n)
    return (n - 1) not in coset(n, 1).elements


def scan_nonprimitive(limit: int) -> list[int]:
    """Odd ``1 < n <= limit`` whose coset of 1 does not contain ``n - 1``."""
    out = []
    for n in range(3, limit + 1, 2):
        passes = c1_lacks_minus_one(n)
        if multiplicative_order_of_two(n) % 2 == 1 and not passes:
            # an odd coset size rules out a self-reciprocal coset
            raise AssertionError(f"ord_{n}(2) is odd yet C_1 contains n-1")
        if passes:
            out.append(n)
    return out


def lengths_with_small_cosets(lo: int, hi: int, max_coset_size: int) -> list[int]:
    """Lengths from :func:`scan_nonprimitive` in ``lo <= n <= hi`` with ``|C_1| <= max_coset_size``.

    A small coset of 1 means few check bits per designed-distance step, i.e.
    high-rate BCH codes.
    """
    return [
        n for n in scan_nonprimitive(hi)
        if n >= lo and coset(n, 1).size <= max_coset_size
    ]
